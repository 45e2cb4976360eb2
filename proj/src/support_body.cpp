#include "geomkit/support_body.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geomkit {

SupportBody::SupportBody(std::vector<double> samples) : h_(std::move(samples)) {
  const std::size_t n = h_.size();
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("support grid size must be even and >= 8");
  double scale = 0.0;
  for (double v : h_) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; k < n; ++k)
    if (!(width(k) > 0)) throw std::invalid_argument("support body has non-positive width");
  const double c = std::cos(2.0 * std::numbers::pi / static_cast<double>(n));
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double lhs = h_[(k + n - 1) % n] + h_[(k + 1) % n];
    if (lhs < 2.0 * h_[k] * c - tol) throw std::invalid_argument("support samples are not convex");
  }
}

SupportBody SupportBody::from_function(const std::function<double(double)>& h, std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = h(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return SupportBody(std::move(s));
}

double SupportBody::theta(std::size_t k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(h_.size());
}

SupportBody SupportBody::combine(const SupportBody& a, const SupportBody& b, double t) {
  if (a.size() != b.size()) throw std::invalid_argument("support grids differ");
  std::vector<double> s(a.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = (1.0 - t) * a.h_[k] + t * b.h_[k];
  return SupportBody(std::move(s));
}

SupportMetrics support_body_metrics(const SupportBody& b) {
  const auto& h = b.samples();
  const std::size_t n = h.size();
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(n);
  SupportMetrics m;
  double sum_h = 0.0, sum_area = 0.0, sum_w = 0.0;
  m.diameter = 0.0;
  m.min_width = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double dh = (h[(k + 1) % n] - h[(k + n - 1) % n]) / (2.0 * dt);
    sum_h += h[k];
    sum_area += h[k] * h[k] - dh * dh;
    const double w = b.width(k);
    sum_w += w;
    m.diameter = std::max(m.diameter, w);
    m.min_width = std::min(m.min_width, w);
  }
  m.perimeter = sum_h * dt;
  m.area = 0.5 * sum_area * dt;
  m.mean_width = sum_w / static_cast<double>(n);
  return m;
}

std::vector<Vec2> outline(const SupportBody& b) {
  const auto& h = b.samples();
  const std::size_t n = h.size();
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<Vec2> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = b.theta(k);
    const double dh = (h[(k + 1) % n] - h[(k + n - 1) % n]) / (2.0 * dt);
    const Vec2 u{std::cos(th), std::sin(th)};
    const Vec2 up{-u.y, u.x};
    pts.push_back(h[k] * u + dh * up);
  }
  return pts;
}

}  // namespace geomkit
