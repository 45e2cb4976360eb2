#include "geomkit/polygon.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace geomkit {

double signed_area(std::span<const Vec2> pts) {
  double s = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(pts[i], pts[(i + 1) % n]);
  return 0.5 * s;
}

double path_perimeter_closed(std::span<const Vec2> pts) {
  double s = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) s += dist(pts[i], pts[(i + 1) % n]);
  return s;
}

namespace {

double scale_of(std::span<const Vec2> pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return std::max(s, 1.0);
}

}  // namespace

ConvexPolygon ConvexPolygon::from_cycle(std::vector<Vec2> pts) {
  if (pts.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  if (signed_area(pts) < 0) std::reverse(pts.begin(), pts.end());
  const double scale = scale_of(pts);
  const double dup_tol = kCleanupTol * scale;

  // Merge duplicates, then collinear triples, until stable.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size() && pts.size() >= 3; ++i) {
      const std::size_t n = pts.size();
      const Vec2 a = pts[(i + n - 1) % n], b = pts[i], c = pts[(i + 1) % n];
      const bool dup = dist(a, b) <= dup_tol;
      const double len = std::max(dist(a, b) * dist(b, c), dup_tol * dup_tol);
      const bool collinear = std::abs(cross(b - a, c - b)) <= kCleanupTol * len && dot(b - a, c - b) > 0;
      if (dup || collinear) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  if (pts.size() < 3) throw std::invalid_argument("degenerate polygon after cleanup");
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i], b = pts[(i + 1) % n], c = pts[(i + 2) % n];
    if (cross(b - a, c - b) <= 0) throw std::invalid_argument("polygon is not strictly convex");
  }
  if (signed_area(pts) <= 0) throw std::invalid_argument("polygon has no area");
  auto first = std::min_element(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::rotate(pts.begin(), first, pts.end());
  return ConvexPolygon(std::move(pts));
}

ConvexPolygon ConvexPolygon::hull_of(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw std::invalid_argument("hull needs at least 3 distinct points");
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return from_cycle(std::move(h));
}

ConvexPolygon ConvexPolygon::rectangle(double w, double h) {
  if (!(w > 0 && h > 0)) throw std::invalid_argument("rectangle sides must be positive");
  return from_cycle({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

ConvexPolygon ConvexPolygon::regular(int n, double circumradius) {
  if (n < 3) throw std::invalid_argument("regular polygon needs n >= 3");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    v.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return from_cycle(std::move(v));
}

PolygonMetrics polygon_metrics(const ConvexPolygon& p) {
  return {signed_area(p.vertices()), path_perimeter_closed(p.vertices())};
}

double diameter(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  double best = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    // Advance the antipodal pointer while the triangle area grows.
    while (cross(e, v[(j + 1) % n] - v[i]) > cross(e, v[j % n] - v[i])) j = (j + 1) % n;
    best = std::max({best, dist(v[i], v[j % n]), dist(v[(i + 1) % n], v[j % n])});
  }
  return best;
}

double min_width(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    while (cross(e, v[(j + 1) % n] - v[i]) > cross(e, v[j % n] - v[i])) j = (j + 1) % n;
    best = std::min(best, cross(e, v[j % n] - v[i]) / norm(e));
  }
  return best;
}

bool is_convex_cycle(std::span<const Vec2> pts, double tol) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  const double orient = signed_area(pts) >= 0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i], b = pts[(i + 1) % n], c = pts[(i + 2) % n];
    if (orient * cross(b - a, c - b) < -tol * std::max(1.0, norm(b - a) * norm(c - b))) return false;
  }
  return true;
}

}  // namespace geomkit
