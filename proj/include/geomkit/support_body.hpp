#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "geomkit/polygon.hpp"

namespace geomkit {

inline constexpr std::size_t kDefaultSupportGrid = 7200;

/// Convex body sampled through its support function h(theta_k),
/// theta_k = 2*pi*k/N. N must be even so that theta + pi is on the grid.
class SupportBody {
 public:
  /// Validates positive width in every sampled direction and the discrete
  /// convexity condition h[k-1] + h[k+1] >= 2 h[k] cos(2 pi / N).
  explicit SupportBody(std::vector<double> samples);

  static SupportBody from_function(const std::function<double(double)>& h,
                                   std::size_t n = kDefaultSupportGrid);

  std::size_t size() const { return h_.size(); }
  const std::vector<double>& samples() const { return h_; }
  double theta(std::size_t k) const;
  double width(std::size_t k) const { return h_[k] + h_[(k + h_.size() / 2) % h_.size()]; }

  /// Pointwise (1-t) a + t b, i.e. the Minkowski combination.
  static SupportBody combine(const SupportBody& a, const SupportBody& b, double t);

 private:
  std::vector<double> h_;
};

struct SupportMetrics {
  double area = 0.0;
  double perimeter = 0.0;
  double mean_width = 0.0;
  double diameter = 0.0;   // max sampled width
  double min_width = 0.0;  // min sampled width
};

/// Perimeter by the trapezoid rule on h, area by 1/2 * integral (h^2 - h'^2)
/// with a centred difference for h', mean width as the grid average of
/// h(theta) + h(theta + pi).
SupportMetrics support_body_metrics(const SupportBody& b);

/// Boundary reconstruction x(theta) = h u + h' u_perp at each grid direction.
std::vector<Vec2> outline(const SupportBody& b);

}  // namespace geomkit
