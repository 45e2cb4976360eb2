#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace geomkit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

/// Signed shoelace area (positive for counterclockwise order).
double signed_area(std::span<const Vec2> pts);
double path_perimeter_closed(std::span<const Vec2> pts);

/// Tolerance for merging duplicate points and collinear triples.
inline constexpr double kCleanupTol = 1e-12;

/// Strictly convex polygon, counterclockwise, starting at the
/// lexicographically smallest vertex.
class ConvexPolygon {
 public:
  /// Takes a vertex cycle in either orientation. Duplicate points and
  /// collinear triples are merged; throws std::invalid_argument when the
  /// result is not strictly convex or has zero area.
  static ConvexPolygon from_cycle(std::vector<Vec2> pts);
  /// Convex hull of an arbitrary point set (Andrew's monotone chain).
  static ConvexPolygon hull_of(std::vector<Vec2> pts);
  /// Axis-aligned [0,w] x [0,h].
  static ConvexPolygon rectangle(double w, double h);
  /// Regular n-gon with the given circumradius centred at the origin, one
  /// vertex on the positive x axis.
  static ConvexPolygon regular(int n, double circumradius = 1.0);

  const std::vector<Vec2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Vec2& operator[](std::size_t i) const { return v_[i % v_.size()]; }

 private:
  explicit ConvexPolygon(std::vector<Vec2> v) : v_(std::move(v)) {}
  std::vector<Vec2> v_;
};

struct PolygonMetrics {
  double area = 0.0;
  double perimeter = 0.0;
};

PolygonMetrics polygon_metrics(const ConvexPolygon& p);

/// Rotating calipers: maximum distance over antipodal vertex pairs.
double diameter(const ConvexPolygon& p);
/// Rotating calipers: minimum over edges of the farthest vertex distance.
double min_width(const ConvexPolygon& p);

/// True if the closed cycle turns left (or goes straight within tol) at every
/// vertex, in either global orientation.
bool is_convex_cycle(std::span<const Vec2> pts, double tol = 1e-9);

}  // namespace geomkit
