#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "geomkit/polygon.hpp"

namespace geomkit::fair {

/// Line {p : n.p = offset} with normal n = (-sin theta, cos theta),
/// theta in [0, pi). Piece a is the side n.p <= offset.
struct LineCut {
  double theta = 0.0;
  double offset = 0.0;

  Vec2 normal() const;
  /// Cut with direction angle phi (any value), keeping the same line and
  /// the same negative side up to the theta normalisation. The second member
  /// is true when the normalisation flipped the normal.
  static std::pair<LineCut, bool> oriented(double phi, double offset);
};

struct SplitResult {
  std::vector<Vec2> piece_a;
  std::vector<Vec2> piece_b;
  double cut_length = 0.0;
  double area_a = 0.0, area_b = 0.0;
  double perimeter_a = 0.0, perimeter_b = 0.0;
};

struct NoIntersection {};

std::variant<SplitResult, NoIntersection> split(const ConvexPolygon& c, const LineCut& cut);

/// Area ratio a : b, canonicalised so that a <= b.
struct RatioTarget {
  double a = 1.0;
  double b = 1.0;

  RatioTarget() = default;
  RatioTarget(double a, double b);
  double fraction() const { return a / (a + b); }
  double perimeter_ratio() const;
};

/// Offset at which piece a holds fraction f of the area, by bisection.
LineCut solve_offset_for_area(const ConvexPolygon& c, double theta, double f);

/// Cut at oriented direction phi in [0, 2 pi) whose negative side holds
/// fraction f, plus its split. `target_is_a` tells which piece that is.
struct OrientedCut {
  double phi = 0.0;
  LineCut cut;
  bool target_is_a = true;
  SplitResult split;

  double target_perimeter() const { return target_is_a ? split.perimeter_a : split.perimeter_b; }
  double other_perimeter() const { return target_is_a ? split.perimeter_b : split.perimeter_a; }
  double target_area() const { return target_is_a ? split.area_a : split.area_b; }
  double rho() const { return target_perimeter() / other_perimeter(); }
};

OrientedCut oriented_area_cut(const ConvexPolygon& c, double phi, double f);

/// rho(phi) = perimeter of the a-share piece / perimeter of the b-share
/// piece, at phi_k = 2 pi k / samples.
struct ProfileSample {
  double phi = 0.0;
  LineCut cut;
  double rho = 0.0;
};
std::vector<ProfileSample> perimeter_ratio_profile(const ConvexPolygon& c, const RatioTarget& target,
                                                   int samples = 720);

struct NotFound {
  double rho_min = 0.0;
  double rho_max = 0.0;
};

using FairCutResult = std::variant<OrientedCut, NotFound>;

/// Scans rho(phi), brackets a crossing of sqrt(a/b) and refines it by
/// bisection in phi.
FairCutResult find_scaled_fair_cut(const ConvexPolygon& c, const RatioTarget& target, double tol = 1e-12,
                                   int samples = 720);

struct DiscChord {
  double half_angle = 0.0;
  double rho = 0.0;
  double target_rho = 0.0;
  bool achievable = false;
};

/// Unit-disc chord cut with areas a : b, from
/// theta - sin(theta) cos(theta) = pi a / (a + b).
DiscChord disc_chord_analysis(const RatioTarget& target);

/// Area-halving cut that also halves the perimeter.
OrientedCut equal_fair_cut(const ConvexPolygon& c);

/// Where the boundary arc of a band is centred.
enum class BandAnchor { LowerLeftCorner, BottomMidpoint };

/// Band of thickness t along the boundary arc of length s * perimeter of
/// [0,W] x [0,H], centred on the anchor point.
struct BandSample {
  double s = 0.0;
  double t = 0.0;
  double area_band = 0.0, area_rest = 0.0;
  double perimeter_band = 0.0, perimeter_rest = 0.0;
  double rho = 0.0;  // perimeter_band / perimeter_rest
  bool convex = true;
};

/// nullopt when no t <= min(W, H) / 2 gives the band the a-share of the
/// area at this s.
std::optional<BandSample> band_partition(double width, double height, const RatioTarget& target, double s,
                                         BandAnchor anchor = BandAnchor::LowerLeftCorner);

struct BandSolution {
  double s_low = 0.0;  // smallest feasible arc fraction
  BandSample low;
  BandSample solution;
};

/// Bisects s between the smallest feasible arc and the half boundary. When
/// rho jumps over the target, NotFound carries the one-sided values.
std::variant<BandSolution, NotFound> solve_band(double width, double height, const RatioTarget& target,
                                                double tol = 1e-9, BandAnchor anchor = BandAnchor::LowerLeftCorner);

}  // namespace geomkit::fair
