#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geomkit/polygon.hpp"
#include "geomkit/support_body.hpp"

namespace geomkit::shapes {

inline constexpr double kDefaultPerimeter = 3.14159265358979323846;

/// Intersection of two congruent discs; d is the common chord, alpha the
/// half-angle of each arc.
struct Lens {
  double d = 1.0;
  double alpha = 1.5707963267948966;

  double radius() const;
};

struct ShapeMetrics {
  double area = 0.0;
  double perimeter = 0.0;
  double diameter = 0.0;
};

ShapeMetrics lens_metrics(const Lens& l);
std::vector<Vec2> lens_outline(const Lens& l, int points_per_arc = 256);

struct Infeasible {
  std::string reason;
};

/// Lens with the given area and perimeter; the disc at p^2 = 4 pi A.
/// Infeasible when p^2 < 4 pi A (1 - 1e-12).
std::variant<Lens, Infeasible> max_diameter_shape(double area, double perimeter);

/// A / p^2 of a lens as a function of alpha: (alpha - sin cos) / (8 alpha^2).
double lens_shape_ratio(double alpha);

ShapeMetrics reuleaux_metrics(double width);
/// Support function of the Reuleaux triangle of the given width, centred at
/// its centroid with one vertex on the positive y axis.
double reuleaux_support(double theta, double width = 1.0);

ShapeMetrics sector_metrics(double r, double phi);
std::vector<Vec2> sector_outline(double r, double phi, int arc_points = 256);

/// (1 - t) Reuleaux + t disc, both of width 1.
SupportBody interpolate_constant_width(double t, std::size_t n = kDefaultSupportGrid);

/// Exact area of the interpolant: A_disc - (1 - t)^2 (A_disc - A_reuleaux),
/// scaled to width p / pi.
double constant_width_area(double t, double perimeter = kDefaultPerimeter);

struct SectorFit {
  double r = 0.0;
  double phi = 0.0;
  ShapeMetrics metrics;
};

/// Sector with perimeter p and area A (phi < pi); of two solutions the one
/// with the smaller diameter.
std::optional<SectorFit> fit_sector(double perimeter, double area);

struct Candidate {
  std::string family;  // "disc", "constant_width", "sector", "lens"
  double diameter = 0.0;
  std::vector<std::pair<std::string, double>> params;
};

struct MinDiameterReport {
  std::string best_family;
  double diameter = 0.0;
  std::vector<std::pair<std::string, double>> shape_params;
  std::vector<Candidate> candidates;
};

std::variant<MinDiameterReport, Infeasible> min_diameter_explore(double perimeter, double area);

struct CrossoverReport {
  double c_hat = 0.0;                // area where the sector diameter is smallest
  SectorFit sector_at_crossover;     // phi = pi / 3
  std::optional<SectorFit> sector_at_reference_c;
  double reference_c = 0.57;
  double reference_diameter = 1.045;
  double reuleaux_area = 0.0;
  double constant_width_diameter = 0.0;
  std::optional<SectorFit> sector_at_reuleaux_area;
};

/// Scans A downward from the Reuleaux area and reports where the sector
/// family is at its smallest diameter.
CrossoverReport crossover_scan(double perimeter = kDefaultPerimeter, int samples = 10000);

}  // namespace geomkit::shapes
