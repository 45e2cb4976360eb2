#include "geomkit/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geomkit::shapes {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
const double kSqrt3 = std::sqrt(3.0);

// The lens solver relies on A/p^2 increasing in alpha; checked once.
bool lens_ratio_monotone() {
  constexpr int kGrid = 10000;
  double prev = 0.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double q = lens_shape_ratio(kHalfPi * i / kGrid);
    if (!(q > prev)) return false;
    prev = q;
  }
  return true;
}

template <class F>
double bisect_increasing(F&& f, double lo, double hi, double target) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double Lens::radius() const { return d / (2.0 * std::sin(alpha)); }

ShapeMetrics lens_metrics(const Lens& l) {
  if (!(l.d > 0.0) || !(l.alpha > 0.0 && l.alpha <= kHalfPi)) throw std::invalid_argument("invalid lens");
  const double r = l.radius();
  return {2.0 * r * r * (l.alpha - std::sin(l.alpha) * std::cos(l.alpha)), 4.0 * l.alpha * r, l.d};
}

std::vector<Vec2> lens_outline(const Lens& l, int points_per_arc) {
  const double r = l.radius();
  const double c = r * std::cos(l.alpha);
  std::vector<Vec2> out;
  for (int i = 0; i < points_per_arc; ++i) {
    const double a = kHalfPi - l.alpha + 2.0 * l.alpha * i / points_per_arc;
    out.push_back({r * std::cos(a), -c + r * std::sin(a)});
  }
  for (int i = 0; i < points_per_arc; ++i) {
    const double a = 3.0 * kHalfPi - l.alpha + 2.0 * l.alpha * i / points_per_arc;
    out.push_back({r * std::cos(a), c + r * std::sin(a)});
  }
  return out;
}

double lens_shape_ratio(double alpha) {
  return (alpha - std::sin(alpha) * std::cos(alpha)) / (8.0 * alpha * alpha);
}

std::variant<Lens, Infeasible> max_diameter_shape(double area, double perimeter) {
  static const bool monotone = lens_ratio_monotone();
  if (!monotone) throw std::logic_error("lens area/perimeter ratio is not monotone on the check grid");
  if (!(area > 0.0) || !(perimeter > 0.0)) return Infeasible{"area and perimeter must be positive"};
  const double p2 = perimeter * perimeter;
  if (p2 < 4.0 * kPi * area * (1.0 - 1e-12))
    return Infeasible{"perimeter^2 < 4 pi area: no convex region exists"};
  const double q = area / p2;
  if (q >= 1.0 / (4.0 * kPi)) return Lens{perimeter / kPi, kHalfPi};
  const double alpha = bisect_increasing(lens_shape_ratio, 0.0, kHalfPi, q);
  const double r = perimeter / (4.0 * alpha);
  return Lens{2.0 * r * std::sin(alpha), alpha};
}

ShapeMetrics reuleaux_metrics(double width) {
  if (!(width > 0.0)) throw std::invalid_argument("width must be positive");
  return {0.5 * (kPi - kSqrt3) * width * width, kPi * width, width};
}

double reuleaux_support(double theta, double width) {
  const double u[2] = {std::cos(theta), std::sin(theta)};
  const double rc = width / kSqrt3;
  double best = -INFINITY;
  for (int k = 0; k < 3; ++k) {
    const double a = kHalfPi + 2.0 * kPi * k / 3.0;
    const double vx = rc * std::cos(a), vy = rc * std::sin(a);
    const double base = vx * u[0] + vy * u[1];
    best = std::max(best, base);
    // Arc centred at vertex k faces the direction opposite to it, +-30 deg.
    if (-(std::cos(a) * u[0] + std::sin(a) * u[1]) >= std::cos(kPi / 6.0) - 1e-15) best = std::max(best, base + width);
  }
  return best;
}

ShapeMetrics sector_metrics(double r, double phi) {
  if (!(r > 0.0) || !(phi > 0.0 && phi < kPi + 1e-15)) throw std::invalid_argument("invalid sector");
  return {0.5 * r * r * phi, r * (2.0 + phi), std::max(r, 2.0 * r * std::sin(phi / 2.0))};
}

std::vector<Vec2> sector_outline(double r, double phi, int arc_points) {
  std::vector<Vec2> out{{0.0, 0.0}};
  for (int i = 0; i <= arc_points; ++i) {
    const double a = phi * i / arc_points;
    out.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

SupportBody interpolate_constant_width(double t, std::size_t n) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0, 1]");
  return SupportBody::from_function([t](double th) { return (1.0 - t) * reuleaux_support(th, 1.0) + t * 0.5; }, n);
}

double constant_width_area(double t, double perimeter) {
  const double w = perimeter / kPi;
  const double disc = kPi * w * w / 4.0;
  const double reu = reuleaux_metrics(w).area;
  return disc - (1.0 - t) * (1.0 - t) * (disc - reu);
}

std::optional<SectorFit> fit_sector(double perimeter, double area) {
  if (!(perimeter > 0.0) || !(area > 0.0)) return std::nullopt;
  // A = p^2 phi / (2 (2 + phi)^2); g peaks at phi = 2.
  const auto g = [](double phi) { return phi / ((2.0 + phi) * (2.0 + phi)); };
  const double target = 2.0 * area / (perimeter * perimeter);
  if (target > g(2.0)) return std::nullopt;
  std::vector<double> roots{bisect_increasing(g, 0.0, 2.0, target)};
  if (target > g(kPi)) roots.push_back(bisect_increasing([&](double x) { return -g(x); }, 2.0, kPi, -target));
  std::optional<SectorFit> best;
  for (double phi : roots) {
    const double r = perimeter / (2.0 + phi);
    SectorFit f{r, phi, sector_metrics(r, phi)};
    if (!best || f.metrics.diameter < best->metrics.diameter) best = f;
  }
  return best;
}

std::variant<MinDiameterReport, Infeasible> min_diameter_explore(double perimeter, double area) {
  if (!(perimeter > 0.0) || !(area > 0.0)) return Infeasible{"area and perimeter must be positive"};
  const double w = perimeter / kPi;
  const double disc = kPi * w * w / 4.0;
  if (area > disc * (1.0 + 1e-12)) return Infeasible{"area exceeds the disc with this perimeter"};
  const double reu = reuleaux_metrics(w).area;

  MinDiameterReport rep;
  if (std::abs(area - disc) <= 1e-12 * disc) {
    rep.candidates.push_back({"disc", w, {{"radius", w / 2.0}}});
  } else if (area >= reu * (1.0 - 1e-12)) {
    const double t = 1.0 - std::sqrt(std::max(0.0, (disc - area) / (disc - reu)));
    rep.candidates.push_back({"constant_width", w, {{"t", t}, {"width", w}}});
  }
  if (auto s = fit_sector(perimeter, area))
    rep.candidates.push_back({"sector", s->metrics.diameter, {{"r", s->r}, {"phi", s->phi}}});

  rep.best_family = "unknown";
  for (const auto& c : rep.candidates)
    if (rep.best_family == "unknown" || c.diameter < rep.diameter) {
      rep.best_family = c.family;
      rep.diameter = c.diameter;
      rep.shape_params = c.params;
    }
  if (auto lens = max_diameter_shape(area, perimeter); std::holds_alternative<Lens>(lens)) {
    const Lens& l = std::get<Lens>(lens);
    rep.candidates.push_back({"lens", l.d, {{"d", l.d}, {"alpha", l.alpha}}});
  }
  return rep;
}

CrossoverReport crossover_scan(double perimeter, int samples) {
  if (samples < 3) throw std::invalid_argument("crossover scan needs at least 3 samples");
  CrossoverReport rep;
  const double w = perimeter / kPi;
  rep.reuleaux_area = reuleaux_metrics(w).area;
  rep.constant_width_diameter = w;
  rep.sector_at_reuleaux_area = fit_sector(perimeter, rep.reuleaux_area);

  const auto diam = [&](double a) {
    auto s = fit_sector(perimeter, a);
    return s ? s->metrics.diameter : INFINITY;
  };
  int best_k = 0;
  double best = INFINITY;
  for (int k = 0; k < samples; ++k) {
    const double d = diam(rep.reuleaux_area * (1.0 - static_cast<double>(k) / samples));
    if (d < best) {
      best = d;
      best_k = k;
    }
  }
  double lo = rep.reuleaux_area * (1.0 - static_cast<double>(std::min(best_k + 1, samples - 1)) / samples);
  double hi = rep.reuleaux_area * (1.0 - static_cast<double>(std::max(best_k - 1, 0)) / samples);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (diam(m1) < diam(m2))
      hi = m2;
    else
      lo = m1;
  }
  rep.c_hat = 0.5 * (lo + hi);

  const double phi = kPi / 3.0;
  const double r = perimeter / (2.0 + phi);
  rep.sector_at_crossover = {r, phi, sector_metrics(r, phi)};
  rep.sector_at_reference_c = fit_sector(perimeter, rep.reference_c);
  return rep;
}

}  // namespace geomkit::shapes
