#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geomkit/extremal.hpp"
#include "test_util.hpp"

using namespace geomkit;
using namespace geomkit::shapes;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("lens metrics match a fine polygonal outline") {
  for (double alpha : {0.3, 0.9, 1.4, kPi / 2}) {
    const Lens l{1.3, alpha};
    const auto m = lens_metrics(l);
    const auto outline = lens_outline(l, 4096);
    double per = 0.0;
    for (std::size_t i = 0; i < outline.size(); ++i) per += dist(outline[i], outline[(i + 1) % outline.size()]);
    CHECK(std::abs(std::abs(signed_area(outline)) - m.area) < 1e-5);
    CHECK(std::abs(per - m.perimeter) < 1e-5);
    CHECK(std::abs(testutil::brute_diameter(outline) - m.diameter) < 1e-5);
  }
}

TEST_CASE("max diameter shape round-trips and bounds") {
  const auto disc = max_diameter_shape(kPi, 2 * kPi);
  REQUIRE(std::holds_alternative<Lens>(disc));
  CHECK(std::get<Lens>(disc).d == doctest::Approx(2.0).epsilon(1e-9));

  CHECK(std::holds_alternative<Infeasible>(max_diameter_shape(1.0, 3.0)));

  const auto r = max_diameter_shape(1.0, 4.5);
  REQUIRE(std::holds_alternative<Lens>(r));
  const auto m = lens_metrics(std::get<Lens>(r));
  CHECK(m.area == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(m.perimeter == doctest::Approx(4.5).epsilon(1e-9));
  CHECK(m.diameter < 4.5 / 2);
}

TEST_CASE("no convex polygon beats the lens diameter") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> nd(3, 30);
  for (int i = 0; i < 500; ++i) {
    const auto p = testutil::random_convex_polygon(rng, nd(rng));
    const auto pm = polygon_metrics(p);
    const auto r = max_diameter_shape(pm.area, pm.perimeter);
    REQUIRE(std::holds_alternative<Lens>(r));
    CHECK(diameter(p) <= std::get<Lens>(r).d * (1 + 1e-9));
  }
}

TEST_CASE("lens shape ratio is decreasing toward thin lenses") {
  CHECK(lens_shape_ratio(kPi / 2) == doctest::Approx(1.0 / (4 * kPi)));
  double prev = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double v = lens_shape_ratio(kPi / 2 * k / 50);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("Reuleaux triangle") {
  const auto m = reuleaux_metrics(1.0);
  CHECK(m.area == doctest::Approx((kPi - std::sqrt(3.0)) / 2).epsilon(1e-12));
  CHECK(m.perimeter == doctest::Approx(kPi));
  CHECK(m.diameter == doctest::Approx(1.0));
  // Constant width.
  for (double t = 0.0; t < kPi; t += 0.1) CHECK(reuleaux_support(t) + reuleaux_support(t + kPi) == doctest::Approx(1.0));
}

TEST_CASE("constant-width interpolant") {
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto m = support_body_metrics(interpolate_constant_width(t));
    CHECK(std::abs(m.area - constant_width_area(t)) < 1e-6);
    CHECK(std::abs(m.perimeter - kPi) < 1e-9);
    CHECK(std::abs(m.diameter - 1.0) < 1e-9);
    CHECK(std::abs(m.min_width - 1.0) < 1e-9);
  }
  CHECK(constant_width_area(1.0) == doctest::Approx(kPi / 4));
  CHECK(constant_width_area(0.0, 2 * kPi) == doctest::Approx(4 * reuleaux_metrics(1.0).area));
}

TEST_CASE("sector fit") {
  const auto s = sector_metrics(1.0, kPi / 3);
  CHECK(s.perimeter == doctest::Approx(2 + kPi / 3));
  CHECK(s.area == doctest::Approx(kPi / 6));
  CHECK(s.diameter == doctest::Approx(1.0));
  const auto fit = fit_sector(s.perimeter, s.area);
  REQUIRE(fit.has_value());
  CHECK(fit->r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit->phi == doctest::Approx(kPi / 3).epsilon(1e-9));

  for (double a : {0.3, 0.45, 0.6}) {
    const auto f = fit_sector(kPi, a);
    REQUIRE(f.has_value());
    CHECK(f->metrics.area == doctest::Approx(a).epsilon(1e-9));
    CHECK(f->metrics.perimeter == doctest::Approx(kPi).epsilon(1e-9));
    const auto outline = sector_outline(f->r, f->phi, 4096);
    CHECK(std::abs(testutil::brute_diameter(outline) - f->metrics.diameter) < 1e-5);
  }
  CHECK_FALSE(fit_sector(kPi, 1.0).has_value());
}

TEST_CASE("min diameter exploration respects D >= p / pi") {
  for (double a : {0.2, 0.5, 0.65, 0.7}) {
    const auto r = min_diameter_explore(kPi, a);
    REQUIRE(std::holds_alternative<MinDiameterReport>(r));
    for (const auto& c : std::get<MinDiameterReport>(r).candidates) CHECK(c.diameter >= 1.0 - 1e-9);
  }
  CHECK(std::holds_alternative<Infeasible>(min_diameter_explore(kPi, 0.8)));
}

TEST_CASE("crossover scan") {
  const auto c = crossover_scan();
  CHECK(c.sector_at_crossover.phi == doctest::Approx(kPi / 3).epsilon(1e-6));
  CHECK(c.c_hat == doctest::Approx(c.sector_at_crossover.metrics.area).epsilon(1e-6));
  CHECK(c.c_hat < c.reuleaux_area);
  CHECK(c.constant_width_diameter == doctest::Approx(1.0));
}
