#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "geomkit/fair_partition.hpp"
#include "test_util.hpp"

using namespace geomkit;
using namespace geomkit::fair;

namespace {
constexpr double kPi = std::numbers::pi;
const ConvexPolygon kWide = ConvexPolygon::rectangle(4, 1);

double poly_area(const std::vector<Vec2>& v) { return std::abs(signed_area(v)); }
}  // namespace

TEST_CASE("split examples on the 1 x 4 rectangle") {
  // theta = pi/2: normal (-1, 0), piece a is x >= 3.
  const auto r = std::get<SplitResult>(split(kWide, LineCut{kPi / 2, -1.0}));
  const double small = std::min(r.area_a, r.area_b), large = std::max(r.area_a, r.area_b);
  CHECK(small == doctest::Approx(1.0));
  CHECK(large == doctest::Approx(3.0));
  CHECK(std::min(r.perimeter_a, r.perimeter_b) == doctest::Approx(4.0));
  CHECK(std::max(r.perimeter_a, r.perimeter_b) == doctest::Approx(8.0));

  const auto h = std::get<SplitResult>(split(kWide, LineCut{0.0, 0.25}));
  CHECK(h.area_a == doctest::Approx(1.0));
  CHECK(h.perimeter_a == doctest::Approx(8.5));
  CHECK(h.perimeter_b == doctest::Approx(9.5));

  CHECK(std::holds_alternative<NoIntersection>(split(kWide, LineCut{0.0, 5.0})));
  CHECK(std::holds_alternative<NoIntersection>(split(kWide, LineCut{0.0, -1.0})));
}

TEST_CASE("central cuts of the unit square halve the area") {
  const auto sq = ConvexPolygon::rectangle(1, 1);
  for (int k = 0; k < 36; ++k) {
    const double th = kPi * k / 36;
    const LineCut c{th, -std::sin(th) * 0.5 + std::cos(th) * 0.5};
    const auto r = std::get<SplitResult>(split(sq, c));
    CHECK(r.area_a == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("split conservation on random polygons and cuts") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, kPi), u(0.0, 1.0);
  std::uniform_int_distribution<int> nd(3, 40);
  int done = 0;
  while (done < 1000) {
    const auto p = testutil::random_convex_polygon(rng, nd(rng));
    const double t = th(rng);
    const LineCut probe{t, 0.0};
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, dot(probe.normal(), v));
      hi = std::max(hi, dot(probe.normal(), v));
    }
    const LineCut c{t, lo + (hi - lo) * (0.01 + 0.98 * u(rng))};
    const auto res = split(p, c);
    REQUIRE(std::holds_alternative<SplitResult>(res));
    const auto& r = std::get<SplitResult>(res);
    const auto m = polygon_metrics(p);
    CHECK(std::abs(r.area_a + r.area_b - m.area) <= 1e-9 * m.area);
    CHECK(std::abs(r.perimeter_a + r.perimeter_b - m.perimeter - 2 * r.cut_length) <= 1e-9 * m.perimeter);
    CHECK(std::abs(poly_area(r.piece_a) - r.area_a) <= 1e-9 * m.area);
    CHECK(is_convex_cycle(r.piece_a));
    CHECK(is_convex_cycle(r.piece_b));
    for (const auto& v : r.piece_a) CHECK(dot(c.normal(), v) <= c.offset + 1e-9);
    ++done;
  }
}

TEST_CASE("solve_offset_for_area") {
  const auto sq = ConvexPolygon::rectangle(1, 1);
  CHECK(solve_offset_for_area(sq, 0.0, 0.5).offset == doctest::Approx(0.5).epsilon(1e-12));
  const auto c = solve_offset_for_area(kWide, kPi / 2, 0.25);
  const auto r = std::get<SplitResult>(split(kWide, c));
  CHECK(r.area_a == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(9);
  const auto p = testutil::random_convex_polygon(rng, 20);
  double prev = -1.0;
  for (int k = 1; k < 20; ++k) {
    const auto cut = solve_offset_for_area(p, 1.0, k / 20.0);
    const double a = std::get<SplitResult>(split(p, cut)).area_a;
    CHECK(a > prev);
    prev = a;
  }

  const auto disc = ConvexPolygon::regular(1024);
  const auto chord = disc_chord_analysis(RatioTarget(1, 3));
  for (double th : {0.0, 0.7, 2.1}) {
    const auto cut = solve_offset_for_area(disc, th, 0.25);
    // Segment on the a side: its distance from the centre is -offset.
    CHECK(std::abs(-cut.offset - std::cos(chord.half_angle)) < 1e-4);
  }
}

TEST_CASE("ratio target canonicalisation") {
  const RatioTarget t(3, 1);
  CHECK(t.a == 1.0);
  CHECK(t.b == 3.0);
  CHECK(t.perimeter_ratio() == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK_THROWS_AS(RatioTarget(0, 1), std::invalid_argument);
}

TEST_CASE("perimeter ratio profile") {
  const auto prof = perimeter_ratio_profile(kWide, RatioTarget(1, 3), 720);
  REQUIRE(prof.size() == 720);
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& s : prof) {
    lo = std::min(lo, s.rho);
    hi = std::max(hi, s.rho);
  }
  CHECK(lo <= 0.5 + 1e-9);
  CHECK(hi >= 17.0 / 19.0 - 1e-9);

  const auto sq = perimeter_ratio_profile(ConvexPolygon::rectangle(1, 1), RatioTarget(1, 1), 8);
  CHECK(sq[0].rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sq[2].rho == doctest::Approx(1.0).epsilon(1e-12));

  const auto disc = perimeter_ratio_profile(ConvexPolygon::regular(512), RatioTarget(1, 3), 90);
  double dlo = INFINITY, dhi = -INFINITY;
  for (const auto& s : disc) {
    dlo = std::min(dlo, s.rho);
    dhi = std::max(dhi, s.rho);
  }
  CHECK(dhi - dlo < 1e-3);
}

TEST_CASE("profile is Lipschitz on random polygons") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const auto p = testutil::random_convex_polygon(rng, 64);
    for (double phi : {0.3, 1.9, 4.4}) {
      const double a = oriented_area_cut(p, phi, 0.25).rho();
      const double b = oriented_area_cut(p, phi + 1e-4, 0.25).rho();
      CHECK(std::abs(a - b) <= 50.0 * 1e-4);
    }
  }
}

TEST_CASE("scaled fair cut on 1 x 4 at 1:3") {
  const RatioTarget t(1, 3);
  const auto r = find_scaled_fair_cut(kWide, t);
  REQUIRE(std::holds_alternative<OrientedCut>(r));
  const auto& oc = std::get<OrientedCut>(r);
  CHECK(std::abs(oc.rho() - std::sqrt(1.0 / 3.0)) < 1e-9);
  // Recompute from the returned line.
  const auto again = std::get<SplitResult>(split(kWide, oc.cut));
  const double ta = oc.target_is_a ? again.area_a : again.area_b;
  const double tp = oc.target_is_a ? again.perimeter_a : again.perimeter_b;
  const double op = oc.target_is_a ? again.perimeter_b : again.perimeter_a;
  CHECK(std::abs(ta / 4.0 - 0.25) < 1e-9);
  CHECK(std::abs(tp / op - std::sqrt(1.0 / 3.0)) < 1e-9);
}

TEST_CASE("scaled fair cut on the disc is impossible at 1:3") {
  const auto r = find_scaled_fair_cut(ConvexPolygon::regular(512), RatioTarget(1, 3));
  REQUIRE(std::holds_alternative<NotFound>(r));
  const auto& nf = std::get<NotFound>(r);
  CHECK(std::abs(nf.rho_min - 0.713) < 1e-3);
  CHECK(std::abs(nf.rho_max - 0.713) < 1e-3);
}

TEST_CASE("centrally symmetric polygons admit 1:1 fair cuts") {
  for (const auto& p : {ConvexPolygon::rectangle(3, 1), ConvexPolygon::regular(6), ConvexPolygon::regular(10, 2.0)}) {
    const auto r = find_scaled_fair_cut(p, RatioTarget(1, 1));
    REQUIRE(std::holds_alternative<OrientedCut>(r));
    CHECK(std::get<OrientedCut>(r).rho() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("disc chord analysis") {
  const auto eq = disc_chord_analysis(RatioTarget(1, 1));
  CHECK(eq.half_angle == doctest::Approx(kPi / 2));
  CHECK(eq.rho == doctest::Approx(1.0));
  CHECK(eq.achievable);

  const auto q = disc_chord_analysis(RatioTarget(1, 3));
  CHECK_FALSE(q.achievable);
  CHECK(q.rho - std::sqrt(1.0 / 3.0) > 0.1);
  // Independent check on a 4096-gon.
  const auto poly = oriented_area_cut(ConvexPolygon::regular(4096), 0.4, 0.25);
  CHECK(std::abs(poly.rho() - q.rho) < 1e-3);

  const auto far = disc_chord_analysis(RatioTarget(1, 100));
  CHECK(far.rho > std::sqrt(1.0 / 100.0));
}

TEST_CASE("equal fair cut") {
  std::mt19937_64 rng(17);
  std::vector<ConvexPolygon> shapes{ConvexPolygon::rectangle(4, 1),
                                    ConvexPolygon::from_cycle({{0, 0}, {4, 0}, {0, 3}}),
                                    testutil::random_convex_polygon(rng, 20)};
  for (const auto& p : shapes) {
    const auto oc = equal_fair_cut(p);
    const auto m = polygon_metrics(p);
    CHECK(std::abs(oc.split.area_a - oc.split.area_b) < 1e-9 * m.area);
    CHECK(std::abs(oc.split.perimeter_a - oc.split.perimeter_b) < 1e-9 * m.perimeter);
  }
}

TEST_CASE("band family on the unit square") {
  const RatioTarget t(1, 3);
  const auto half = band_partition(1, 1, RatioTarget(1, 1), 0.5);
  REQUIRE(half.has_value());
  // L band of thickness 1 - 1/sqrt 2; band perimeter 4, rest 4 (1 - t).
  CHECK(half->t == doctest::Approx(1 - 1 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(half->rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  const auto half_mid = band_partition(1, 1, RatioTarget(1, 1), 0.5, BandAnchor::BottomMidpoint);
  REQUIRE(half_mid.has_value());
  CHECK(half_mid->rho == doctest::Approx(1.0).epsilon(1e-9));
  // U band: 2t - 2t^2 = 1/2 gives t = 1/2, the bottom half.
  CHECK(std::abs(half_mid->t - 0.5) < 1e-7);

  // Strip model exact here: 2t - 2t^2 = 1/4.
  const auto quarter = band_partition(1, 1, t, 0.5, BandAnchor::BottomMidpoint);
  REQUIRE(quarter.has_value());
  CHECK(std::abs(quarter->t - (2 - std::sqrt(2.0)) / 4) < 1e-7);

  const auto r = solve_band(1, 1, t);
  REQUIRE(std::holds_alternative<BandSolution>(r));
  const auto& sol = std::get<BandSolution>(r);
  CHECK(std::abs(sol.solution.rho - std::sqrt(1.0 / 3.0)) < 1e-6);
  CHECK(sol.solution.area_band == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(sol.solution.s == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-6));
  const auto end = band_partition(1, 1, t, 0.5);
  REQUIRE(end.has_value());
  CHECK_FALSE(end->convex);

  const auto mid = solve_band(1, 1, t, 1e-9, BandAnchor::BottomMidpoint);
  REQUIRE(std::holds_alternative<NotFound>(mid));
  CHECK(std::get<NotFound>(mid).rho_min == doctest::Approx(5.0 / 9.0).epsilon(1e-6));
  CHECK(std::get<NotFound>(mid).rho_max == doctest::Approx(5.0 / 7.0).epsilon(1e-6));

  CHECK_FALSE(band_partition(1, 1, t, 0.01).has_value());
}

TEST_CASE("band family on 1 x 4 at 1:8") {
  const RatioTarget t(1, 8);
  for (auto anchor : {BandAnchor::LowerLeftCorner, BandAnchor::BottomMidpoint}) {
    const auto r = solve_band(1, 4, t, 1e-9, anchor);
    REQUIRE(std::holds_alternative<BandSolution>(r));
    const auto& s = std::get<BandSolution>(r).solution;
    CHECK(std::abs(s.rho - std::sqrt(1.0 / 8.0)) < 1e-6);
    CHECK_FALSE(s.convex);
  }
}
