#include "geomkit/fair_partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geomkit::fair {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

Vec2 LineCut::normal() const { return {-std::sin(theta), std::cos(theta)}; }

std::pair<LineCut, bool> LineCut::oriented(double phi, double offset) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  if (phi < kPi) return {LineCut{phi, offset}, false};
  return {LineCut{phi - kPi, -offset}, true};
}

std::variant<SplitResult, NoIntersection> split(const ConvexPolygon& c, const LineCut& cut) {
  const Vec2 n = cut.normal();
  const auto& v = c.vertices();
  const std::size_t m = v.size();
  std::vector<double> s(m);
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t i = 0; i < m; ++i) {
    s[i] = dot(n, v[i]) - cut.offset;
    lo = std::min(lo, s[i]);
    hi = std::max(hi, s[i]);
  }
  if (lo >= 0.0 || hi <= 0.0) return NoIntersection{};

  SplitResult r;
  std::vector<Vec2> on_line;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    if (s[i] <= 0.0) r.piece_a.push_back(v[i]);
    if (s[i] >= 0.0) r.piece_b.push_back(v[i]);
    if (s[i] == 0.0) on_line.push_back(v[i]);
    if ((s[i] < 0.0 && s[j] > 0.0) || (s[i] > 0.0 && s[j] < 0.0)) {
      const double u = s[i] / (s[i] - s[j]);
      const Vec2 p = v[i] + u * (v[j] - v[i]);
      r.piece_a.push_back(p);
      r.piece_b.push_back(p);
      on_line.push_back(p);
    }
  }
  for (std::size_t i = 0; i < on_line.size(); ++i)
    for (std::size_t j = i + 1; j < on_line.size(); ++j)
      r.cut_length = std::max(r.cut_length, dist(on_line[i], on_line[j]));
  r.area_a = std::abs(signed_area(r.piece_a));
  r.area_b = std::abs(signed_area(r.piece_b));
  r.perimeter_a = path_perimeter_closed(r.piece_a);
  r.perimeter_b = path_perimeter_closed(r.piece_b);
  return r;
}

RatioTarget::RatioTarget(double a_, double b_) : a(std::min(a_, b_)), b(std::max(a_, b_)) {
  if (!(a > 0.0) || !std::isfinite(b)) throw std::invalid_argument("ratio terms must be positive");
}

double RatioTarget::perimeter_ratio() const { return std::sqrt(a / b); }

namespace {

// Area of {p in c : n.p <= offset} without building the piece.
double area_below(const ConvexPolygon& c, Vec2 n, double offset) {
  const auto& v = c.vertices();
  const std::size_t m = v.size();
  double twice = 0.0;
  Vec2 prev{};
  bool have_prev = false;
  Vec2 first{};
  auto emit = [&](Vec2 p) {
    if (have_prev)
      twice += cross(prev, p);
    else
      first = p;
    prev = p;
    have_prev = true;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const double si = dot(n, v[i]) - offset;
    const double sj = dot(n, v[j]) - offset;
    if (si <= 0.0) emit(v[i]);
    if ((si < 0.0 && sj > 0.0) || (si > 0.0 && sj < 0.0)) emit(v[i] + (si / (si - sj)) * (v[j] - v[i]));
  }
  if (have_prev) twice += cross(prev, first);
  return 0.5 * std::abs(twice);
}

}  // namespace

LineCut solve_offset_for_area(const ConvexPolygon& c, double theta, double f) {
  if (!(f > 0.0 && f < 1.0)) throw std::invalid_argument("area fraction must lie in (0, 1)");
  const LineCut probe{theta, 0.0};
  const Vec2 n = probe.normal();
  double lo = INFINITY, hi = -INFINITY;
  for (const Vec2& p : c.vertices()) {
    lo = std::min(lo, dot(n, p));
    hi = std::max(hi, dot(n, p));
  }
  const double total = polygon_metrics(c).area;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double frac = area_below(c, n, mid) / total;
    if (frac == f) return LineCut{theta, mid};
    (frac < f ? lo : hi) = mid;
  }
  return LineCut{theta, 0.5 * (lo + hi)};
}

OrientedCut oriented_area_cut(const ConvexPolygon& c, double phi, double f) {
  OrientedCut oc;
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  oc.phi = phi;
  if (phi < kPi) {
    oc.cut = solve_offset_for_area(c, phi, f);
    oc.target_is_a = true;
  } else {
    oc.cut = solve_offset_for_area(c, phi - kPi, 1.0 - f);
    oc.target_is_a = false;
  }
  auto res = split(c, oc.cut);
  if (std::holds_alternative<NoIntersection>(res)) throw std::logic_error("area cut missed the polygon");
  oc.split = std::move(std::get<SplitResult>(res));
  return oc;
}

std::vector<ProfileSample> perimeter_ratio_profile(const ConvexPolygon& c, const RatioTarget& target, int samples) {
  if (samples < 2) throw std::invalid_argument("profile needs at least 2 samples");
  std::vector<ProfileSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double phi = kTwoPi * k / samples;
    const OrientedCut oc = oriented_area_cut(c, phi, target.fraction());
    out.push_back({phi, oc.cut, oc.rho()});
  }
  return out;
}

namespace {

// Bisection on a sign change of g over [lo, hi]; returns the best argument.
template <class G>
double bisect_root(G&& g, double lo, double hi, double glo, double tol) {
  double best = lo, best_val = std::abs(glo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (std::abs(gm) < best_val) {
      best = mid;
      best_val = std::abs(gm);
    }
    if (std::abs(gm) <= tol) break;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return best;
}

}  // namespace

FairCutResult find_scaled_fair_cut(const ConvexPolygon& c, const RatioTarget& target, double tol, int samples) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto profile = perimeter_ratio_profile(c, target, samples);
  const double goal = target.perimeter_ratio();
  const double f = target.fraction();
  NotFound range{INFINITY, -INFINITY};
  for (const auto& p : profile) {
    range.rho_min = std::min(range.rho_min, p.rho);
    range.rho_max = std::max(range.rho_max, p.rho);
  }
  const std::size_t m = profile.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double g0 = profile[k].rho - goal;
    if (std::abs(g0) <= tol) return oriented_area_cut(c, profile[k].phi, f);
    const double g1 = profile[(k + 1) % m].rho - goal;
    if ((g0 < 0.0) == (g1 < 0.0)) continue;
    const double lo = profile[k].phi;
    const double hi = k + 1 < m ? profile[k + 1].phi : kTwoPi;
    const auto g = [&](double phi) { return oriented_area_cut(c, phi, f).rho() - goal; };
    return oriented_area_cut(c, bisect_root(g, lo, hi, g0, tol), f);
  }
  return range;
}

DiscChord disc_chord_analysis(const RatioTarget& target) {
  DiscChord d;
  const double rhs = kPi * target.fraction();
  double lo = 0.0, hi = kPi / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double val = mid - std::sin(mid) * std::cos(mid);
    (val < rhs ? lo : hi) = mid;
  }
  d.half_angle = 0.5 * (lo + hi);
  const double th = d.half_angle;
  d.rho = (2.0 * th + 2.0 * std::sin(th)) / (kTwoPi - 2.0 * th + 2.0 * std::sin(th));
  d.target_rho = target.perimeter_ratio();
  d.achievable = std::abs(d.rho - d.target_rho) < 1e-9;
  return d;
}

OrientedCut equal_fair_cut(const ConvexPolygon& c) {
  const double total = polygon_metrics(c).perimeter;
  const double tol = 1e-9 * total;
  const auto g = [&](double phi) {
    const OrientedCut oc = oriented_area_cut(c, phi, 0.5);
    return oc.target_perimeter() - oc.other_perimeter();
  };
  // g(phi + pi) = -g(phi), so a sign change lies in [0, pi].
  constexpr int kScan = 64;
  double prev_phi = 0.0, prev = g(0.0);
  if (std::abs(prev) <= tol) return oriented_area_cut(c, 0.0, 0.5);
  for (int k = 1; k <= kScan; ++k) {
    const double phi = kPi * k / kScan;
    const double cur = g(phi);
    if (std::abs(cur) <= tol) return oriented_area_cut(c, phi, 0.5);
    if ((cur < 0.0) != (prev < 0.0)) return oriented_area_cut(c, bisect_root(g, prev_phi, phi, prev, tol), 0.5);
    prev_phi = phi;
    prev = cur;
  }
  throw std::logic_error("perimeter difference did not change sign over a half turn");
}

namespace {

struct Box {
  double x0, y0, x1, y1;
};

std::vector<Box> band_strips(double w, double h, BandAnchor anchor, double s, double t) {
  const double per = 2.0 * (w + h);
  const double reach = std::min(s * per / 2.0, per / 2.0);
  // Boundary parameter u runs counterclockwise from the lower-left corner.
  const double cuts[] = {0.0, w, w + h, 2.0 * w + h, per};
  const double u0 = anchor == BandAnchor::BottomMidpoint ? w / 2.0 : 0.0;
  std::vector<Box> out;
  const auto cover = [&](double a, double b) {
    for (int e = 0; e < 4; ++e) {
      const double lo = std::max(a, cuts[e]), hi = std::min(b, cuts[e + 1]);
      if (hi <= lo) continue;
      const double l = lo - cuts[e], r = hi - cuts[e];
      switch (e) {
        case 0: out.push_back({l, 0.0, r, t}); break;
        case 1: out.push_back({w - t, l, w, r}); break;
        case 2: out.push_back({w - r, h - t, w - l, h}); break;
        case 3: out.push_back({0.0, h - r, t, h - l}); break;
      }
    }
  };
  double a = u0 - reach, b = u0 + reach;
  if (a < 0.0) {
    cover(a + per, per);
    a = 0.0;
  }
  if (b > per) {
    cover(0.0, b - per);
    b = per;
  }
  cover(a, b);
  return out;
}

struct BandGeometry {
  double area_in = 0.0, area_out = 0.0;
  double perim_in = 0.0, perim_out = 0.0;
  bool convex = true;
};

BandGeometry band_geometry(double w, double h, const std::vector<Box>& boxes) {
  std::vector<double> xs{0.0, w}, ys{0.0, h};
  for (const Box& b : boxes) {
    xs.insert(xs.end(), {b.x0, b.x1});
    ys.insert(ys.end(), {b.y0, b.y1});
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t nx = xs.size() - 1, ny = ys.size() - 1;
  std::vector<char> in(nx * ny, 0);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      const double cx = 0.5 * (xs[i] + xs[i + 1]), cy = 0.5 * (ys[j] + ys[j + 1]);
      for (const Box& b : boxes)
        if (cx > b.x0 && cx < b.x1 && cy > b.y0 && cy < b.y1) {
          in[i * ny + j] = 1;
          break;
        }
    }
  // -1 marks the outside of the rectangle.
  const auto state = [&](long i, long j) -> int {
    if (i < 0 || j < 0 || i >= static_cast<long>(nx) || j >= static_cast<long>(ny)) return -1;
    return in[static_cast<std::size_t>(i) * ny + static_cast<std::size_t>(j)];
  };
  BandGeometry g;
  double bx0 = INFINITY, by0 = INFINITY, bx1 = -INFINITY, by1 = -INFINITY;
  for (long i = 0; i < static_cast<long>(nx); ++i)
    for (long j = 0; j < static_cast<long>(ny); ++j) {
      const double dx = xs[static_cast<std::size_t>(i) + 1] - xs[static_cast<std::size_t>(i)];
      const double dy = ys[static_cast<std::size_t>(j) + 1] - ys[static_cast<std::size_t>(j)];
      const int me = state(i, j);
      const double sides = (state(i - 1, j) != me ? dy : 0.0) + (state(i + 1, j) != me ? dy : 0.0) +
                           (state(i, j - 1) != me ? dx : 0.0) + (state(i, j + 1) != me ? dx : 0.0);
      if (me == 1) {
        g.area_in += dx * dy;
        g.perim_in += sides;
        bx0 = std::min(bx0, xs[static_cast<std::size_t>(i)]);
        bx1 = std::max(bx1, xs[static_cast<std::size_t>(i) + 1]);
        by0 = std::min(by0, ys[static_cast<std::size_t>(j)]);
        by1 = std::max(by1, ys[static_cast<std::size_t>(j) + 1]);
      } else {
        g.area_out += dx * dy;
        g.perim_out += sides;
      }
    }
  // An orthogonal polygon is convex only when it fills its bounding box.
  g.convex = std::abs((bx1 - bx0) * (by1 - by0) - g.area_in) <= 1e-12 * w * h;
  return g;
}

}  // namespace

std::optional<BandSample> band_partition(double width, double height, const RatioTarget& target, double s,
                                         BandAnchor anchor) {
  if (!(width > 0.0 && height > 0.0)) throw std::invalid_argument("rectangle sides must be positive");
  if (!(s > 0.0 && s < 1.0)) return std::nullopt;
  const double goal = target.fraction() * width * height;
  const double t_max = std::min(width, height) / 2.0;
  const auto area_at = [&](double t) { return band_geometry(width, height, band_strips(width, height, anchor, s, t)).area_in; };
  if (area_at(t_max) < goal * (1.0 - 1e-12)) return std::nullopt;
  double lo = 0.0, hi = t_max;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (area_at(mid) < goal ? lo : hi) = mid;
  }
  BandSample b;
  b.s = s;
  b.t = 0.5 * (lo + hi);
  const BandGeometry g = band_geometry(width, height, band_strips(width, height, anchor, s, b.t));
  b.area_band = g.area_in;
  b.area_rest = g.area_out;
  b.perimeter_band = g.perim_in;
  b.perimeter_rest = g.perim_out;
  b.rho = g.perim_in / g.perim_out;
  b.convex = g.convex;
  return b;
}

std::variant<BandSolution, NotFound> solve_band(double width, double height, const RatioTarget& target, double tol,
                                                BandAnchor anchor) {
  const auto high = band_partition(width, height, target, 0.5, anchor);
  if (!high) return NotFound{};
  double lo = 0.0, hi = 0.5;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (band_partition(width, height, target, mid, anchor) ? hi : lo) = mid;
  }
  BandSolution sol;
  sol.s_low = hi;
  sol.low = *band_partition(width, height, target, hi, anchor);
  const double goal = target.perimeter_ratio();
  if (std::abs(high->rho - goal) <= tol) {
    sol.solution = *high;
    return sol;
  }
  if (sol.low.rho > goal || high->rho < goal) return NotFound{std::min(sol.low.rho, high->rho), std::max(sol.low.rho, high->rho)};
  double a = sol.s_low, b = 0.5;
  BandSample left = sol.low, right = *high;
  while (b - a > 1e-12) {
    const double mid = 0.5 * (a + b);
    const auto m = band_partition(width, height, target, mid, anchor);
    if (!m) {
      a = mid;
      continue;
    }
    if (std::abs(m->rho - goal) <= tol) {
      sol.solution = *m;
      return sol;
    }
    if (m->rho < goal) {
      a = mid;
      left = *m;
    } else {
      b = mid;
      right = *m;
    }
  }
  // rho jumps across the target: report the two one-sided values.
  return NotFound{left.rho, right.rho};
}

}  // namespace geomkit::fair
