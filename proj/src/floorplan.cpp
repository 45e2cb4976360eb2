#include "geomkit/floorplan.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace geomkit::tiling {

std::string Floorplan::encode() const {
  std::string out;
  for (std::size_t i = 0; i < rooms.size(); ++i) {
    const Room& r = rooms[i];
    if (i) out += ';';
    out += std::to_string(r.left) + ',' + std::to_string(r.right) + ',' + std::to_string(r.bottom) + ',' +
           std::to_string(r.top);
  }
  return out;
}

namespace {

struct GrowState {
  Floorplan fp;
  std::vector<int> top;    // rooms on the top side, right to left
  std::vector<int> right;  // rooms on the right side, top to bottom
};

GrowState seed_state() {
  GrowState s;
  s.fp.rooms.push_back(Room{});
  s.fp.vertical = {true, false, true, false};
  s.top = {0};
  s.right = {0};
  return s;
}

// New room on top of the k rightmost top rooms.
GrowState cover_top(const GrowState& s, std::size_t k) {
  GrowState t = s;
  const int seg = t.fp.segments();
  t.fp.vertical.push_back(false);
  for (std::size_t j = 0; j < k; ++j) t.fp.rooms[static_cast<std::size_t>(s.top[j])].top = seg;
  const int id = t.fp.n();
  t.fp.rooms.push_back(Room{s.fp.rooms[static_cast<std::size_t>(s.top[k - 1])].left, kRightSide, seg, kTopSide});
  t.top.assign(1, id);
  t.top.insert(t.top.end(), s.top.begin() + static_cast<std::ptrdiff_t>(k), s.top.end());
  t.right.assign(1, id);
  t.right.insert(t.right.end(), s.right.begin(), s.right.end());
  return t;
}

// New room to the right of the k topmost right rooms.
GrowState cover_right(const GrowState& s, std::size_t k) {
  GrowState t = s;
  const int seg = t.fp.segments();
  t.fp.vertical.push_back(true);
  for (std::size_t j = 0; j < k; ++j) t.fp.rooms[static_cast<std::size_t>(s.right[j])].right = seg;
  const int id = t.fp.n();
  t.fp.rooms.push_back(Room{seg, kRightSide, s.fp.rooms[static_cast<std::size_t>(s.right[k - 1])].bottom, kTopSide});
  t.right.assign(1, id);
  t.right.insert(t.right.end(), s.right.begin() + static_cast<std::ptrdiff_t>(k), s.right.end());
  t.top.assign(1, id);
  t.top.insert(t.top.end(), s.top.begin(), s.top.end());
  return t;
}

void grow(const GrowState& s, int n, std::vector<Floorplan>& out) {
  if (s.fp.n() == n) {
    out.push_back(s.fp);
    return;
  }
  for (std::size_t k = 1; k <= s.top.size(); ++k) grow(cover_top(s, k), n, out);
  for (std::size_t k = 1; k <= s.right.size(); ++k) grow(cover_right(s, k), n, out);
}

}  // namespace

std::vector<Floorplan> enumerate_floorplans(int n) {
  if (n < 1) throw std::invalid_argument("floorplans need at least one room");
  if (n > kMaxFloorplanRooms)
    throw UnsupportedInstance("floorplan enumeration supports at most " + std::to_string(kMaxFloorplanRooms) +
                              " rooms");
  std::vector<Floorplan> out;
  grow(seed_state(), n, out);
  return out;
}

bool is_baxter(const std::vector<int>& p) {
  const std::size_t n = p.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const int a = p[j], b = p[j + 1];
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t k = j + 2; k < n; ++k) {
        if (b < p[i] && p[i] < p[k] && p[k] < a) return false;  // 2-41-3
        if (a < p[k] && p[k] < p[i] && p[i] < b) return false;  // 3-14-2
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> baxter_permutations(int n) {
  if (n < 0 || n > 10) throw UnsupportedInstance("Baxter enumeration supports n <= 10");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (is_baxter(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> insertion_code(const Floorplan& input) {
  Floorplan fp = input;
  std::vector<int> code;
  while (fp.n() > 1) {
    auto it = std::find_if(fp.rooms.begin(), fp.rooms.end(),
                           [](const Room& r) { return r.right == kRightSide && r.top == kTopSide; });
    if (it == fp.rooms.end()) throw std::invalid_argument("floorplan has no top-right room");
    const Room corner = *it;
    const auto count = [&](auto pred) { return static_cast<int>(std::count_if(fp.rooms.begin(), fp.rooms.end(), pred)); };

    int seg;
    if (count([&](const Room& r) { return r.bottom == corner.bottom; }) == 1) {
      seg = corner.bottom;
      code.push_back(count([&](const Room& r) { return r.top == seg; }));
      for (Room& r : fp.rooms)
        if (r.top == seg) r.top = kTopSide;
    } else {
      seg = corner.left;
      code.push_back(-count([&](const Room& r) { return r.right == seg; }));
      for (Room& r : fp.rooms)
        if (r.right == seg) r.right = kRightSide;
    }
    fp.rooms.erase(it);
    fp.vertical.erase(fp.vertical.begin() + seg);
    for (Room& r : fp.rooms)
      for (int* id : {&r.left, &r.right, &r.bottom, &r.top})
        if (*id > seg) --*id;
  }
  std::reverse(code.begin(), code.end());
  return code;
}

namespace {

struct Interval {
  Rational lo, hi;
  int room;
  int side;  // 0 left, 1 right, 2 bottom, 3 top
};

// Groups collinear room edges into maximal segments; touching edges join.
void assign_segments(std::vector<Interval> edges, std::vector<std::array<int, 4>>& sides, int& groups) {
  std::sort(edges.begin(), edges.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational reach;
  bool open = false;
  for (const Interval& e : edges) {
    if (!open || e.lo > reach) {
      ++groups;
      reach = e.hi;
      open = true;
    } else if (e.hi > reach) {
      reach = e.hi;
    }
    sides[static_cast<std::size_t>(e.room)][static_cast<std::size_t>(e.side)] = groups - 1;
  }
}

}  // namespace

std::optional<Floorplan> floorplan_from_rects(const std::vector<RoomRect>& rects) {
  if (rects.empty()) return std::nullopt;
  Rational x0 = rects[0].x0, y0 = rects[0].y0, x1 = rects[0].x1, y1 = rects[0].y1;
  Rational area;
  for (const RoomRect& r : rects) {
    if (r.x1 <= r.x0 || r.y1 <= r.y0) return std::nullopt;
    x0 = std::min(x0, r.x0);
    y0 = std::min(y0, r.y0);
    x1 = std::max(x1, r.x1);
    y1 = std::max(y1, r.y1);
    area += (r.x1 - r.x0) * (r.y1 - r.y0);
  }
  if (area != (x1 - x0) * (y1 - y0)) return std::nullopt;
  for (std::size_t i = 0; i < rects.size(); ++i)
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const RoomRect &a = rects[i], &b = rects[j];
      if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1) return std::nullopt;
    }

  // Four rooms sharing a corner point make a cross junction.
  std::map<std::pair<Rational, Rational>, int> corners;
  for (const RoomRect& r : rects)
    for (const auto& p : {std::pair{r.x0, r.y0}, std::pair{r.x1, r.y0}, std::pair{r.x0, r.y1}, std::pair{r.x1, r.y1}})
      if (++corners[p] == 4) return std::nullopt;

  const std::size_t n = rects.size();
  std::map<Rational, std::vector<Interval>> vlines, hlines;
  for (std::size_t i = 0; i < n; ++i) {
    const RoomRect& r = rects[i];
    const int room = static_cast<int>(i);
    vlines[r.x0].push_back({r.y0, r.y1, room, 0});
    vlines[r.x1].push_back({r.y0, r.y1, room, 1});
    hlines[r.y0].push_back({r.x0, r.x1, room, 2});
    hlines[r.y1].push_back({r.x0, r.x1, room, 3});
  }
  // Raw group ids: vertical groups first, then horizontal.
  std::vector<std::array<int, 4>> sides(n);
  int groups = 0;
  for (auto& [x, edges] : vlines) assign_segments(edges, sides, groups);
  const int vertical_groups = groups;
  for (auto& [y, edges] : hlines) assign_segments(edges, sides, groups);

  // Boundary groups: left is vertical group 0, right the last vertical one,
  // bottom the first horizontal one, top the last.
  std::vector<int> remap(static_cast<std::size_t>(groups), -1);
  remap[0] = kLeftSide;
  remap[static_cast<std::size_t>(vertical_groups - 1)] = kRightSide;
  remap[static_cast<std::size_t>(vertical_groups)] = kBottomSide;
  remap[static_cast<std::size_t>(groups - 1)] = kTopSide;
  Floorplan fp;
  fp.vertical = {true, false, true, false};
  const auto id_of = [&](int g) {
    auto& slot = remap[static_cast<std::size_t>(g)];
    if (slot < 0) {
      slot = fp.segments();
      fp.vertical.push_back(g < vertical_groups);
    }
    return slot;
  };
  for (std::size_t i = 0; i < n; ++i) {
    Room room;
    room.left = id_of(sides[i][0]);
    room.right = id_of(sides[i][1]);
    room.bottom = id_of(sides[i][2]);
    room.top = id_of(sides[i][3]);
    fp.rooms.push_back(room);
  }
  return fp;
}

std::optional<Floorplan> floorplan_from_layout(const TileSet& ts, const Layout& layout) {
  std::vector<RoomRect> rects;
  for (const Placement& p : layout.placements) {
    const Tile* t = ts.find(p.tile_id);
    if (!t) return std::nullopt;
    const Rational w = p.rotated ? t->height : t->width;
    const Rational h = p.rotated ? t->width : t->height;
    rects.push_back({p.x, p.y, p.x + w, p.y + h});
  }
  return floorplan_from_rects(rects);
}

IsoSystem isoperimetric_system(const Floorplan& fp) {
  IsoSystem sys;
  sys.segment_count = static_cast<std::size_t>(fp.segments());
  const std::size_t vars = sys.segment_count + 2 * static_cast<std::size_t>(fp.n());
  for (int s = 0; s < fp.segments(); ++s)
    sys.names.push_back((fp.vertical[static_cast<std::size_t>(s)] ? "x" : "y") + std::to_string(s));
  for (int i = 0; i < fp.n(); ++i) {
    sys.names.push_back("w" + std::to_string(i));
    sys.names.push_back("h" + std::to_string(i));
  }
  const auto row = [&](std::initializer_list<std::pair<std::size_t, int>> terms, long long rhs) {
    RVector r(vars);
    for (auto [v, c] : terms) r[v] += Rational(c);
    sys.rows.push_back(std::move(r));
    sys.rhs.push_back(Rational(rhs));
  };
  row({{kLeftSide, 1}}, 0);
  row({{kBottomSide, 1}}, 0);
  for (int i = 0; i < fp.n(); ++i) {
    const Room& r = fp.rooms[static_cast<std::size_t>(i)];
    const auto seg = [](int s) { return static_cast<std::size_t>(s); };
    row({{sys.width_var(i), 1}, {seg(r.right), -1}, {seg(r.left), 1}}, 0);
    row({{sys.height_var(i), 1}, {seg(r.top), -1}, {seg(r.bottom), 1}}, 0);
    row({{sys.width_var(i), 1}, {sys.height_var(i), 1}}, 1);
  }
  return sys;
}

LinearResult solve_isoperimetric(const Floorplan& fp) {
  IsoSystem sys = isoperimetric_system(fp);
  return solve_linear_exact(sys.rows, sys.rhs, sys.names);
}

std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Found: return "found";
    case IsoStatus::ExhaustedNoSolution: return "exhausted_no_solution";
    case IsoStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool zero_form(const AffineForm& f) { return f.is_constant() && f.constant.is_zero(); }

AffineForm combine(const AffineForm& a, const AffineForm& b, int sb, long long c) {
  AffineForm f = a;
  for (std::size_t k = 0; k < f.coef.size(); ++k) f.coef[k] += Rational(sb) * b.coef[k];
  f.constant += Rational(sb) * b.constant + Rational(c);
  return f;
}

bool distinct_areas(const RVector& x, const IsoSystem& sys, int n) {
  std::vector<Rational> areas;
  for (int i = 0; i < n; ++i) areas.push_back(x[sys.width_var(i)] * x[sys.height_var(i)]);
  std::sort(areas.begin(), areas.end());
  return std::adjacent_find(areas.begin(), areas.end()) == areas.end();
}

IsoWitness make_witness(std::size_t index, const Floorplan& fp, const IsoSystem& sys, const RVector& x) {
  IsoWitness w;
  w.floorplan_index = index;
  w.floorplan = fp;
  std::vector<std::pair<Rational, Rational>> dims;
  for (int i = 0; i < fp.n(); ++i) dims.emplace_back(x[sys.width_var(i)], x[sys.height_var(i)]);
  w.tiles = TileSet::from_dims(dims);
  w.layout.target_width = x[kRightSide];
  w.layout.target_height = x[kTopSide];
  for (int i = 0; i < fp.n(); ++i) {
    const Room& r = fp.rooms[static_cast<std::size_t>(i)];
    w.layout.placements.push_back(
        {i, x[static_cast<std::size_t>(r.left)], x[static_cast<std::size_t>(r.bottom)], false});
  }
  return w;
}

}  // namespace

IsoSearchResult search_isoperimetric(int n, const IsoSearchOptions& opts) {
  const auto plans = enumerate_floorplans(n);
  IsoSearchResult res;
  res.floorplans = plans.size();
  if (n < 2) {
    res.forced_equal_area = plans.size();
    res.status = IsoStatus::ExhaustedNoSolution;
    return res;
  }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t idx = 0; idx < plans.size(); ++idx) {
    if (opts.max_witnesses && res.witnesses.size() >= opts.max_witnesses) break;
    const Floorplan& fp = plans[idx];
    const IsoSystem sys = isoperimetric_system(fp);
    const LinearResult lr = solve_linear_exact(sys.rows, sys.rhs, sys.names);
    if (std::holds_alternative<Infeasible>(lr)) {
      ++res.no_positive_realisation;
      continue;
    }
    const auto& sol = std::get<ParamSolution>(lr);

    std::vector<AffineForm> widths;
    for (int i = 0; i < n; ++i) widths.push_back(coordinate_form(sol, sys.width_var(i)));
    bool forced = false;
    for (int i = 0; i < n && !forced; ++i)
      for (int j = i + 1; j < n && !forced; ++j) {
        const auto& a = widths[static_cast<std::size_t>(i)];
        const auto& b = widths[static_cast<std::size_t>(j)];
        forced = zero_form(combine(a, b, -1, 0)) || zero_form(combine(a, b, 1, -1));
      }
    if (forced) {
      ++res.forced_equal_area;
      continue;
    }

    std::vector<AffineForm> positive;
    for (int i = 0; i < n; ++i) {
      positive.push_back(widths[static_cast<std::size_t>(i)]);
      positive.push_back(coordinate_form(sol, sys.height_var(i)));
    }
    const StrictRegion region(sol.dimension(), positive);
    if (!region.decided()) {
      res.residual.push_back(idx);
      continue;
    }
    if (region.empty()) {
      ++res.no_positive_realisation;
      continue;
    }

    bool found = false;
    for (std::size_t attempt = 0; attempt <= opts.samples && !found; ++attempt) {
      const RVector t = attempt == 0 ? region.interior_point() : region.sample(rng);
      const RVector x = sol.at(t);
      if (!distinct_areas(x, sys, n)) continue;
      IsoWitness w = make_witness(idx, fp, sys, x);
      if (!is_valid(verify_layout(w.tiles, w.layout)))
        throw std::logic_error("isoperimetric witness failed verification");
      res.witnesses.push_back(std::move(w));
      found = true;
    }
    if (!found) res.residual.push_back(idx);
  }
  if (!res.witnesses.empty())
    res.status = IsoStatus::Found;
  else
    res.status = res.residual.empty() ? IsoStatus::ExhaustedNoSolution : IsoStatus::Inconclusive;
  return res;
}

}  // namespace geomkit::tiling
