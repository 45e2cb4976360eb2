#pragma once

// Brute-force floorplan oracle on small integer grids.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "geomkit/floorplan.hpp"

namespace testutil {

using geomkit::tiling::Floorplan;
using geomkit::tiling::Room;

struct GridRect {
  int x0, y0, x1, y1;
};

inline void dissect(int W, int H, int n, std::vector<std::vector<int>>& owner, std::vector<GridRect>& cur,
             std::vector<std::vector<GridRect>>& out) {
  int cx = -1, cy = -1;
  for (int y = 0; y < H && cy < 0; ++y)
    for (int x = 0; x < W; ++x)
      if (owner[y][x] < 0) {
        cx = x;
        cy = y;
        break;
      }
  if (cy < 0) {
    if (static_cast<int>(cur.size()) == n) out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == n) return;
  for (int x1 = cx + 1; x1 <= W && owner[cy][x1 - 1] < 0; ++x1)
    for (int y1 = cy + 1; y1 <= H; ++y1) {
      bool free = true;
      for (int x = cx; x < x1 && free; ++x) free = owner[y1 - 1][x] < 0;
      if (!free) break;
      for (int y = cy; y < y1; ++y)
        for (int x = cx; x < x1; ++x) owner[y][x] = static_cast<int>(cur.size());
      cur.push_back({cx, cy, x1, y1});
      dissect(W, H, n, owner, cur, out);
      cur.pop_back();
      for (int y = cy; y < y1; ++y)
        for (int x = cx; x < x1; ++x) owner[y][x] = -1;
    }
}

inline bool has_cross(const std::vector<GridRect>& rs) {
  std::map<std::pair<int, int>, int> corners;
  for (const auto& r : rs)
    for (auto p : {std::pair{r.x0, r.y0}, std::pair{r.x1, r.y0}, std::pair{r.x0, r.y1}, std::pair{r.x1, r.y1}}) ++corners[p];
  return std::any_of(corners.begin(), corners.end(), [](const auto& kv) { return kv.second >= 4; });
}

// A segment as (vertical?, rooms before, rooms after).
using SegKey = std::tuple<bool, std::vector<int>, std::vector<int>>;

inline std::vector<SegKey> grid_segments(const std::vector<GridRect>& rs) {
  // Edges on each line, merged into maximal collinear runs.
  struct Edge {
    int lo, hi, room;
    bool after;
  };
  std::map<std::pair<bool, int>, std::vector<Edge>> lines;
  for (int i = 0; i < static_cast<int>(rs.size()); ++i) {
    const auto& r = rs[static_cast<std::size_t>(i)];
    lines[{true, r.x0}].push_back({r.y0, r.y1, i, true});
    lines[{true, r.x1}].push_back({r.y0, r.y1, i, false});
    lines[{false, r.y0}].push_back({r.x0, r.x1, i, true});
    lines[{false, r.y1}].push_back({r.x0, r.x1, i, false});
  }
  std::vector<SegKey> segs;
  for (auto& [key, edges] : lines) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.lo < b.lo; });
    std::vector<int> before, after;
    int reach = edges.front().lo;
    const auto flush = [&] {
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      segs.emplace_back(key.first, before, after);
      before.clear();
      after.clear();
    };
    for (const auto& e : edges) {
      if (e.lo > reach) flush();
      (e.after ? after : before).push_back(e.room);
      reach = std::max(reach, e.hi);
    }
    flush();
  }
  return segs;
}

inline std::vector<SegKey> floorplan_segments(const Floorplan& fp) {
  std::vector<SegKey> segs;
  for (int s = 0; s < fp.segments(); ++s) {
    std::vector<int> before, after;
    const bool v = fp.vertical[static_cast<std::size_t>(s)];
    for (int i = 0; i < fp.n(); ++i) {
      const Room& r = fp.rooms[static_cast<std::size_t>(i)];
      if ((v ? r.right : r.top) == s) before.push_back(i);
      if ((v ? r.left : r.bottom) == s) after.push_back(i);
    }
    segs.emplace_back(v, before, after);
  }
  return segs;
}

inline std::vector<SegKey> canonical(const std::vector<SegKey>& segs, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SegKey> best;
  do {
    std::vector<SegKey> cur;
    for (const auto& [v, b, a] : segs) {
      std::vector<int> nb, na;
      for (int x : b) nb.push_back(perm[static_cast<std::size_t>(x)]);
      for (int x : a) na.push_back(perm[static_cast<std::size_t>(x)]);
      std::sort(nb.begin(), nb.end());
      std::sort(na.begin(), na.end());
      cur.emplace_back(v, nb, na);
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::set<std::vector<SegKey>> oracle_floorplans(int n) {
  std::set<std::vector<SegKey>> out;
  for (int W = 1; W <= n; ++W)
    for (int H = 1; H <= n; ++H) {
      std::vector<std::vector<int>> owner(static_cast<std::size_t>(H), std::vector<int>(static_cast<std::size_t>(W), -1));
      std::vector<GridRect> cur;
      std::vector<std::vector<GridRect>> all;
      dissect(W, H, n, owner, cur, all);
      for (const auto& d : all)
        if (!has_cross(d)) out.insert(canonical(grid_segments(d), n));
    }
  return out;
}

}  // namespace testutil
