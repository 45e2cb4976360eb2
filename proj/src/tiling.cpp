#include "geomkit/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace geomkit::tiling {

TileSet::TileSet(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw std::invalid_argument("tile set must be nonempty");
  std::set<int> ids;
  for (const auto& t : tiles_) {
    if (t.width.sign() <= 0 || t.height.sign() <= 0)
      throw std::invalid_argument("tile " + std::to_string(t.id) + " has a non-positive side");
    if (!ids.insert(t.id).second) throw std::invalid_argument("duplicate tile id " + std::to_string(t.id));
  }
}

TileSet TileSet::from_dims(const std::vector<std::pair<Rational, Rational>>& dims) {
  std::vector<Tile> tiles;
  for (std::size_t i = 0; i < dims.size(); ++i) tiles.push_back({static_cast<int>(i), dims[i].first, dims[i].second});
  return TileSet(std::move(tiles));
}

const Tile* TileSet::find(int id) const {
  for (const auto& t : tiles_)
    if (t.id == id) return &t;
  return nullptr;
}

Rational TileSet::total_area() const {
  Rational a;
  for (const auto& t : tiles_) a += t.area();
  return a;
}

std::string_view to_string(DefectKind k) {
  switch (k) {
    case DefectKind::UnknownTile: return "unknown_tile";
    case DefectKind::DuplicateTile: return "duplicate_tile";
    case DefectKind::OutOfBounds: return "out_of_bounds";
    case DefectKind::Overlap: return "overlap";
    case DefectKind::Gap: return "gap";
    case DefectKind::UnusedTile: return "unused_tile";
    case DefectKind::AreaMismatch: return "area_mismatch";
  }
  return "unknown";
}

namespace {

struct PlacedRect {
  int id;
  Rational x0, y0, x1, y1;
};

}  // namespace

Verification verify_layout(const TileSet& ts, const Layout& layout) {
  const Rational& W = layout.target_width;
  const Rational& H = layout.target_height;
  std::vector<PlacedRect> rects;
  std::set<int> used;
  for (const auto& p : layout.placements) {
    const Tile* t = ts.find(p.tile_id);
    if (!t) return DefectReport{DefectKind::UnknownTile, {p.tile_id}, "tile id not in tile set"};
    if (!used.insert(p.tile_id).second)
      return DefectReport{DefectKind::DuplicateTile, {p.tile_id}, "tile placed more than once"};
    const Rational& w = p.rotated ? t->height : t->width;
    const Rational& h = p.rotated ? t->width : t->height;
    rects.push_back({p.tile_id, p.x, p.y, p.x + w, p.y + h});
  }
  for (const auto& r : rects) {
    if (r.x0.sign() < 0 || r.y0.sign() < 0 || r.x1 > W || r.y1 > H)
      return DefectReport{DefectKind::OutOfBounds, {r.id}, "tile extends outside the target rectangle"};
  }
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      const auto& a = rects[i];
      const auto& b = rects[j];
      if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1)
        return DefectReport{DefectKind::Overlap, {a.id, b.id},
                            "tiles overlap near (" + b.x0.short_str() + ", " + b.y0.short_str() + ")"};
    }
  }

  // Sweep over x-strips between consecutive breakpoints; in each strip the
  // covering y-intervals must tile [0, H] without holes.
  std::vector<Rational> xs{Rational(0), W};
  for (const auto& r : rects) {
    xs.push_back(r.x0);
    xs.push_back(r.x1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const Rational& lo = xs[s];
    const Rational& hi = xs[s + 1];
    if (hi > W) break;
    std::vector<std::pair<Rational, Rational>> spans;
    for (const auto& r : rects)
      if (r.x0 <= lo && hi <= r.x1) spans.emplace_back(r.y0, r.y1);
    std::sort(spans.begin(), spans.end());
    Rational reach;
    for (const auto& [y0, y1] : spans) {
      if (y0 > reach) break;
      reach = std::max(reach, y1);
    }
    if (reach < H)
      return DefectReport{DefectKind::Gap, {},
                          "uncovered point near (" + lo.short_str() + ", " + reach.short_str() + ")"};
  }

  for (const auto& t : ts.tiles())
    if (!used.count(t.id)) return DefectReport{DefectKind::UnusedTile, {t.id}, "tile not placed"};

  Rational area;
  for (const auto& r : rects) area += (r.x1 - r.x0) * (r.y1 - r.y0);
  if (area != W * H) return DefectReport{DefectKind::AreaMismatch, {}, "tile areas do not sum to target area"};
  return Valid{};
}

namespace {

using i64 = std::int64_t;

struct TileType {
  i64 a = 0, b = 0;  // as given (width, height), or (min, max) when rotation is allowed
  std::vector<int> ids;
  std::vector<std::pair<i64, i64>> orientations;  // (width, height) options
};

struct Segment {
  i64 x, w, h;
};

struct Placed {
  std::size_t type;
  std::size_t orient;
  i64 x, y;
};

enum class Outcome { Found, Exhausted, Budget };

class SkylineSearch {
 public:
  SkylineSearch(std::vector<TileType> types, i64 W, i64 H, std::size_t memo_limit)
      : types_(std::move(types)), W_(W), H_(H), memo_limit_(memo_limit) {
    counts_.reserve(types_.size());
    for (const auto& t : types_) {
      counts_.push_back(static_cast<int>(t.ids.size()));
      remaining_ += t.ids.size();
    }
    skyline_.push_back({0, W_, 0});
  }

  /// Runs from the root with a node budget. Dead states found in earlier
  /// runs are kept, so repeated calls with growing budgets make progress.
  Outcome run(std::size_t node_budget) {
    budget_ = node_budget;
    nodes_ = 0;
    return dfs();
  }
  const std::vector<Placed>& placed() const { return placed_; }
  const std::vector<TileType>& types() const { return types_; }

 private:
  std::string key() const {
    std::string k;
    k.reserve(skyline_.size() * 16 + counts_.size() * 4);
    auto put = [&](i64 v) { k.append(reinterpret_cast<const char*>(&v), sizeof v); };
    for (const auto& s : skyline_) {
      put(s.w);
      put(s.h);
    }
    k.push_back('|');
    for (int c : counts_) k.append(reinterpret_cast<const char*>(&c), sizeof c);
    return k;
  }

  // Widths of the remaining tiles (orientations no taller than max_h) can
  // sum exactly to g.
  bool fillable(i64 g, i64 max_h) {
    std::string k;
    k.reserve(16 + counts_.size() * 4);
    k.append(reinterpret_cast<const char*>(&g), sizeof g);
    k.append(reinterpret_cast<const char*>(&max_h), sizeof max_h);
    for (int c : counts_) k.append(reinterpret_cast<const char*>(&c), sizeof c);
    if (auto it = fill_cache_.find(k); it != fill_cache_.end()) return it->second;

    std::vector<char> reach(static_cast<std::size_t>(g) + 1, 0);
    reach[0] = 1;
    for (std::size_t t = 0; t < types_.size() && !reach[static_cast<std::size_t>(g)]; ++t) {
      std::vector<i64> ws;
      for (const auto& [w, h] : types_[t].orientations)
        if (h <= max_h && w <= g) ws.push_back(w);
      if (ws.empty()) continue;
      for (int c = 0; c < counts_[t]; ++c) {
        bool grew = false;
        for (i64 v = g; v >= 0; --v) {
          if (!reach[static_cast<std::size_t>(v)]) continue;
          for (i64 w : ws)
            if (v + w <= g && !reach[static_cast<std::size_t>(v + w)]) {
              reach[static_cast<std::size_t>(v + w)] = 2;  // mark new this round
              grew = true;
            }
        }
        for (auto& r : reach)
          if (r == 2) r = 1;
        if (!grew) break;
      }
    }
    const bool ok = reach[static_cast<std::size_t>(g)] != 0;
    if (fill_cache_.size() < memo_limit_) fill_cache_.emplace(std::move(k), ok);
    return ok;
  }

  // Every segment lower than both neighbours must later be covered exactly by
  // tile bottoms resting on it.
  bool wells_fillable() {
    for (std::size_t i = 0; i < skyline_.size(); ++i) {
      if (skyline_[i].h == H_) continue;
      const bool left_higher = i == 0 || skyline_[i - 1].h > skyline_[i].h;
      const bool right_higher = i + 1 == skyline_.size() || skyline_[i + 1].h > skyline_[i].h;
      if (left_higher && right_higher && !fillable(skyline_[i].w, H_ - skyline_[i].h)) return false;
    }
    return true;
  }

  Outcome dfs() {
    if (remaining_ == 0) return Outcome::Found;
    if (++nodes_ > budget_) return Outcome::Budget;
    std::size_t low = 0;
    for (std::size_t i = 1; i < skyline_.size(); ++i)
      if (skyline_[i].h < skyline_[low].h) low = i;
    const Segment seg = skyline_[low];

    std::string k;
    if (dead_.size() < memo_limit_) {
      k = key();
      if (dead_.count(k)) return Outcome::Exhausted;
    }

    bool complete = true;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (counts_[t] == 0) continue;
      for (std::size_t o = 0; o < types_[t].orientations.size(); ++o) {
        const auto [w, h] = types_[t].orientations[o];
        if (w > seg.w || seg.h + h > H_) continue;
        const auto saved = skyline_;
        place(low, w, h);
        --counts_[t];
        --remaining_;
        placed_.push_back({t, o, seg.x, seg.h});
        Outcome sub = wells_fillable() ? dfs() : Outcome::Exhausted;
        if (sub == Outcome::Found) return sub;
        placed_.pop_back();
        ++remaining_;
        ++counts_[t];
        skyline_ = saved;
        if (sub == Outcome::Budget) {
          complete = false;
          break;
        }
      }
      if (!complete) break;
    }
    if (!complete) return Outcome::Budget;
    if (!k.empty()) dead_.insert(std::move(k));
    return Outcome::Exhausted;
  }

  void place(std::size_t idx, i64 w, i64 h) {
    Segment seg = skyline_[idx];
    std::vector<Segment> repl{{seg.x, w, seg.h + h}};
    if (w < seg.w) repl.push_back({seg.x + w, seg.w - w, seg.h});
    skyline_.erase(skyline_.begin() + static_cast<std::ptrdiff_t>(idx));
    skyline_.insert(skyline_.begin() + static_cast<std::ptrdiff_t>(idx), repl.begin(), repl.end());
    std::vector<Segment> merged;
    for (const auto& s : skyline_) {
      if (!merged.empty() && merged.back().h == s.h)
        merged.back().w += s.w;
      else
        merged.push_back(s);
    }
    skyline_ = std::move(merged);
  }

  std::vector<TileType> types_;
  i64 W_, H_;
  std::size_t memo_limit_;
  std::size_t budget_ = 0;
  std::size_t nodes_ = 0;
  std::vector<int> counts_;
  std::size_t remaining_ = 0;
  std::vector<Segment> skyline_;
  std::vector<Placed> placed_;
  std::unordered_set<std::string> dead_;
  std::unordered_map<std::string, bool> fill_cache_;
};

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

BigInt common_denominator(const TileSet& ts, std::initializer_list<const Rational*> extra = {}) {
  BigInt l = 1;
  for (const auto& t : ts.tiles()) {
    l = lcm_big(l, t.width.den());
    l = lcm_big(l, t.height.den());
  }
  for (const Rational* r : extra) l = lcm_big(l, r->den());
  return l;
}

i64 scaled(const Rational& r, const BigInt& scale) {
  const Rational s = r * Rational(scale, 1);
  return to_int64(s.num());
}

std::vector<TileType> make_types(const TileSet& ts, const BigInt& scale, bool allow_rotation) {
  std::map<std::pair<i64, i64>, std::vector<int>> groups;
  for (const auto& t : ts.tiles()) {
    i64 a = scaled(t.width, scale), b = scaled(t.height, scale);
    if (allow_rotation && a > b) std::swap(a, b);
    groups[{a, b}].push_back(t.id);
  }
  std::vector<TileType> types;
  for (auto& [dims, ids] : groups) {
    TileType tt;
    tt.a = dims.first;
    tt.b = dims.second;
    tt.ids = std::move(ids);
    tt.orientations.push_back({tt.a, tt.b});
    if (allow_rotation && tt.a != tt.b) tt.orientations.push_back({tt.b, tt.a});
    types.push_back(std::move(tt));
  }
  // Larger tiles first: they are the most constrained.
  std::stable_sort(types.begin(), types.end(),
                   [](const TileType& x, const TileType& y) { return x.a * x.b > y.a * y.b; });
  return types;
}

Layout to_layout(const TileSet& ts, const SkylineSearch& s, i64 W, i64 H, const BigInt& scale) {
  const Rational inv(1, scale);
  Layout out;
  out.target_width = Rational(W) * inv;
  out.target_height = Rational(H) * inv;
  std::vector<std::size_t> next_id(s.types().size(), 0);
  for (const auto& p : s.placed()) {
    const TileType& tt = s.types()[p.type];
    const i64 placed_width = tt.orientations[p.orient].first;
    const int id = tt.ids[next_id[p.type]++];
    const Tile* tile = ts.find(id);
    const bool rotated = tile->width != tile->height && Rational(placed_width) * inv != tile->width;
    out.placements.push_back({id, Rational(p.x) * inv, Rational(p.y) * inv, rotated});
  }
  return out;
}

Layout transposed(Layout lay, const TileSet& ts) {
  std::swap(lay.target_width, lay.target_height);
  for (auto& p : lay.placements) {
    std::swap(p.x, p.y);
    const Tile* t = ts.find(p.tile_id);
    if (t->width != t->height) p.rotated = !p.rotated;
  }
  return lay;
}

// Exact search for a W x H tiling. With rotation allowed the transposed
// H x W problem is equivalent, so both are run alternately under a doubling
// node budget; whichever finishes first decides.
std::optional<Layout> search_rect(const TileSet& ts, const std::vector<TileType>& types, i64 W, i64 H,
                                  const BigInt& scale, std::size_t memo_limit, bool allow_rotation) {
  SkylineSearch direct(types, W, H, memo_limit);
  if (!allow_rotation || W == H) {
    if (direct.run(std::numeric_limits<std::size_t>::max()) == Outcome::Found)
      return to_layout(ts, direct, W, H, scale);
    return std::nullopt;
  }
  SkylineSearch flipped(types, H, W, memo_limit);
  // Prefer the narrow orientation first: fewer skyline segments.
  SkylineSearch* first = W <= H ? &direct : &flipped;
  SkylineSearch* second = W <= H ? &flipped : &direct;
  for (std::size_t budget = 4096;; budget *= 2) {
    for (SkylineSearch* s : {first, second}) {
      const Outcome o = s->run(budget);
      if (o == Outcome::Exhausted) return std::nullopt;
      if (o == Outcome::Found) {
        if (s == &direct) return to_layout(ts, direct, W, H, scale);
        return transposed(to_layout(ts, flipped, H, W, scale), ts);
      }
    }
  }
}

std::set<i64> subset_sums(const std::vector<TileType>& types, bool allow_rotation, bool use_height, i64 limit) {
  std::set<i64> sums{0};
  for (const auto& t : types) {
    for (std::size_t c = 0; c < t.ids.size(); ++c) {
      std::set<i64> next = sums;
      for (i64 s : sums) {
        for (const auto& [w, h] : t.orientations) {
          const i64 v = use_height && !allow_rotation ? h : w;
          if (s + v <= limit) next.insert(s + v);
        }
      }
      sums = std::move(next);
    }
  }
  return sums;
}

}  // namespace

std::optional<Layout> find_tiling(const TileSet& ts, const Rational& width, const Rational& height,
                                  const EnumerateOptions& opts) {
  if (ts.size() > opts.cap)
    throw UnsupportedInstance("tile set of " + std::to_string(ts.size()) + " exceeds cap " + std::to_string(opts.cap));
  if (ts.total_area() != width * height) return std::nullopt;
  const BigInt scale = common_denominator(ts, {&width, &height});
  const auto types = make_types(ts, scale, opts.allow_rotation);
  return search_rect(ts, types, scaled(width, scale), scaled(height, scale), scale, opts.memo_limit,
                     opts.allow_rotation);
}

std::vector<LayoutEntry> enumerate_layouts(const TileSet& ts, const EnumerateOptions& opts) {
  if (ts.size() > opts.cap)
    throw UnsupportedInstance("tile set of " + std::to_string(ts.size()) + " exceeds cap " + std::to_string(opts.cap));
  const BigInt scale = common_denominator(ts);
  const auto types = make_types(ts, scale, opts.allow_rotation);
  i64 A = 0;
  i64 min_side = std::numeric_limits<i64>::max();
  for (const auto& t : types) {
    A += static_cast<i64>(t.ids.size()) * t.a * t.b;
    min_side = std::min({min_side, t.a, t.b});
  }
  const i64 limit = A / min_side;
  const auto widths = subset_sums(types, opts.allow_rotation, false, limit);
  const auto heights = opts.allow_rotation ? widths : subset_sums(types, false, true, limit);

  std::map<std::pair<i64, i64>, Layout> found;  // key (max, min)
  for (i64 W : widths) {
    if (W == 0 || A % W != 0) continue;
    const i64 H = A / W;
    if (!heights.count(H)) continue;
    // With rotation allowed a W x H tiling transposes into an H x W one.
    if (opts.allow_rotation && W < H) continue;
    const std::pair<i64, i64> key{std::max(W, H), std::min(W, H)};
    if (found.count(key)) continue;
    if (auto lay = search_rect(ts, types, W, H, scale, opts.memo_limit, opts.allow_rotation)) found.emplace(key, std::move(*lay));
  }

  std::vector<LayoutEntry> out;
  const Rational inv(1, scale);
  for (auto& [key, lay] : found) out.push_back({Rational(key.first) * inv, Rational(key.second) * inv, std::move(lay)});
  std::sort(out.begin(), out.end(), [](const LayoutEntry& a, const LayoutEntry& b) {
    return a.width < b.width || (a.width == b.width && a.height < b.height);
  });
  return out;
}

std::size_t layout_count(const TileSet& ts, const EnumerateOptions& opts) {
  return enumerate_layouts(ts, opts).size();
}

TileSet split_extension(const TileSet& ts, int tile_id, Axis axis, const Rational& position) {
  const Tile* t = ts.find(tile_id);
  if (!t) throw std::invalid_argument("no tile with id " + std::to_string(tile_id));
  const Rational& dim = axis == Axis::Width ? t->width : t->height;
  if (position.sign() <= 0 || position >= dim)
    throw std::invalid_argument("split position must lie strictly inside the tile");
  int max_id = 0;
  for (const auto& x : ts.tiles()) max_id = std::max(max_id, x.id);
  std::vector<Tile> out;
  for (const auto& x : ts.tiles()) {
    if (x.id != tile_id) {
      out.push_back(x);
      continue;
    }
    if (axis == Axis::Width) {
      out.push_back({x.id, position, x.height});
      out.push_back({max_id + 1, x.width - position, x.height});
    } else {
      out.push_back({x.id, x.width, position});
      out.push_back({max_id + 1, x.width, x.height - position});
    }
  }
  return TileSet(std::move(out));
}

TileSet parse_tile_file(std::string_view text) {
  std::vector<Tile> tiles;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string s; in >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    if (tok.size() > 3) throw TileParseError(line_no, "expected WIDTH HEIGHT [COUNT]");
    if (tok.size() < 2) throw TileParseError(line_no, "expected WIDTH HEIGHT [COUNT]");
    Rational w, h;
    try {
      w = Rational::parse(tok[0]);
      h = Rational::parse(tok[1]);
    } catch (const std::exception& e) {
      throw TileParseError(line_no, e.what());
    }
    if (w.sign() <= 0 || h.sign() <= 0) throw TileParseError(line_no, "tile sides must be positive");
    long long count = 1;
    if (tok.size() == 3) {
      Rational c;
      try {
        c = Rational::parse(tok[2]);
      } catch (const std::exception& e) {
        throw TileParseError(line_no, e.what());
      }
      if (!c.is_integer() || c.sign() <= 0 || c > Rational(1'000'000))
        throw TileParseError(line_no, "COUNT must be a positive integer");
      count = static_cast<long long>(to_int64(c.num()));
    }
    for (long long i = 0; i < count; ++i) tiles.push_back({static_cast<int>(tiles.size()), w, h});
  }
  if (tiles.empty()) throw TileParseError(line_no, "no tiles");
  return TileSet(std::move(tiles));
}

}  // namespace geomkit::tiling
