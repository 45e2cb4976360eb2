#include "geomkit/hcn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace geomkit::tiling {

std::uint64_t divisor_count(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("divisor_count needs v >= 1");
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    std::uint64_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (v > 1) count *= 2;
  return count;
}

namespace {

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

void collect_candidates(std::size_t prime_idx, std::uint64_t value, std::uint64_t divisors, unsigned max_exp,
                        std::uint64_t limit, std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
  out.emplace_back(value, divisors);
  if (prime_idx >= std::size(kPrimes)) return;
  const std::uint64_t p = kPrimes[prime_idx];
  std::uint64_t v = value;
  for (unsigned e = 1; e <= max_exp; ++e) {
    if (v > limit / p) break;
    v *= p;
    collect_candidates(prime_idx + 1, v, divisors * (e + 1), e, limit, out);
  }
}

}  // namespace

std::vector<std::uint64_t> hcn_up_to(std::uint64_t limit) {
  if (limit > 1'000'000'000ULL) throw std::invalid_argument("hcn_up_to supports limit <= 1e9");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cands;
  if (limit >= 1) collect_candidates(0, 1, 1, 64, limit, cands);
  std::sort(cands.begin(), cands.end());
  std::vector<std::uint64_t> out;
  std::uint64_t record = 0;
  for (const auto& [v, d] : cands) {
    if (d > record) {
      record = d;
      out.push_back(v);
    }
  }
  return out;
}

bool is_hcn(std::uint64_t v) {
  if (v == 0) return false;
  const auto list = hcn_up_to(v);
  return !list.empty() && list.back() == v;
}

std::uint64_t triangular(std::uint64_t i) { return i * (i + 1) / 2; }

void HcnContext::validate() const {
  if (i == 0) throw std::invalid_argument("i must be >= 1");
  if (length.sign() <= 0) throw std::invalid_argument("tile length must be positive");
  if (!is_hcn(h)) throw std::invalid_argument(std::to_string(h) + " is not highly composite");
  if (h % m() != 0)
    throw std::invalid_argument("triangular(" + std::to_string(i) + ") = " + std::to_string(m()) +
                                " does not divide " + std::to_string(h));
}

TileSet build_hcn_tileset(const HcnContext& ctx) {
  ctx.validate();
  std::vector<Tile> tiles;
  const std::uint64_t d = ctx.d();
  for (std::uint64_t w = 1; w <= ctx.i; ++w)
    for (std::uint64_t k = 0; k < d; ++k)
      tiles.push_back({static_cast<int>(tiles.size()), Rational(static_cast<long long>(w)), ctx.length});
  return TileSet(std::move(tiles));
}

namespace {

// Fills groups one at a time, each with non-increasing widths; dead
// (counts, open-group sum, cap) states are memoised.
class GroupPartition {
 public:
  GroupPartition(std::vector<int> counts, std::uint64_t target) : counts_(std::move(counts)), target_(target) {}

  bool run() { return fill(0, static_cast<int>(counts_.size())); }
  const std::vector<std::vector<int>>& groups() const { return groups_; }

 private:
  // `sum` is the open group's width so far; widths in it must stay <= cap.
  bool fill(std::uint64_t sum, int cap) {
    if (sum == target_) {
      groups_.push_back(current_);
      current_.clear();
      bool done = std::all_of(counts_.begin(), counts_.end(), [](int c) { return c == 0; });
      if (done || fill(0, static_cast<int>(counts_.size()))) return true;
      current_ = groups_.back();
      groups_.pop_back();
      return false;
    }
    std::string key;
    for (int c : counts_) key += std::to_string(c) + ',';
    key += std::to_string(sum) + ':' + std::to_string(cap);
    if (dead_.count(key)) return false;
    for (int w = cap; w >= 1; --w) {
      if (counts_[static_cast<std::size_t>(w - 1)] == 0 || sum + static_cast<std::uint64_t>(w) > target_) continue;
      --counts_[static_cast<std::size_t>(w - 1)];
      current_.push_back(w);
      if (fill(sum + static_cast<std::uint64_t>(w), w)) return true;
      current_.pop_back();
      ++counts_[static_cast<std::size_t>(w - 1)];
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::vector<int> counts_;
  std::uint64_t target_;
  std::vector<int> current_;
  std::vector<std::vector<int>> groups_;
  std::unordered_set<std::string> dead_;
};

}  // namespace

std::optional<Layout> construct_width_layout(const HcnContext& ctx, std::uint64_t width) {
  ctx.validate();
  if (width == 0 || ctx.h % width != 0) throw std::invalid_argument("layout width must divide h");
  GroupPartition part(std::vector<int>(ctx.i, static_cast<int>(ctx.d())), width);
  if (!part.run()) return std::nullopt;

  // Hand out tile ids per width in order.
  std::vector<int> next(ctx.i, 0);
  const int d = static_cast<int>(ctx.d());
  Layout lay;
  lay.target_width = Rational(static_cast<long long>(width));
  lay.target_height = ctx.length * Rational(static_cast<long long>(ctx.h / width));
  Rational y;
  for (const auto& group : part.groups()) {
    Rational x;
    for (int w : group) {
      const int id = (w - 1) * d + next[static_cast<std::size_t>(w - 1)]++;
      lay.placements.push_back({id, x, y, false});
      x += Rational(w);
    }
    y += ctx.length;
  }
  return lay;
}

std::size_t HcnCensus::count() const {
  return static_cast<std::size_t>(std::count_if(feasible.begin(), feasible.end(), [](const auto& kv) { return kv.second; }));
}

HcnCensus hcn_layout_census(const HcnContext& ctx) {
  ctx.validate();
  HcnCensus census;
  for (std::uint64_t f = 1; f <= ctx.h; ++f)
    if (ctx.h % f == 0) census.feasible[f] = construct_width_layout(ctx, f).has_value();
  return census;
}

}  // namespace geomkit::tiling
