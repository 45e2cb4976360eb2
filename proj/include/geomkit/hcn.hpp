#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "geomkit/tiling.hpp"

namespace geomkit::tiling {

/// Number of positive divisors of v (v >= 1).
std::uint64_t divisor_count(std::uint64_t v);

/// Highly composite numbers (strict divisor-count records) up to `limit`,
/// limit <= 1e9. Record holders have non-increasing exponents over
/// consecutive primes, so only those candidates are scanned, in increasing
/// order.
std::vector<std::uint64_t> hcn_up_to(std::uint64_t limit);

bool is_hcn(std::uint64_t v);

/// i-th triangular number i(i+1)/2.
std::uint64_t triangular(std::uint64_t i);

/// h highly composite, m = triangular(i) dividing h, d = h / m, common tile
/// length L.
struct HcnContext {
  std::uint64_t h = 1;
  std::uint64_t i = 1;
  Rational length{100};

  std::uint64_t m() const { return triangular(i); }
  std::uint64_t d() const { return h / m(); }

  /// Throws std::invalid_argument when h is not highly composite or m does
  /// not divide h, or the length is not positive.
  void validate() const;
};

/// d tiles of each width 1..i, all of height L. Ids run width-major.
TileSet build_hcn_tileset(const HcnContext& ctx);

/// Partitions the widths into groups summing to F and stacks each group as
/// a row of height L. nullopt when no exact partition exists.
std::optional<Layout> construct_width_layout(const HcnContext& ctx, std::uint64_t width);

struct HcnCensus {
  std::map<std::uint64_t, bool> feasible;  // divisor F of h -> layout exists
  std::size_t count() const;
};

HcnCensus hcn_layout_census(const HcnContext& ctx);

}  // namespace geomkit::tiling
