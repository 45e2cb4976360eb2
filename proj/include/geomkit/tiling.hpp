#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geomkit/rational.hpp"

namespace geomkit::tiling {

struct Tile {
  int id = 0;
  Rational width;
  Rational height;

  Rational area() const { return width * height; }
};

/// Nonempty multiset of tiles with strictly positive sides. Ids are unique.
class TileSet {
 public:
  TileSet() = default;
  explicit TileSet(std::vector<Tile> tiles);

  /// Builds tiles with ids 0..n-1 from (width, height) pairs.
  static TileSet from_dims(const std::vector<std::pair<Rational, Rational>>& dims);

  const std::vector<Tile>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  const Tile* find(int id) const;
  Rational total_area() const;

 private:
  std::vector<Tile> tiles_;
};

struct Placement {
  int tile_id = 0;
  Rational x;
  Rational y;
  bool rotated = false;
};

struct Layout {
  Rational target_width;
  Rational target_height;
  std::vector<Placement> placements;
};

enum class DefectKind { UnknownTile, DuplicateTile, OutOfBounds, Overlap, Gap, UnusedTile, AreaMismatch };

std::string_view to_string(DefectKind k);

struct DefectReport {
  DefectKind kind;
  std::vector<int> tile_ids;
  std::string message;
};

struct Valid {};

using Verification = std::variant<Valid, DefectReport>;

/// Exact check that `layout` dissects its target using every tile of `ts`
/// exactly once. Defects are reported in the order: unknown/duplicate tile,
/// out of bounds, overlap, gap (plane sweep over the compressed grid), unused
/// tile, area mismatch.
Verification verify_layout(const TileSet& ts, const Layout& layout);

inline bool is_valid(const Verification& v) { return std::holds_alternative<Valid>(v); }

class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultTileCap = 24;

struct EnumerateOptions {
  bool allow_rotation = true;
  std::size_t cap = kDefaultTileCap;
  /// Upper bound on memoised dead states per candidate rectangle.
  std::size_t memo_limit = 2'000'000;
};

struct LayoutEntry {
  Rational width;   // width >= height
  Rational height;
  Layout witness;
};

/// All unordered rectangle dimensions (W, H) that ts can tile exactly, one
/// witness each, sorted by W. Throws UnsupportedInstance above the cap.
std::vector<LayoutEntry> enumerate_layouts(const TileSet& ts, const EnumerateOptions& opts = {});

std::size_t layout_count(const TileSet& ts, const EnumerateOptions& opts = {});

/// Searches for a tiling of the specific W x H rectangle (the target is not
/// transposed).
std::optional<Layout> find_tiling(const TileSet& ts, const Rational& width, const Rational& height,
                                  const EnumerateOptions& opts = {});

enum class Axis { Width, Height };

/// Replaces tile `tile_id` by two pieces cut across `axis` at `position`
/// (0 < position < that dimension). The first piece keeps the id, the second
/// gets max id + 1. Throws std::invalid_argument on a bad id or position.
TileSet split_extension(const TileSet& ts, int tile_id, Axis axis, const Rational& position);

/// Parses the "WIDTH HEIGHT [COUNT]" tile format ('#' starts a comment).
/// Throws TileParseError with the 1-based line number.
class TileParseError : public std::runtime_error {
 public:
  TileParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

TileSet parse_tile_file(std::string_view text);

}  // namespace geomkit::tiling
