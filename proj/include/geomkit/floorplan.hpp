#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomkit/linear.hpp"
#include "geomkit/tiling.hpp"

namespace geomkit::tiling {

inline constexpr int kMaxFloorplanRooms = 8;

/// Maximal segments 0..3 are the left, bottom, right and top sides of the
/// enclosing rectangle; internal segments follow.
inline constexpr int kLeftSide = 0;
inline constexpr int kBottomSide = 1;
inline constexpr int kRightSide = 2;
inline constexpr int kTopSide = 3;

struct Room {
  int left = kLeftSide;
  int right = kRightSide;
  int bottom = kBottomSide;
  int top = kTopSide;

  friend bool operator==(const Room&, const Room&) = default;
};

/// Mosaic floorplan: rooms with their bounding maximal segments.
struct Floorplan {
  std::vector<Room> rooms;
  std::vector<bool> vertical;  // per segment id

  int n() const { return static_cast<int>(rooms.size()); }
  int segments() const { return static_cast<int>(vertical.size()); }
  /// Compact text form "l,r,b,t;l,r,b,t;...".
  std::string encode() const;
};

/// All mosaic floorplans with n rooms, 1 <= n <= 8. Built by inserting a
/// new top-right room over the top or right boundary rooms, so every
/// floorplan arises exactly once; order is deterministic. Throws
/// UnsupportedInstance for n > 8.
std::vector<Floorplan> enumerate_floorplans(int n);

/// Baxter permutations of 1..n (one-line notation), by avoidance of the
/// vincular patterns 2-41-3 and 3-14-2. Their count equals the number of
/// mosaic floorplans.
std::vector<std::vector<int>> baxter_permutations(int n);
bool is_baxter(const std::vector<int>& perm);

/// Deletion sequence of the top-right room, innermost first; identifies the
/// floorplan uniquely.
std::vector<int> insertion_code(const Floorplan& fp);

struct RoomRect {
  Rational x0, y0, x1, y1;
};

/// Segment structure of a rectangle dissection. nullopt when four rooms
/// meet at a point or the rectangles do not dissect their bounding box.
std::optional<Floorplan> floorplan_from_rects(const std::vector<RoomRect>& rects);
std::optional<Floorplan> floorplan_from_layout(const TileSet& ts, const Layout& layout);

/// Linear system of an isoperimetric realisation: one coordinate per
/// segment, then w_i, h_i per room, with w_i + h_i = 1.
struct IsoSystem {
  RMatrix rows;
  RVector rhs;
  std::vector<std::string> names;
  std::size_t width_var(int room) const { return segment_count + 2 * static_cast<std::size_t>(room); }
  std::size_t height_var(int room) const { return width_var(room) + 1; }
  std::size_t segment_count = 0;
};

IsoSystem isoperimetric_system(const Floorplan& fp);
LinearResult solve_isoperimetric(const Floorplan& fp);

enum class IsoStatus { Found, ExhaustedNoSolution, Inconclusive };
std::string to_string(IsoStatus s);

struct IsoWitness {
  std::size_t floorplan_index = 0;
  Floorplan floorplan;
  TileSet tiles;
  Layout layout;
};

struct IsoSearchOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t max_witnesses = 0;  // 0: no limit
};

struct IsoSearchResult {
  IsoStatus status = IsoStatus::Inconclusive;
  std::size_t floorplans = 0;
  std::size_t no_positive_realisation = 0;
  std::size_t forced_equal_area = 0;
  std::vector<IsoWitness> witnesses;
  std::vector<std::size_t> residual;  // undecided floorplan indices
};

/// Searches every n-room floorplan for an isoperimetric realisation whose
/// areas are pairwise distinct. A floorplan is excluded when its positive
/// region is empty or some area difference (w_i - w_j)(1 - w_i - w_j)
/// vanishes identically on the solution space.
IsoSearchResult search_isoperimetric(int n, const IsoSearchOptions& opts = {});

}  // namespace geomkit::tiling
