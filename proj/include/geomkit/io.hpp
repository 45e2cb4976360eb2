#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "geomkit/polygon.hpp"
#include "geomkit/polyhedra.hpp"
#include "geomkit/tiling.hpp"

namespace geomkit::io {

using json = nlohmann::ordered_json;

inline constexpr double kPixelsPerUnit = 20.0;

/// 17 significant digits.
std::string fmt(double v);

json tiles_to_json(const tiling::TileSet& ts);
/// {target: [W, H], placements: [{id, x, y, rotated}]}, numbers as "p/q".
json layout_to_json(const tiling::Layout& l);
/// Throws std::invalid_argument on a malformed document.
tiling::Layout layout_from_json(const json& j);

/// One <rect> per placement inside a (20 W) x (20 H) frame, y pointing up.
std::string svg_layout(const tiling::TileSet& ts, const tiling::Layout& l);
/// One <polygon> per piece; the frame is the bounding box of all pieces.
std::string svg_polygons(const std::vector<std::vector<Vec2>>& pieces);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace geomkit::io
