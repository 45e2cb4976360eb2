#include "geomkit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace geomkit::io {

namespace {

const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string px(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

Rational parse_field(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json tiles_to_json(const tiling::TileSet& ts) {
  json arr = json::array();
  for (const auto& t : ts.tiles())
    arr.push_back({{"id", t.id},
                   {"width", t.width.str()},
                   {"height", t.height.str()},
                   {"area", t.area().str()},
                   {"perimeter", (Rational(2) * (t.width + t.height)).str()}});
  return arr;
}

json layout_to_json(const tiling::Layout& l) {
  json placements = json::array();
  for (const auto& p : l.placements)
    placements.push_back({{"id", p.tile_id}, {"x", p.x.str()}, {"y", p.y.str()}, {"rotated", p.rotated}});
  return {{"target", {l.target_width.str(), l.target_height.str()}}, {"placements", placements}};
}

tiling::Layout layout_from_json(const json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("placements"))
    throw std::invalid_argument("layout needs \"target\" and \"placements\"");
  const json& t = j.at("target");
  if (!t.is_array() || t.size() != 2) throw std::invalid_argument("target must be [W, H]");
  tiling::Layout l;
  l.target_width = parse_field(t[0], "target width");
  l.target_height = parse_field(t[1], "target height");
  for (const json& p : j.at("placements")) {
    if (!p.is_object() || !p.contains("id") || !p.contains("x") || !p.contains("y"))
      throw std::invalid_argument("placement needs id, x, y");
    tiling::Placement pl;
    pl.tile_id = p.at("id").is_string() ? std::stoi(p.at("id").get<std::string>()) : p.at("id").get<int>();
    pl.x = parse_field(p.at("x"), "x");
    pl.y = parse_field(p.at("y"), "y");
    pl.rotated = p.value("rotated", false);
    l.placements.push_back(pl);
  }
  return l;
}

std::string svg_layout(const tiling::TileSet& ts, const tiling::Layout& l) {
  const double W = l.target_width.to_double() * kPixelsPerUnit;
  const double H = l.target_height.to_double() * kPixelsPerUnit;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(W) << "\" height=\"" << px(H)
     << "\" viewBox=\"0 0 " << px(W) << ' ' << px(H) << "\">\n";
  for (std::size_t k = 0; k < l.placements.size(); ++k) {
    const auto& p = l.placements[k];
    const tiling::Tile* t = ts.find(p.tile_id);
    if (!t) throw std::invalid_argument("layout references unknown tile " + std::to_string(p.tile_id));
    const double w = (p.rotated ? t->height : t->width).to_double() * kPixelsPerUnit;
    const double h = (p.rotated ? t->width : t->height).to_double() * kPixelsPerUnit;
    const double x = p.x.to_double() * kPixelsPerUnit;
    const double y = H - p.y.to_double() * kPixelsPerUnit - h;
    os << "  <rect id=\"tile-" << p.tile_id << "\" x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\"" << px(w)
       << "\" height=\"" << px(h) << "\" fill=\"" << kPalette[k % std::size(kPalette)]
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_polygons(const std::vector<std::vector<Vec2>>& pieces) {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (const auto& pc : pieces)
    for (const Vec2& v : pc) {
      x0 = std::min(x0, v.x);
      y0 = std::min(y0, v.y);
      x1 = std::max(x1, v.x);
      y1 = std::max(y1, v.y);
    }
  if (!(x1 >= x0)) x0 = y0 = x1 = y1 = 0.0;
  const double W = (x1 - x0) * kPixelsPerUnit, H = (y1 - y0) * kPixelsPerUnit;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(W) << "\" height=\"" << px(H)
     << "\" viewBox=\"0 0 " << px(W) << ' ' << px(H) << "\">\n";
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < pieces[k].size(); ++i) {
      const Vec2& v = pieces[k][i];
      os << (i ? " " : "") << px((v.x - x0) * kPixelsPerUnit) << ',' << px((y1 - v.y) * kPixelsPerUnit);
    }
    os << "\" fill=\"" << kPalette[k % std::size(kPalette)] << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace geomkit::io
