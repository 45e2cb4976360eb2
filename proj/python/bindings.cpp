#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "geomkit/cli.hpp"
#include "geomkit/extremal.hpp"
#include "geomkit/fair_partition.hpp"
#include "geomkit/hcn.hpp"
#include "geomkit/polygon.hpp"
#include "geomkit/polyhedra.hpp"
#include "geomkit/rational.hpp"

namespace py = pybind11;
using namespace geomkit;

namespace {

using Points = std::vector<std::pair<double, double>>;

ConvexPolygon to_polygon(const Points& pts) {
  std::vector<Vec2> v;
  for (auto [x, y] : pts) v.push_back({x, y});
  return ConvexPolygon::from_cycle(std::move(v));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::optional<std::string> arith(const std::string& a, const std::string& b, const std::string& op) {
  static const std::map<std::string, ArithOp> ops{
      {"+", ArithOp::Add}, {"-", ArithOp::Sub}, {"*", ArithOp::Mul}, {"/", ArithOp::Div}};
  const auto it = ops.find(op);
  if (it == ops.end()) throw std::invalid_argument("operator must be one of + - * /");
  const auto r = rational_arith(Rational::parse(a), Rational::parse(b), it->second);
  if (!r) return std::nullopt;
  return r->str();
}

py::dict metrics(const Points& pts) {
  const auto m = polygon_metrics(to_polygon(pts));
  py::dict d;
  d["area"] = m.area;
  d["perimeter"] = m.perimeter;
  return d;
}

py::object fair_cut(const Points& pts, double a, double b) {
  const auto r = fair::find_scaled_fair_cut(to_polygon(pts), fair::RatioTarget(a, b));
  py::dict d;
  if (const auto* nf = std::get_if<fair::NotFound>(&r)) {
    d["found"] = false;
    d["rho_min"] = nf->rho_min;
    d["rho_max"] = nf->rho_max;
    return std::move(d);
  }
  const auto& oc = std::get<fair::OrientedCut>(r);
  d["found"] = true;
  d["theta"] = oc.cut.theta;
  d["offset"] = oc.cut.offset;
  d["rho"] = oc.rho();
  d["target_area"] = oc.target_area();
  return std::move(d);
}

py::object lens(double area, double perimeter) {
  const auto r = shapes::max_diameter_shape(area, perimeter);
  if (std::holds_alternative<shapes::Infeasible>(r)) return py::none();
  const auto& l = std::get<shapes::Lens>(r);
  py::dict d;
  d["d"] = l.d;
  d["alpha"] = l.alpha;
  d["radius"] = l.radius();
  return std::move(d);
}

poly::Mesh build_solid(const std::string& name, double a, double h, double s, double l) {
  using namespace geomkit::poly;
  if (name == "cube") return build_cube(a);
  if (name == "cube-pyramids-opposite") return build_cube_with_pyramids(a, h, PyramidMode::Opposite);
  if (name == "cube-pyramids-adjacent") return build_cube_with_pyramids(a, h, PyramidMode::Adjacent);
  if (name == "rhombicuboctahedron") return build_rhombicuboctahedron();
  if (name == "pseudorhombicuboctahedron") return build_pseudorhombicuboctahedron();
  if (name == "icosagonal-dipyramid") return build_icosagonal_dipyramid(s, l);
  if (name == "decagonal-dipyramidal-antiprism") return build_decagonal_dipyramidal_antiprism(s, l);
  throw std::invalid_argument("unknown solid '" + name + "'");
}

py::dict solid_summary(const std::string& name, double a, double h, double s, double l) {
  const auto m = build_solid(name, a, h, s, l);
  poly::validate(m);
  py::dict d;
  d["vertices"] = m.vertices.size();
  d["edges"] = m.edge_count();
  d["faces"] = m.faces.size();
  d["volume"] = poly::volume(m);
  d["surface_area"] = poly::surface_area(m);
  d["convex"] = poly::is_convex(m);
  d["face_labels"] = poly::face_multiset(m).by_label();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "geomkit C++ core";
  py::register_exception<poly::MeshError>(m, "MeshError", PyExc_ValueError);

  m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
  m.def("rational_arith", &arith, py::arg("a"), py::arg("b"), py::arg("op"),
        "Exact arithmetic on rational strings; None on division by zero.");
  m.def("polygon_metrics", &metrics, py::arg("points"));
  m.def("diameter", [](const Points& p) { return diameter(to_polygon(p)); }, py::arg("points"));
  m.def("min_width", [](const Points& p) { return min_width(to_polygon(p)); }, py::arg("points"));
  m.def("fair_cut", &fair_cut, py::arg("points"), py::arg("a") = 1.0, py::arg("b") = 1.0);
  m.def("max_diameter_lens", &lens, py::arg("area"), py::arg("perimeter"));
  m.def("hcn_up_to", &tiling::hcn_up_to, py::arg("limit"));
  m.def("divisor_count", &tiling::divisor_count, py::arg("n"));
  m.def("solid_summary", &solid_summary, py::arg("name"), py::arg("a") = 1.0, py::arg("height") = 0.3,
        py::arg("s") = 1.0, py::arg("l") = 4.0);
}
