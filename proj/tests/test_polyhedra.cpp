#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "geomkit/polyhedra.hpp"

using namespace geomkit::poly;

namespace {

void random_rotation(std::mt19937_64& rng, double r[3][3]) {
  std::normal_distribution<double> g;
  double q[4];
  double n = 0.0;
  for (auto& x : q) {
    x = g(rng);
    n += x * x;
  }
  n = std::sqrt(n);
  for (auto& x : q) x /= n;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  const double m[3][3] = {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                          {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                          {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j];
}

Mesh relabel(const Mesh& m, std::mt19937_64& rng) {
  std::vector<int> perm(m.vertices.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Mesh out;
  out.vertices.resize(m.vertices.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.vertices[perm[i]] = m.vertices[i];
  for (const auto& f : m.faces) {
    std::vector<int> g;
    for (int v : f) g.push_back(perm[v]);
    std::rotate(g.begin(), g.begin() + static_cast<long>(rng() % g.size()), g.end());
    out.faces.push_back(g);
  }
  std::shuffle(out.faces.begin(), out.faces.end(), rng);
  return out;
}

std::vector<std::pair<std::string, Mesh>> example_meshes() {
  return {{"cube", build_cube()},
          {"opposite", build_cube_with_pyramids(1, 0.3, PyramidMode::Opposite)},
          {"adjacent", build_cube_with_pyramids(1, 0.3, PyramidMode::Adjacent)},
          {"rhombi", build_rhombicuboctahedron()},
          {"pseudo", build_pseudorhombicuboctahedron()},
          {"dipyramid", build_icosagonal_dipyramid(1, 4)},
          {"antiprism", build_decagonal_dipyramidal_antiprism(1, 4)}};
}

}  // namespace

TEST_CASE("cube") {
  const auto c = build_cube(2.0);
  validate(c);
  CHECK(volume(c) == doctest::Approx(8.0));
  CHECK(surface_area(c) == doctest::Approx(24.0));
  CHECK(is_convex(c));
  CHECK(face_multiset(c).by_label() == std::map<std::string, std::size_t>{{"square", 6}});
}

TEST_CASE("cube with two pyramids, both placements") {
  const auto o = build_cube_with_pyramids(1, 0.3, PyramidMode::Opposite);
  const auto a = build_cube_with_pyramids(1, 0.3, PyramidMode::Adjacent);
  for (const auto* m : {&o, &a}) {
    validate(*m);
    CHECK(m->vertices.size() == 10);
    CHECK(m->edge_count() == 20);
    CHECK(m->faces.size() == 12);
    CHECK(volume(*m) == doctest::Approx(1.2));
    CHECK(is_convex(*m));
    CHECK(face_multiset(*m).by_label() ==
          std::map<std::string, std::size_t>{{"isosceles_triangle", 8}, {"square", 4}});
  }
  CHECK(multiset_equal(face_multiset(o), face_multiset(a)));
  CHECK_FALSE(possibly_congruent(o, a));
}

TEST_CASE("pyramid height at the convexity limit") {
  const auto a = build_cube_with_pyramids(1, 0.49, PyramidMode::Adjacent);
  CHECK(is_convex(a));
  CHECK_THROWS(build_cube_with_pyramids(1, 0.5, PyramidMode::Adjacent));
  const auto tall = build_cube_with_pyramids(1, 0.6, PyramidMode::Adjacent, false);
  validate(tall);
  CHECK_FALSE(is_convex(tall));
  CHECK(is_convex(build_cube_with_pyramids(1, 0.6, PyramidMode::Opposite, false)));
}

TEST_CASE("rhombicuboctahedron and its twisted form") {
  const auto r = build_rhombicuboctahedron();
  const auto p = build_pseudorhombicuboctahedron();
  for (const auto* m : {&r, &p}) {
    validate(*m);
    CHECK(m->vertices.size() == 24);
    CHECK(m->edge_count() == 48);
    CHECK(m->faces.size() == 26);
    CHECK(is_convex(*m));
    CHECK(face_multiset(*m).by_label() ==
          std::map<std::string, std::size_t>{{"equilateral_triangle", 8}, {"square", 18}});
  }
  // Edge 2: volume (12 + 10 sqrt 2) / 3 * 8.
  CHECK(volume(r) == doctest::Approx((12 + 10 * std::sqrt(2.0)) / 3 * 8).epsilon(1e-12));
  CHECK(volume(p) == doctest::Approx(volume(r)).epsilon(1e-12));
  CHECK_FALSE(possibly_congruent(r, p));
}

TEST_CASE("forty-triangle pair") {
  const auto d = build_icosagonal_dipyramid(1, 4);
  const auto a = build_decagonal_dipyramidal_antiprism(1, 4);
  for (const auto* m : {&d, &a}) {
    validate(*m);
    CHECK(m->faces.size() == 40);
    CHECK(is_convex(*m));
    CHECK(face_multiset(*m).by_label() == std::map<std::string, std::size_t>{{"isosceles_triangle", 40}});
  }
  CHECK(multiset_equal(face_multiset(d), face_multiset(a)));
  CHECK(volume(d) > volume(a));
  CHECK_FALSE(possibly_congruent(d, a));
}

TEST_CASE("leg length near the feasibility threshold") {
  const double l0 = min_feasible_leg(1.0);
  CHECK(l0 == doctest::Approx(3.196226610750).epsilon(1e-9));
  const auto a = build_decagonal_dipyramidal_antiprism(1, l0 + 1e-6);
  validate(a);
  CHECK(is_convex(a));
  validate(build_icosagonal_dipyramid(1, l0 + 1e-6));
  // The 20-gon circumradius is the binding limit.
  CHECK(l0 == doctest::Approx(1.0 / (2 * std::sin(std::numbers::pi / 20))).epsilon(1e-9));
  CHECK_THROWS(build_icosagonal_dipyramid(1, l0 - 1e-3));
  CHECK(is_convex(build_decagonal_dipyramidal_antiprism(1, l0 - 1e-3)));
  CHECK_THROWS(build_icosagonal_dipyramid(1, 1.0 / (2 * std::sin(std::numbers::pi / 20))));
}

TEST_CASE("invariants survive rigid motions and relabeling") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> sh(-10, 10);
  for (const auto& [name, m] : example_meshes()) {
    CAPTURE(name);
    const auto fm = face_multiset(m, 1e-6);
    const double vol = volume(m), area = surface_area(m);
    for (int i = 0; i < 100; ++i) {
      double rot[3][3];
      random_rotation(rng, rot);
      const auto t = relabel(rigid_transform(m, rot, {sh(rng), sh(rng), sh(rng)}), rng);
      validate(t);
      CHECK(multiset_equal(face_multiset(t, 1e-6), fm));
      CHECK(std::abs(volume(t) - vol) <= 1e-9 * vol);
      CHECK(std::abs(surface_area(t) - area) <= 1e-9 * area);
      CHECK(possibly_congruent(t, m));
    }
  }
}

TEST_CASE("cube triangulated along different diagonals") {
  const auto c = build_cube();
  Mesh t1{c.vertices, {}}, t2{c.vertices, {}};
  for (const auto& f : c.faces) {
    t1.faces.push_back({f[0], f[1], f[2]});
    t1.faces.push_back({f[0], f[2], f[3]});
    t2.faces.push_back({f[1], f[2], f[3]});
    t2.faces.push_back({f[1], f[3], f[0]});
  }
  for (const auto* m : {&t1, &t2}) {
    validate(*m);
    CHECK(volume(*m) == doctest::Approx(1.0));
    CHECK(face_multiset(*m).by_label() == std::map<std::string, std::size_t>{{"isosceles_triangle", 12}});
  }
  CHECK(multiset_equal(face_multiset(t1), face_multiset(t2)));
}

TEST_CASE("cube against a 1 x 1 x 2 cuboid") {
  const auto rep = compare_report({{"cube", build_cube()}, {"cuboid", build_cuboid(1, 1, 2)}});
  CHECK_FALSE(rep.all_multisets_equal);
  CHECK_FALSE(rep.volumes_equal);
  CHECK(rep.meshes[0].multiset_class != rep.meshes[1].multiset_class);
  CHECK_THROWS(compare_report({{"cube", build_cube()}}));
}

TEST_CASE("compare report on the pyramid pair") {
  const auto rep = compare_report({{"o", build_cube_with_pyramids(1, 0.3, PyramidMode::Opposite)},
                                   {"a", build_cube_with_pyramids(1, 0.3, PyramidMode::Adjacent)}});
  CHECK(rep.all_multisets_equal);
  CHECK(rep.volumes_equal);
  CHECK(rep.meshes[0].congruence_class != rep.meshes[1].congruence_class);
}

TEST_CASE("validation rejects broken meshes") {
  auto c = build_cube();
  c.faces.pop_back();
  CHECK_THROWS_AS(validate(c), MeshError);
  auto flipped = build_cube();
  std::reverse(flipped.faces[0].begin(), flipped.faces[0].end());
  CHECK_THROWS_AS(validate(flipped), MeshError);
  auto bent = build_cube();
  bent.vertices[bent.faces[0][0]].z += 0.1;
  CHECK_THROWS_AS(validate(bent), MeshError);
}

TEST_CASE("OBJ export") {
  const auto m = build_rhombicuboctahedron();
  std::istringstream in(to_obj(m));
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) {
      ++f;
      CHECK(line.find(" 0") == std::string::npos);
    }
  }
  CHECK(v == 24);
  CHECK(f == 26);
}
