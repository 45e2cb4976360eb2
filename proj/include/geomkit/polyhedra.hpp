#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace geomkit::poly {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/// Polygonal faces as vertex-index cycles, counterclockwise seen from
/// outside.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;

  std::size_t edge_count() const;
};

class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws MeshError unless faces are planar (1e-9 of the bounding-box
/// diagonal), every edge is used once in each direction and V - E + F = 2.
void validate(const Mesh& m);

/// Divergence-theorem volume over fan-triangulated faces. Throws MeshError
/// when face orientations are inconsistent.
double volume(const Mesh& m);
double surface_area(const Mesh& m);
bool is_convex(const Mesh& m);

/// Quantised (angle, edge length) cycle, minimised over rotations and both
/// orientations.
using FaceSignature = std::vector<long long>;

struct FaceClass {
  std::string label;  // e.g. "square", "equilateral_triangle", "isosceles_triangle"
  std::size_t count = 0;
};

struct FaceMultiset {
  std::map<FaceSignature, FaceClass> classes;

  std::size_t total() const;
  /// label -> count, summed over classes with the same label.
  std::map<std::string, std::size_t> by_label() const;
};

/// Signatures use a length quantum; by default 1e-6 of the mean edge length.
FaceMultiset face_multiset(const Mesh& m, double length_quantum = 0.0);
bool multiset_equal(const FaceMultiset& a, const FaceMultiset& b);
double mean_edge_length(const Mesh& m);

/// Sorted pairwise vertex distances agree within 1e-9 of the scale. A
/// mismatch proves non-congruence; a match is only "possibly congruent".
bool possibly_congruent(const Mesh& a, const Mesh& b);

Mesh rigid_transform(const Mesh& m, const double rotation[3][3], Vec3 shift);

enum class PyramidMode { Opposite, Adjacent };

/// Cube [0,a]^3 with square pyramids of height h on two faces. Requires
/// 0 < h < a / 2 unless `enforce_convex` is false.
Mesh build_cube_with_pyramids(double a, double h, PyramidMode mode, bool enforce_convex = true);
Mesh build_cube(double a = 1.0);
Mesh build_cuboid(double a, double b, double c);

/// Faces found as supporting planes of the vertex set.
Mesh build_rhombicuboctahedron();
/// Top square cupola turned by 45 degrees.
Mesh build_pseudorhombicuboctahedron();

/// Regular 20-gon equator of side s with apexes at lateral edge l.
Mesh build_icosagonal_dipyramid(double s, double l);
/// Decagonal antiprism (twist pi/10, lateral edge l) capped by two decagonal
/// pyramids with lateral edge l.
Mesh build_decagonal_dipyramidal_antiprism(double s, double l);
/// Smallest l (by bisection) at which both 40-triangle solids exist and are
/// convex.
double min_feasible_leg(double s);

/// Convex hull faces of a point set whose hull facets are exactly the
/// supporting planes through at least three points.
Mesh hull_mesh(const std::vector<Vec3>& pts);

struct MeshSummary {
  std::string name;
  bool convex = false;
  std::size_t vertices = 0, edges = 0, faces = 0;
  double volume = 0.0;
  double surface_area = 0.0;
  std::map<std::string, std::size_t> face_labels;
  int multiset_class = 0;
  int congruence_class = 0;
};

struct CompareReport {
  std::vector<MeshSummary> meshes;
  bool all_multisets_equal = false;
  bool volumes_equal = false;  // within 1e-9 relative
};

/// Needs at least two meshes.
CompareReport compare_report(const std::vector<std::pair<std::string, Mesh>>& meshes);

std::string to_obj(const Mesh& m);

}  // namespace geomkit::poly
