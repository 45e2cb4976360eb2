#include "geomkit/polyhedra.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <set>

namespace geomkit::poly {

namespace {

constexpr double kPi = std::numbers::pi;

double bbox_diagonal(const Mesh& m) {
  Vec3 lo{INFINITY, INFINITY, INFINITY}, hi{-INFINITY, -INFINITY, -INFINITY};
  for (const Vec3& v : m.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  return norm(hi - lo);
}

// Newell normal (area-weighted, not normalised).
Vec3 newell(const Mesh& m, const std::vector<int>& f) {
  Vec3 n;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec3& a = m.vertices[static_cast<std::size_t>(f[i])];
    const Vec3& b = m.vertices[static_cast<std::size_t>(f[(i + 1) % f.size()])];
    n = n + cross(a, b);
  }
  return n;
}

Vec3 face_centroid(const Mesh& m, const std::vector<int>& f) {
  Vec3 c;
  for (int i : f) c = c + m.vertices[static_cast<std::size_t>(i)];
  return (1.0 / static_cast<double>(f.size())) * c;
}

Vec3 vertex_mean(const std::vector<Vec3>& pts) {
  Vec3 c;
  for (const Vec3& p : pts) c = c + p;
  return (1.0 / static_cast<double>(pts.size())) * c;
}

// Reverses faces whose normal points towards the vertex mean; valid for
// convex solids.
void orient_outward(Mesh& m) {
  const Vec3 c = vertex_mean(m.vertices);
  for (auto& f : m.faces)
    if (dot(newell(m, f), face_centroid(m, f) - c) < 0.0) std::reverse(f.begin(), f.end());
}

std::map<std::pair<int, int>, int> directed_edges(const Mesh& m) {
  std::map<std::pair<int, int>, int> e;
  for (const auto& f : m.faces)
    for (std::size_t i = 0; i < f.size(); ++i) ++e[{f[i], f[(i + 1) % f.size()]}];
  return e;
}

void check_orientation(const Mesh& m) {
  const auto e = directed_edges(m);
  for (const auto& [k, n] : e) {
    if (n != 1) throw MeshError("edge " + std::to_string(k.first) + "-" + std::to_string(k.second) + " used twice in one direction");
    if (!e.count({k.second, k.first}))
      throw MeshError("edge " + std::to_string(k.first) + "-" + std::to_string(k.second) + " has no opposite half");
  }
}

}  // namespace

std::size_t Mesh::edge_count() const {
  std::set<std::pair<int, int>> e;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      e.insert({std::min(a, b), std::max(a, b)});
    }
  return e.size();
}

void validate(const Mesh& m) {
  const double tol = 1e-9 * bbox_diagonal(m);
  for (std::size_t k = 0; k < m.faces.size(); ++k) {
    const auto& f = m.faces[k];
    if (f.size() < 3) throw MeshError("face " + std::to_string(k) + " has fewer than 3 vertices");
    for (int i : f)
      if (i < 0 || static_cast<std::size_t>(i) >= m.vertices.size()) throw MeshError("face index out of range");
    const Vec3 n = newell(m, f);
    const double len = norm(n);
    if (len == 0.0) throw MeshError("face " + std::to_string(k) + " is degenerate");
    const Vec3 c = face_centroid(m, f);
    for (int i : f)
      if (std::abs(dot(n, m.vertices[static_cast<std::size_t>(i)] - c)) / len > tol)
        throw MeshError("face " + std::to_string(k) + " is not planar");
  }
  check_orientation(m);
  const long euler = static_cast<long>(m.vertices.size()) - static_cast<long>(m.edge_count()) +
                     static_cast<long>(m.faces.size());
  if (euler != 2) throw MeshError("Euler characteristic " + std::to_string(euler) + " != 2");
}

double volume(const Mesh& m) {
  check_orientation(m);
  double v = 0.0;
  for (const auto& f : m.faces) {
    const Vec3& a = m.vertices[static_cast<std::size_t>(f[0])];
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
      v += dot(a, cross(m.vertices[static_cast<std::size_t>(f[i])], m.vertices[static_cast<std::size_t>(f[i + 1])]));
  }
  return v / 6.0;
}

double surface_area(const Mesh& m) {
  double s = 0.0;
  for (const auto& f : m.faces) s += 0.5 * norm(newell(m, f));
  return s;
}

bool is_convex(const Mesh& m) {
  const double tol = 1e-9 * bbox_diagonal(m);
  for (const auto& f : m.faces) {
    Vec3 n = newell(m, f);
    n = (1.0 / norm(n)) * n;
    const Vec3 c = face_centroid(m, f);
    for (const Vec3& v : m.vertices)
      if (dot(n, v - c) > tol) return false;
  }
  return true;
}

double mean_edge_length(const Mesh& m) {
  double total = 0.0;
  std::size_t count = 0;
  std::set<std::pair<int, int>> seen;
  for (const auto& f : m.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
      total += norm(m.vertices[static_cast<std::size_t>(a)] - m.vertices[static_cast<std::size_t>(b)]);
      ++count;
    }
  return count ? total / static_cast<double>(count) : 0.0;
}

namespace {

constexpr double kAngleQuantum = 1e-6;

std::string face_label(const std::vector<double>& len, const std::vector<double>& ang, double quantum) {
  const auto same = [&](double a, double b) { return std::abs(a - b) <= quantum; };
  const std::size_t k = len.size();
  if (k == 3) {
    const int eq = same(len[0], len[1]) + same(len[1], len[2]) + same(len[0], len[2]);
    if (eq == 3) return "equilateral_triangle";
    if (eq >= 1) return "isosceles_triangle";
    return "scalene_triangle";
  }
  if (k == 4) {
    const bool right = std::all_of(ang.begin(), ang.end(), [](double a) { return std::abs(a - kPi / 2) < 1e-6; });
    const bool equal = same(len[0], len[1]) && same(len[1], len[2]) && same(len[2], len[3]);
    if (right && equal) return "square";
    if (right) return "rectangle";
    if (equal) return "rhombus";
    return "quadrilateral";
  }
  return std::to_string(k) + "-gon";
}

FaceSignature canonical(const std::vector<long long>& seq) {
  const std::size_t n = seq.size();
  FaceSignature best;
  std::vector<long long> rev(seq.rbegin(), seq.rend());
  // rev starts with an edge; rotate by one so angles sit at even positions.
  std::rotate(rev.begin(), rev.begin() + 1, rev.end());
  for (const std::vector<long long>* s : std::initializer_list<const std::vector<long long>*>{&seq, &rev})
    for (std::size_t r = 0; r < n; r += 2) {
      FaceSignature cand(s->begin() + static_cast<std::ptrdiff_t>(r), s->end());
      cand.insert(cand.end(), s->begin(), s->begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || cand < best) best = std::move(cand);
    }
  return best;
}

}  // namespace

std::size_t FaceMultiset::total() const {
  std::size_t t = 0;
  for (const auto& [sig, c] : classes) t += c.count;
  return t;
}

std::map<std::string, std::size_t> FaceMultiset::by_label() const {
  std::map<std::string, std::size_t> out;
  for (const auto& [sig, c] : classes) out[c.label] += c.count;
  return out;
}

FaceMultiset face_multiset(const Mesh& m, double length_quantum) {
  if (length_quantum <= 0.0) length_quantum = 1e-6 * mean_edge_length(m);
  FaceMultiset ms;
  for (const auto& f : m.faces) {
    const std::size_t k = f.size();
    std::vector<double> len(k), ang(k);
    std::vector<long long> seq;
    for (std::size_t i = 0; i < k; ++i) {
      const Vec3& prev = m.vertices[static_cast<std::size_t>(f[(i + k - 1) % k])];
      const Vec3& cur = m.vertices[static_cast<std::size_t>(f[i])];
      const Vec3& next = m.vertices[static_cast<std::size_t>(f[(i + 1) % k])];
      const Vec3 u = prev - cur, w = next - cur;
      ang[i] = std::atan2(norm(cross(u, w)), dot(u, w));
      len[i] = norm(w);
      seq.push_back(std::llround(ang[i] / kAngleQuantum));
      seq.push_back(std::llround(len[i] / length_quantum));
    }
    auto& cls = ms.classes[canonical(seq)];
    if (cls.count == 0) cls.label = face_label(len, ang, 1e-6 * (*std::max_element(len.begin(), len.end())));
    ++cls.count;
  }
  return ms;
}

bool multiset_equal(const FaceMultiset& a, const FaceMultiset& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (auto ia = a.classes.begin(), ib = b.classes.begin(); ia != a.classes.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.count != ib->second.count) return false;
  return true;
}

bool possibly_congruent(const Mesh& a, const Mesh& b) {
  if (a.vertices.size() != b.vertices.size()) return false;
  const auto dists = [](const Mesh& m) {
    std::vector<double> d;
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < m.vertices.size(); ++j) d.push_back(norm(m.vertices[i] - m.vertices[j]));
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto da = dists(a), db = dists(b);
  const double tol = 1e-9 * std::max(da.empty() ? 1.0 : da.back(), 1e-300);
  for (std::size_t i = 0; i < da.size(); ++i)
    if (std::abs(da[i] - db[i]) > tol) return false;
  return true;
}

Mesh rigid_transform(const Mesh& m, const double r[3][3], Vec3 shift) {
  Mesh out = m;
  for (Vec3& v : out.vertices) {
    const Vec3 p = v;
    v = Vec3{r[0][0] * p.x + r[0][1] * p.y + r[0][2] * p.z, r[1][0] * p.x + r[1][1] * p.y + r[1][2] * p.z,
             r[2][0] * p.x + r[2][1] * p.y + r[2][2] * p.z} +
        shift;
  }
  return out;
}

Mesh build_cuboid(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw std::invalid_argument("cuboid sides must be positive");
  Mesh m;
  for (int i = 0; i < 8; ++i) m.vertices.push_back({(i & 1) ? a : 0.0, (i & 2) ? b : 0.0, (i & 4) ? c : 0.0});
  m.faces = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  orient_outward(m);
  return m;
}

Mesh build_cube(double a) { return build_cuboid(a, a, a); }

Mesh build_cube_with_pyramids(double a, double h, PyramidMode mode, bool enforce_convex) {
  if (!(a > 0.0) || !(h > 0.0)) throw std::invalid_argument("cube side and pyramid height must be positive");
  if (enforce_convex && !(h < a / 2.0)) throw std::invalid_argument("pyramid height must be below a/2 for convexity");
  Mesh cube = build_cube(a);
  // Face 1 is z = a; face 0 is z = 0 (opposite); face 5 is x = a (adjacent).
  const int second = mode == PyramidMode::Opposite ? 0 : 5;
  Mesh m;
  m.vertices = cube.vertices;
  const Vec3 centre{a / 2, a / 2, a / 2};
  for (int fi = 0; fi < 6; ++fi) {
    const auto& f = cube.faces[static_cast<std::size_t>(fi)];
    if (fi != 1 && fi != second) {
      m.faces.push_back(f);
      continue;
    }
    const Vec3 c = face_centroid(cube, f);
    const Vec3 out = c - centre;
    const Vec3 apex = c + (h / norm(out)) * out;
    const int ai = static_cast<int>(m.vertices.size());
    m.vertices.push_back(apex);
    for (std::size_t i = 0; i < f.size(); ++i) m.faces.push_back({f[i], f[(i + 1) % f.size()], ai});
  }
  orient_outward(m);
  return m;
}

Mesh hull_mesh(const std::vector<Vec3>& pts) {
  Mesh m;
  m.vertices = pts;
  double scale = 0.0;
  for (const Vec3& a : pts)
    for (const Vec3& b : pts) scale = std::max(scale, norm(a - b));
  const double tol = 1e-9 * scale;
  std::set<std::vector<int>> seen;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        const double len = norm(nrm);
        if (len <= tol * scale) continue;
        nrm = (1.0 / len) * nrm;
        int above = 0, below = 0;
        std::vector<int> on;
        for (std::size_t q = 0; q < n; ++q) {
          const double d = dot(nrm, pts[q] - pts[i]);
          if (d > tol)
            ++above;
          else if (d < -tol)
            ++below;
          else
            on.push_back(static_cast<int>(q));
        }
        if (above && below) continue;
        if (!seen.insert(on).second) continue;
        if (above) nrm = -1.0 * nrm;
        // Order the face counterclockwise about the outward normal.
        Vec3 c;
        for (int q : on) c = c + pts[static_cast<std::size_t>(q)];
        c = (1.0 / static_cast<double>(on.size())) * c;
        const Vec3 e1 = pts[static_cast<std::size_t>(on[0])] - c;
        const Vec3 e2 = cross(nrm, e1);
        std::sort(on.begin(), on.end(), [&](int p, int q) {
          const Vec3 dp = pts[static_cast<std::size_t>(p)] - c, dq = pts[static_cast<std::size_t>(q)] - c;
          return std::atan2(dot(dp, e2), dot(dp, e1)) < std::atan2(dot(dq, e2), dot(dq, e1));
        });
        m.faces.push_back(on);
      }
  return m;
}

namespace {

std::vector<Vec3> rhombicuboctahedron_points() {
  const double b = 1.0 + std::sqrt(2.0);
  std::vector<Vec3> pts;
  for (int axis = 0; axis < 3; ++axis)
    for (int s = 0; s < 8; ++s) {
      const double c[3] = {(s & 1) ? -1.0 : 1.0, (s & 2) ? -1.0 : 1.0, (s & 4) ? -b : b};
      // The long coordinate goes on `axis`.
      Vec3 p;
      double* slot[3] = {&p.x, &p.y, &p.z};
      *slot[axis] = c[2];
      *slot[(axis + 1) % 3] = c[0];
      *slot[(axis + 2) % 3] = c[1];
      pts.push_back(p);
    }
  return pts;
}

}  // namespace

Mesh build_rhombicuboctahedron() { return hull_mesh(rhombicuboctahedron_points()); }

Mesh build_pseudorhombicuboctahedron() {
  auto pts = rhombicuboctahedron_points();
  const double top = 1.0 + std::sqrt(2.0);
  const double c = std::cos(kPi / 4), s = std::sin(kPi / 4);
  for (Vec3& p : pts)
    if (std::abs(p.z - top) < 1e-12) p = {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
  return hull_mesh(pts);
}

Mesh build_icosagonal_dipyramid(double s, double l) {
  if (!(s > 0.0 && l > 0.0)) throw std::invalid_argument("edge lengths must be positive");
  const double r20 = s / (2.0 * std::sin(kPi / 20));
  if (!(l > r20)) throw std::invalid_argument("lateral edge must exceed the 20-gon circumradius " + std::to_string(r20));
  const double z = std::sqrt(l * l - r20 * r20);
  Mesh m;
  for (int k = 0; k < 20; ++k) m.vertices.push_back({r20 * std::cos(2 * kPi * k / 20), r20 * std::sin(2 * kPi * k / 20), 0.0});
  m.vertices.push_back({0, 0, z});
  m.vertices.push_back({0, 0, -z});
  for (int k = 0; k < 20; ++k) {
    m.faces.push_back({k, (k + 1) % 20, 20});
    m.faces.push_back({(k + 1) % 20, k, 21});
  }
  orient_outward(m);
  return m;
}

Mesh build_decagonal_dipyramidal_antiprism(double s, double l) {
  if (!(s > 0.0 && l > 0.0)) throw std::invalid_argument("edge lengths must be positive");
  const double r10 = s / (2.0 * std::sin(kPi / 10));
  const double chord = 2.0 * r10 * std::sin(kPi / 20);
  if (!(l > r10)) throw std::invalid_argument("lateral edge must exceed the decagon circumradius " + std::to_string(r10));
  const double g = std::sqrt(l * l - chord * chord);
  const double cap = std::sqrt(l * l - r10 * r10);
  Mesh m;
  for (int k = 0; k < 10; ++k) m.vertices.push_back({r10 * std::cos(2 * kPi * k / 10), r10 * std::sin(2 * kPi * k / 10), -g / 2});
  for (int k = 0; k < 10; ++k)
    m.vertices.push_back({r10 * std::cos(2 * kPi * k / 10 + kPi / 10), r10 * std::sin(2 * kPi * k / 10 + kPi / 10), g / 2});
  m.vertices.push_back({0, 0, g / 2 + cap});
  m.vertices.push_back({0, 0, -g / 2 - cap});
  for (int k = 0; k < 10; ++k) {
    const int l0 = k, l1 = (k + 1) % 10, u0 = 10 + k, u1 = 10 + (k + 1) % 10;
    m.faces.push_back({l0, l1, u0});
    m.faces.push_back({u0, l1, u1});
    m.faces.push_back({u0, u1, 20});
    m.faces.push_back({l1, l0, 21});
  }
  orient_outward(m);
  if (!is_convex(m)) throw std::invalid_argument("lateral edge too short: the capped antiprism is not convex");
  return m;
}

double min_feasible_leg(double s) {
  const auto ok = [s](double l) {
    try {
      return is_convex(build_icosagonal_dipyramid(s, l)) && is_convex(build_decagonal_dipyramidal_antiprism(s, l));
    } catch (const std::invalid_argument&) {
      return false;
    }
  };
  double lo = s, hi = 2.0 * s;
  while (!ok(hi)) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

CompareReport compare_report(const std::vector<std::pair<std::string, Mesh>>& meshes) {
  if (meshes.size() < 2) throw std::invalid_argument("comparison needs at least two meshes");
  double edge = 0.0;
  for (const auto& [name, m] : meshes) edge += mean_edge_length(m);
  const double quantum = 1e-6 * edge / static_cast<double>(meshes.size());

  CompareReport rep;
  std::vector<FaceMultiset> sets;
  for (const auto& [name, m] : meshes) {
    MeshSummary s;
    s.name = name;
    s.convex = is_convex(m);
    s.vertices = m.vertices.size();
    s.edges = m.edge_count();
    s.faces = m.faces.size();
    s.volume = volume(m);
    s.surface_area = surface_area(m);
    sets.push_back(face_multiset(m, quantum));
    s.face_labels = sets.back().by_label();
    rep.meshes.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < meshes.size(); ++i) {
    auto& s = rep.meshes[i];
    s.multiset_class = static_cast<int>(i);
    s.congruence_class = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (multiset_equal(sets[i], sets[j])) {
        s.multiset_class = rep.meshes[j].multiset_class;
        break;
      }
    for (std::size_t j = 0; j < i; ++j)
      if (possibly_congruent(meshes[i].second, meshes[j].second)) {
        s.congruence_class = rep.meshes[j].congruence_class;
        break;
      }
  }
  rep.all_multisets_equal = std::all_of(rep.meshes.begin(), rep.meshes.end(),
                                        [](const MeshSummary& s) { return s.multiset_class == 0; });
  double vmax = 0.0, vmin = INFINITY;
  for (const auto& s : rep.meshes) {
    vmax = std::max(vmax, std::abs(s.volume));
    vmin = std::min(vmin, std::abs(s.volume));
  }
  rep.volumes_equal = vmax - vmin <= 1e-9 * vmax;
  return rep;
}

std::string to_obj(const Mesh& m) {
  std::string out;
  char buf[128];
  for (const Vec3& v : m.vertices) {
    std::snprintf(buf, sizeof buf, "v %.12f %.12f %.12f\n", v.x, v.y, v.z);
    out += buf;
  }
  for (const auto& f : m.faces) {
    out += 'f';
    for (int i : f) out += ' ' + std::to_string(i + 1);
    out += '\n';
  }
  return out;
}

}  // namespace geomkit::poly
