#pragma once

#include <optional>
#include <vector>

#include "geom2.hpp"

namespace kite {

struct Vec3 {
  QPhi x, y, z;
  Vec3() = default;
  Vec3(QPhi a, QPhi b, QPhi c) : x(std::move(a)), y(std::move(b)), z(std::move(c)) {}
  Vec3(GoldenReal a, GoldenReal b, GoldenReal c) : x(a), y(b), z(c) {}

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(const QPhi& s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
  bool lex_less(const Vec3& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

inline QPhi dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& m) : std::runtime_error(m) {}
};
struct VertexOnPlane : std::runtime_error {
  VertexOnPlane() : std::runtime_error("slice plane hits a vertex") {}
};
struct NotFibered : std::runtime_error {
  NotFibered() : std::runtime_error("edge/plane intersection leaves Z[phi]") {}
};
struct NoWitnessFound : std::runtime_error {
  NoWitnessFound() : std::runtime_error("no strict-convexity witness") {}
};

struct Face {
  std::vector<int> cycle;  // vertex indices in cyclic order, outward normal
  Vec3 normal;             // outward
  QPhi offset;             // dot(normal, v) = offset for v on the face
};

// A strictly convex golden polyhedron together with its derived face
// lattice (faces with outward normals, edges in two faces).
struct Polyhedron {
  std::vector<Vec3> v;
  std::vector<Face> faces;
  std::vector<std::pair<int, int>> edges;

  Polyhedron() = default;
  explicit Polyhedron(std::vector<Vec3> verts) : v(std::move(verts)) {
    build_faces();
  }

  void build_faces();  // raw face enumeration + polishing, per the paper
  // Rebuild from a vertex set whose faces lie on the listed planes.
  static Polyhedron from_planes(std::vector<Vec3> verts,
                                const std::vector<std::pair<Vec3, QPhi>>& planes);
  Where membership(const Vec3& p) const;
  Vec3 interior_point() const;
  // Witness W with v[i].W > v'.W for all other vertices; throws if the
  // constructed witness fails (non-strict vertex).
  Vec3 strict_convexity_witness(int i) const;
  bool strictly_convex() const;
  // Non-horizontal edges must satisfy the fibered-edge condition: the four
  // ratio quantities lie in Z[phi].
  bool fibered(std::string* why = nullptr) const;
  Polygon slice_at_height(const QPhi& h) const;
  std::optional<Polyhedron> clip_halfspace(const Vec3& n, const QPhi& c) const;
  Polyhedron translated(const Vec3& t) const;
  QPhi volume6() const;  // six times the volume
  QPhi zmin() const;
  QPhi zmax() const;
  void bounding_box(Vec3& lo, Vec3& hi) const;
  Polyhedron canonical() const;  // vertices sorted, faces rebuilt
  bool same_set(const Polyhedron& o) const;

  bool disjoint_interior(const Polyhedron& o) const;
  // Disjoint Interiors I: witness W with max over P of W.v < min over o.
  std::optional<Vec3> separation_witness(const Polyhedron& o) const;
};

struct PartitionReport {
  bool ok = false;
  std::string failure;
  QPhi failure_height;
  std::vector<CoverFailure> failures;
  size_t slices = 0;
};

// The slicing method: sample one golden height inside every gap between
// consecutive vertex heights and run the 2-D covering test there.
// Disjointness of the parts is the caller's certificate.
PartitionReport verify_partition_3d(const Polyhedron& Q,
                                    const std::vector<const Polyhedron*>& parts,
                                    const std::string& mechanism,
                                    bool check_volume = true);

}  // namespace kite
