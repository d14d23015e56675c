#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "kite/geom3.hpp"
#include "kite/torus_data.hpp"

using namespace kite;

namespace {

Vec2 v2(i64 a, i64 b) { return Vec2(gr(a, 0), gr(b, 0)); }

Polygon unit_square2() {
  return Polygon({v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)});
}

Polyhedron box(i64 x0, i64 y0, i64 z0, i64 x1, i64 y1, i64 z1) {
  std::vector<Vec3> v;
  for (i64 x : {x0, x1})
    for (i64 y : {y0, y1})
      for (i64 z : {z0, z1}) v.push_back(Vec3(gr(x, 0), gr(y, 0), gr(z, 0)));
  return Polyhedron(v);
}

// Independent oracle: every supporting plane through a vertex triple,
// described by its full incident vertex set.
std::set<std::set<int>> hull_oracle_faces(const std::vector<Vec3>& v) {
  std::set<std::set<int>> out;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec3 nr = cross(v[j] - v[i], v[k] - v[i]);
        if (nr.x.is_zero() && nr.y.is_zero() && nr.z.is_zero()) continue;
        QPhi c = dot(nr, v[i]);
        int lo = 0, hi = 0;
        std::set<int> inc;
        for (size_t m = 0; m < n; ++m) {
          int s = (dot(nr, v[m]) - c).sign();
          if (s > 0) ++hi;
          if (s < 0) ++lo;
          if (s == 0) inc.insert(int(m));
        }
        if (lo == 0 || hi == 0) out.insert(inc);
      }
  return out;
}

std::vector<Polyhedron> appendix_pieces() {
  std::vector<Polyhedron> out;
  for (const auto& rows : kPieceVertices) {
    std::vector<Vec3> verts;
    for (const auto& r : rows)
      verts.push_back(Vec3(gr(r[0], r[1]), gr(r[2], r[3]), gr(r[4], r[5])));
    out.push_back(Polyhedron(std::move(verts)));
  }
  return out;
}

}  // namespace

TEST_CASE("polygon membership on the square") {
  Polygon sq = unit_square2();
  CHECK(sq.membership(v2(1, 1)) == Where::Interior);
  CHECK(sq.membership(Vec2(gr(2, 0), gr(1, 0))) == Where::Boundary);
  CHECK(sq.membership(v2(3, 3)) == Where::Outside);
  CHECK(sq.positively_convex());
  CHECK(sq.area2() == QPhi::integer(8));
}

TEST_CASE("interior point combinator stays golden and interior") {
  Polygon tri({v2(0, 0), v2(1, 0), v2(0, 1)});
  Vec2 p = tri.interior_point();
  CHECK(tri.membership(p) == Where::Interior);
  // segment case: phi^-1*(0,0) + phi^-2*(1,0) = (2-phi, 0)
  CHECK(golden_blend(QPhi(gr(0, 0)), QPhi(gr(1, 0))) == QPhi(gr(2, -1)));
}

TEST_CASE("cube and tetrahedron face lattices") {
  Polyhedron cube = box(0, 0, 0, 2, 2, 2);
  CHECK(cube.faces.size() == 6);
  CHECK(cube.edges.size() == 12);
  CHECK(cube.volume6() == QPhi::integer(48));
  CHECK(cube.membership(Vec3(gr(1, 0), gr(1, 0), gr(1, 0))) == Where::Interior);
  CHECK(cube.membership(Vec3(gr(0, 0), gr(1, 0), gr(1, 0))) == Where::Boundary);
  CHECK(cube.membership(Vec3(gr(3, 0), gr(0, 0), gr(0, 0))) == Where::Outside);

  Polyhedron tet({Vec3(gr(0, 0), gr(0, 0), gr(0, 0)), Vec3(gr(2, 0), gr(0, 0), gr(0, 0)),
                  Vec3(gr(0, 0), gr(2, 0), gr(0, 0)), Vec3(gr(0, 0), gr(0, 0), gr(2, 0))});
  CHECK(tet.faces.size() == 4);
  CHECK(tet.edges.size() == 6);
  // witness for the apex dominates in the third coordinate
  Vec3 w = tet.strict_convexity_witness(3);
  CHECK(dot(w, tet.v[3]) > dot(w, tet.v[0]));

  CHECK_THROWS_AS(Polyhedron({Vec3(gr(0, 0), gr(0, 0), gr(0, 0)),
                              Vec3(gr(2, 0), gr(0, 0), gr(0, 0)),
                              Vec3(gr(2, 0), gr(2, 0), gr(0, 0)),
                              Vec3(gr(0, 0), gr(2, 0), gr(0, 0))}),
                  DegenerateInput);
}

TEST_CASE("slicing") {
  Polyhedron prism = box(0, 0, 0, 2, 2, 2);
  Polygon s = prism.slice_at_height(QPhi(gr(1, 0)));
  CHECK(s.area2() == QPhi::integer(8));
  CHECK(s.positively_convex());
  CHECK_THROWS_AS(prism.slice_at_height(QPhi(gr(0, 0))), VertexOnPlane);
  for (const auto& p : s.v)
    CHECK(prism.membership(Vec3(p.x, p.y, QPhi(gr(1, 0)))) == Where::Boundary);
}

TEST_CASE("appendix piece P4 face lattice") {
  auto pieces = appendix_pieces();
  CHECK(pieces[4].v.size() == 5);
  CHECK(pieces[4].faces.size() == 5);
  CHECK(pieces[4].edges.size() == 8);
}

TEST_CASE("face lattices of all 43 printed pieces match the hull oracle") {
  auto pieces = appendix_pieces();
  for (size_t k = 0; k < pieces.size(); ++k) {
    CAPTURE(k);
    auto oracle = hull_oracle_faces(pieces[k].v);
    CHECK(oracle.size() == pieces[k].faces.size());
    for (const auto& f : pieces[k].faces) {
      std::set<int> cyc(f.cycle.begin(), f.cycle.end());
      CHECK(oracle.count(cyc) == 1);
    }
    CHECK(pieces[k].fibered());
    CHECK(pieces[k].strictly_convex());
    CHECK(pieces[k].membership(pieces[k].interior_point()) == Where::Interior);
  }
}

TEST_CASE("slices are convex with boundary vertices") {
  auto pieces = appendix_pieces();
  for (size_t k = 0; k < pieces.size(); ++k) {
    CAPTURE(k);
    QPhi lo = pieces[k].zmin(), hi = pieces[k].zmax();
    if (!(lo < hi)) continue;
    QPhi h = golden_blend(lo, hi);
    bool on_vertex = false;
    for (const auto& p : pieces[k].v) on_vertex |= p.z == h;
    if (on_vertex) continue;
    Polygon s = pieces[k].slice_at_height(h);
    CHECK(s.positively_convex());
    for (const auto& p : s.v)
      CHECK(pieces[k].membership(Vec3(p.x, p.y, h)) == Where::Boundary);
  }
}

TEST_CASE("2d covering: rectangle split into two squares") {
  Polygon rect({v2(0, 0), v2(2, 0), v2(2, 4), v2(0, 4)});
  Polygon s1({v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)});
  Polygon s2({v2(0, 2), v2(2, 2), v2(2, 4), v2(0, 4)});
  CHECK(s1.disjoint_interior(s2));
  auto rep = verify_covering_2d(rect, {s1, s2}, "test");
  CHECK(rep.covered);
  // removing a part must fail with a witness
  auto bad = verify_covering_2d(rect, {s1}, "test");
  CHECK_FALSE(bad.covered);
  CHECK_FALSE(bad.failures.empty());
}

TEST_CASE("2d covering detects interior gaps via the matching property") {
  // four unit squares minus the one at the origin corner
  Polygon big({v2(0, 0), v2(4, 0), v2(4, 4), v2(0, 4)});
  std::vector<Polygon> parts;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      parts.push_back(Polygon({v2(2 * i, 2 * j), v2(2 * i + 2, 2 * j),
                               v2(2 * i + 2, 2 * j + 2), v2(2 * i, 2 * j + 2)}));
    }
  auto rep = verify_covering_2d(big, parts, "test");
  CHECK_FALSE(rep.covered);
}

TEST_CASE("3d partition: cube into two slabs") {
  Polyhedron cube = box(0, 0, 0, 2, 2, 2);
  Polyhedron a = box(0, 0, 0, 2, 2, 1);
  Polyhedron b = box(0, 0, 1, 2, 2, 2);
  CHECK(a.disjoint_interior(b));
  auto rep = verify_partition_3d(cube, {&a, &b}, "witness");
  CHECK(rep.ok);
  CHECK(a.volume6() + b.volume6() == cube.volume6());
  // duplicating a slab must fail
  auto bad = verify_partition_3d(cube, {&a, &a, &b}, "witness");
  CHECK_FALSE(bad.ok);
}

TEST_CASE("clipping keeps exact volume additivity") {
  auto pieces = appendix_pieces();
  std::mt19937_64 rng(11);
  for (int k : {0, 8, 23, 32, 41}) {
    const Polyhedron& P = pieces[k];
    QPhi h = golden_blend(P.zmin(), P.zmax());
    Vec3 n(gr(0, 0), gr(0, 0), gr(1, 0));
    auto lo = P.clip_halfspace(n, h);
    auto hi = P.clip_halfspace(Vec3(gr(0, 0), gr(0, 0), gr(-1, 0)), QPhi() - h);
    REQUIRE(lo);
    REQUIRE(hi);
    CHECK(lo->volume6() + hi->volume6() == P.volume6());
    CHECK(lo->fibered());
  }
}
