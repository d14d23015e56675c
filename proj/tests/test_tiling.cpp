#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kite/circle.hpp"
#include "kite/tiling.hpp"

using namespace kite;
using namespace kite::tiling;

namespace {
QPhi q(i64 a, i64 b) { return QPhi(GoldenReal(a, b)); }
}

TEST_CASE("fundamental tiles are sane") {
  Polygon T = T_plus();
  CHECK(T.strictly_convex());
  Polygon k0 = K0(), j0 = J0();
  CHECK(k0.positively_convex());
  CHECK(j0.positively_convex());
  CHECK(j0.size() == 8);
  // the three anchor vertices of the construction are among J0's vertices
  for (auto [a, b, c, d] : {std::array<i64, 4>{13, -8, 4, -2},
                            std::array<i64, 4>{5, -3, 6, -3},
                            std::array<i64, 4>{-3, 2, -2, 2}}) {
    bool found = false;
    for (const auto& p : j0.v) found |= p == Vec2(q(a, b), q(c, d));
    CHECK(found);
  }
  // K0 and J0 sit inside T with disjoint interiors
  for (const auto& p : k0.v) CHECK(T.membership(p) != Where::Outside);
  for (const auto& p : j0.v) CHECK(T.membership(p) != Where::Outside);
  CHECK(k0.disjoint_interior(j0));
}

TEST_CASE("the five sub-triangles tile T with K0 and J0") {
  Polygon T = T_plus();
  Polygon k0 = K0(), j0 = J0();
  auto inst = instances(1);
  REQUIRE(inst.size() == 5);
  QPhi total = k0.area2() + j0.area2();
  for (const auto& [g, tri] : inst) {
    CHECK(tri.strictly_convex());
    for (const auto& p : tri.v) CHECK(T.membership(p) != Where::Outside);
    CHECK(tri.disjoint_interior(k0));
    CHECK(tri.disjoint_interior(j0));
    total += tri.area2();
  }
  // exact area identity with the T11/T12 overlap subtracted once
  auto ov = inst[0].second.intersect(inst[1].second);
  REQUIRE(ov);
  CHECK(T.area2() == total - ov->area2());
  // the non-overlapping pairs really are disjoint
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = i + 1; j < 5; ++j) {
      if (i == 0 && j == 1) continue;
      CHECK(inst[i].second.disjoint_interior(inst[j].second));
    }
}

TEST_CASE("tile counts and dedup") {
  auto t0 = build_tiling(0);
  CHECK(t0.size() == 2);
  auto t1 = build_tiling(1);
  // five children contribute 5 kites but only 4 distinct octagons
  int kites = 0, octs = 0;
  for (const auto& t : t1)
    if (t.depth == 1) (t.kind == Tile::Kite ? kites : octs)++;
  CHECK(kites == 5);
  CHECK(octs == 4);
  // every deeper tile is an image of a shallower one under some sub map
  auto t2 = build_tiling(2);
  CHECK(t2.size() > t1.size());
  // exact side-ratio check: depth-d kite edges are phi^-3d times K's
  Polygon k0 = K0();
  QPhi r6 = q(13, -8);  // phi^-6
  for (const auto& t : t2) {
    if (t.kind != Tile::Kite || t.depth != 1) continue;
    CHECK(t.poly.area2() == r6 * k0.area2());
  }
}

TEST_CASE("ten maps: domains, heights, factors") {
  for (const auto& m : ten_maps()) {
    // similarity factor: phi^3 for the eight, 1 for R41
    QPhi s = m.map.sy;
    if (m.ij == 4) {
      CHECK(s == QPhi(kOne));
      CHECK_FALSE(m.map.orientation_reversing());
    } else {
      CHECK(s == QPhi(kPhiCube));
      CHECK(m.map.orientation_reversing());
    }
    // height action matches R_i on sampled heights in the domain
    Vec2 p = m.domain.interior_point();
    Vec2 img = m.map(p);
    QPhi want;
    switch (m.height_interval) {
      case 1: want = QPhi(kPhiCube) * p.y; break;
      case 3: want = QPhi(kPhiCube) * p.y - QPhi(kPhiCube) + QPhi(kOne); break;
      case 4: want = p.y - QPhi(kPhi) + QPhi(kPhiInv2); break;
    }
    CHECK(img.y == want);
  }
}

TEST_CASE("R41+ carries T41+ to T12+ and preserves distances") {
  const auto& maps = ten_maps();
  const TenMap* r41 = nullptr;
  for (const auto& m : maps)
    if (m.ij == 4 && m.sigma == +1) r41 = &m;
  REQUIRE(r41);
  Polygon t12 = instances(1)[1].second;
  Polygon img = r41->map(r41->domain);
  CHECK(img.canonical() == t12.canonical());
  Vec2 a = r41->domain[0], b = r41->domain[1];
  Vec2 ia = r41->map(a), ib = r41->map(b);
  CHECK(dot(a - b, a - b) == dot(ia - ib, ia - ib));
}

TEST_CASE("R31+ maps T31+ onto T-") {
  const auto& maps = ten_maps();
  for (const auto& m : maps) {
    if (m.ij == 2 && m.sigma == +1) {
      Polygon img = m.map(m.domain);
      CHECK(img.canonical() == T_minus().canonical());
    }
    if (m.ij == 0 && m.sigma == +1) {
      Polygon img = m.map(m.domain);
      CHECK(img.canonical() == T_plus().canonical());
    }
  }
}

TEST_CASE("diameter identity 4 phi^3 + 1 = phi^6") {
  CHECK(GoldenReal(4, 0) * kPhiCube + kOne == phi_pow(6));
}

TEST_CASE("gasket intervals") {
  // depth 0: a single interval
  auto l0 = gasket_intervals(q(1, 0), 0);
  CHECK(l0.size() == 1);
  // height 1 has renormalization digit 3 forever; interval count doubles
  auto l1 = gasket_intervals(q(1, 0), 1);
  auto l2 = gasket_intervals(q(1, 0), 2);
  auto l3 = gasket_intervals(q(1, 0), 3);
  CHECK(l1.size() == 2 * l0.size());
  CHECK(l2.size() == 2 * l1.size());
  CHECK(l3.size() == 2 * l2.size());
  // top vertex height: degenerate single point at n=0
  auto top = gasket_intervals(q(0, 1), 0);
  REQUIRE(top.size() == 1);
  CHECK(top[0].first == top[0].second);
  // all intervals at level n sit inside the level n-1 intervals
  for (auto& [a, b] : l2) {
    bool inside = false;
    for (auto& [c, d] : l1) inside |= !(a < c) && !(d < b);
    CHECK(inside);
  }
}

TEST_CASE("gasket endpoints project into the Cantor approximations") {
  // pi_2 of the tile skeleton lands in C: spot-check that gasket slices
  // at golden heights in C stay nonempty to depth 4
  QPhi y(gr(-3, 2));  // phi^-3, in C#
  for (int n = 0; n <= 4; ++n) CHECK(!gasket_intervals(y, n).empty());
  // and at a height not in C the slice eventually dies
  QPhi bad(gr(-1, 1));  // -1+phi, not in C
  bool died = false;
  for (int n = 0; n <= 8 && !died; ++n) died = gasket_intervals(bad, n).empty();
  CHECK(died);
}

TEST_CASE("upsilon renormalization sets") {
  Vec2 p = instances(1)[2].second.interior_point();  // inside T31+
  auto u0 = upsilon(p, 0);
  CHECK(u0.size() == 1);
  auto u2 = upsilon(p, 2);
  CHECK(u2.size() > 1);
  for (const auto& v : u2) CHECK(v.y == p.y);
}

TEST_CASE("upsilon at I3 heights meets both T+ and T-") {
  // pick a generic golden height in I3 and a point of T31+ at that height
  Polygon t31 = instances(1)[2].second;
  Vec2 p = t31.interior_point();
  auto u = upsilon(p, 6);
  bool in_plus = false, in_minus = false;
  Polygon tp = T_plus(), tm = T_minus();
  for (const auto& v : u) {
    if (tp.membership(v) == Where::Interior) in_plus = true;
    if (tm.membership(v) == Where::Interior) in_minus = true;
  }
  CHECK(in_plus);
  CHECK(in_minus);
}
