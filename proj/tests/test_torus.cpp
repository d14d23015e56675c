#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "kite/torus.hpp"

using namespace kite;
using namespace kite::torus;

TEST_CASE("system loads and validates") {
  const auto& sys = ExchangeSystem::instance();
  CHECK(sys.piece(4).v.size() == 5);
  auto v = sys.validate();
  CAPTURE(v.detail);
  CHECK(v.convex);
  CHECK(v.fibered);
  CHECK(v.involution);
  // involution images match the listed pieces vertexwise
  CHECK(sys.piece(43).v.size() == sys.piece(22).v.size());
}

TEST_CASE("translation vectors") {
  const auto& sys = ExchangeSystem::instance();
  // j=41 has pair (-1,1) giving (12-8phi, -2+2phi, 0); doubled here
  CHECK(sys.lookup(41) == std::pair<i64, i64>(-1, 1));
  CHECK(sys.translation(41)[0] == gr(24, -16));
  CHECK(sys.translation(41)[1] == gr(-4, 4));
  CHECK(sys.translation(41)[2] == gr(0, 0));
  for (int j = 0; j <= 21; ++j) {
    CHECK(sys.translation(j)[0].is_zero());
    CHECK(sys.translation(j)[1].is_zero());
  }
  // j=22 pair (1,0): (-2+2phi, 0, 0)
  CHECK(sys.translation(22)[0] == gr(-4, 4));
  CHECK(sys.translation(22)[1].is_zero());
  // third coordinate always zero: heights preserved
  for (int j = 0; j < 64; ++j) CHECK(sys.translation(j)[2].is_zero());
}

TEST_CASE("all 64 lifts sit inside the fundamental domain") {
  const auto& sys = ExchangeSystem::instance();
  Polyhedron X = sys.fundamental_domain();
  CHECK(X.volume6() == QPhi::integer(64 * 6));
  for (int j = 0; j < 64; ++j) {
    for (const auto& p : sys.piece(j).v) {
      CAPTURE(j);
      CHECK(X.membership(p) != Where::Outside);
    }
  }
}

TEST_CASE("theta embedding") {
  // Theta(0,1) = (1,0,1), doubled (2,0,2)
  GPoint t = ExchangeSystem::theta(gr(0, 0), gr(1, 0));
  CHECK(t[0] == gr(2, 0));
  CHECK(t[1] == gr(0, 0));
  CHECK(t[2] == gr(2, 0));
  // Theta(0,0) = (1, 1/2, 0), doubled (2,1,0)
  GPoint t0 = ExchangeSystem::theta(gr(0, 0), gr(0, 0));
  CHECK(t0[0] == gr(2, 0));
  CHECK(t0[1] == gr(1, 0));
  CHECK(t0[2] == gr(0, 0));
  // injectivity on samples: y restricted to the strip representative (-2,2]
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<i64> d(-40, 40);
  auto strip_y = [](GoldenReal y) {
    const GoldenReal four(4, 0);
    while (y.sign() <= 0 || (y + kTwo).sign() <= 0) y += four;
    while ((y - kTwo).sign() > 0) y -= four;
    return y;
  };
  std::map<std::array<i64, 6>, std::array<i64, 4>> inv;
  for (int i = 0; i < 10000; ++i) {
    GoldenReal x(d(rng), d(rng));
    GoldenReal y = strip_y(GoldenReal(d(rng), d(rng)));
    GPoint p = ExchangeSystem::theta(x, y);
    std::array<i64, 6> key{p[0].a, p[0].b, p[1].a, p[1].b, p[2].a, p[2].b};
    std::array<i64, 4> src{x.a, x.b, y.a, y.b};
    auto [it, fresh] = inv.insert({key, src});
    if (!fresh) CHECK(it->second == src);
  }
}

TEST_CASE("stepping") {
  const auto& sys = ExchangeSystem::instance();
  // interior points of inactive pieces are fixed
  for (int j = 0; j <= 21; ++j) {
    Vec3 ip = sys.piece(j).interior_point();
    GPoint p = sys.reduce(gp(ip.x.golden(), ip.y.golden(), ip.z.golden()));
    auto [q, piece] = sys.step(p);
    CHECK(piece == j);
    CHECK(q == p);
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> d(-30, 30);
  int done = 0;
  for (int i = 0; i < 500 && done < 200; ++i) {
    GoldenReal x(d(rng), d(rng)), y(d(rng), d(rng)), z(d(rng), d(rng));
    GPoint p = sys.reduce(gp(x, y, z));
    try {
      auto [q, j] = sys.step(p);
      CHECK(q[2] == p[2]);  // heights preserved
      auto [back, j2] = sys.step_back(q);
      CHECK(back == p);
      ++done;
    } catch (const OnBoundary&) {
    }
  }
  CHECK(done >= 100);
}

TEST_CASE("the 64 pieces partition the fundamental domain") {
  const auto& sys = ExchangeSystem::instance();
  Polyhedron X = sys.fundamental_domain();
  QPhi total;
  std::vector<const Polyhedron*> parts;
  for (int j = 0; j < 64; ++j) {
    parts.push_back(&sys.piece(j));
    total += sys.piece(j).volume6();
  }
  CHECK(total == X.volume6());  // doubled frame: volume 64, i.e. 8 x 2^3
  auto rep = verify_partition_3d(X, parts, "witness-vectors");
  CAPTURE(rep.failure);
  CHECK(rep.ok);
  CHECK(rep.slices > 5);
}

TEST_CASE("pairwise disjointness witnesses exist for overlapping boxes") {
  const auto& sys = ExchangeSystem::instance();
  int checked = 0;
  for (int a = 0; a < 64; ++a)
    for (int b = a + 1; b < 64; ++b) {
      Vec3 alo, ahi, blo, bhi;
      sys.piece(a).bounding_box(alo, ahi);
      sys.piece(b).bounding_box(blo, bhi);
      if (ahi.x <= blo.x || bhi.x <= alo.x || ahi.y <= blo.y || bhi.y <= alo.y ||
          ahi.z <= blo.z || bhi.z <= alo.z)
        continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(sys.piece(a).disjoint_interior(sys.piece(b)));
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("computed transitions equal the printed table") {
  const auto& sys = ExchangeSystem::instance();
  auto rel = sys.computed_transitions();
  int active_edges = 0;
  for (auto [a, b] : rel) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(sys.table_allows(a, b));
    if (a >= 22) ++active_edges;
  }
  // and conversely the table has no unused rows
  std::set<std::pair<int, int>> seen(rel.begin(), rel.end());
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b)
      if (sys.table_allows(a, b)) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(seen.count({a, b}) == 1);
      }
  auto cert = sys.absorption_certificate();
  REQUIRE(cert.has_value());
  CHECK(cert->size() == 21 - 5);
}

TEST_CASE("involution conjugates the step map") {
  const auto& sys = ExchangeSystem::instance();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> d(-30, 30);
  int done = 0;
  for (int i = 0; i < 500 && done < 100; ++i) {
    GPoint p = sys.reduce(gp(GoldenReal(d(rng), d(rng)), GoldenReal(d(rng), d(rng)),
                             GoldenReal(d(rng), d(rng))));
    try {
      auto [q, j] = sys.step(p);
      auto [qi, ji] = sys.step(sys.involute(p));
      CHECK(sys.involute(q) == qi);
      if (j >= 22) CHECK(ji == (j <= 42 ? j + 21 : j - 21));
      ++done;
    } catch (const OnBoundary&) {
    }
  }
  CHECK(done >= 50);
}
