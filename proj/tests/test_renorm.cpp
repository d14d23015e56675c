#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kite/renorm.hpp"

using namespace kite;
using namespace kite::renorm;

TEST_CASE("branch data loads") {
  const auto& B = B_branches();
  CHECK(B.size() == 24);
  for (const auto& b : B) {
    CHECK(b.poly.strictly_convex());
    CHECK(b.poly.fibered());
    // branch sits inside its layer slab
    CHECK(!(b.poly.zmin() < QPhi(b.zlo)));
    CHECK(!(QPhi(b.zhi) < b.poly.zmax()));
  }
  const auto& A = A_branches();
  CHECK(A.size() == 72);
  for (const auto& a : A) {
    CHECK(a.poly.strictly_convex());
    // height intervals I_ij nest inside I_i
    CHECK(a.zlo < a.zhi);
  }
  // R-hat on the I2 layer is translation by (0,0,2/phi): doubled (0,0,4phi-4)
  for (const auto& a : A) {
    if (a.i == 2) {
      CHECK(a.rhat.r == kOne);
      CHECK(a.rhat.w[2] == gr(-4, 4));
    }
    if (a.i == 4) {
      CHECK(a.rhat.r == kOne);
      CHECK(a.rhat.w[2] == gr(4, -4));
    }
    if (a.i % 2 == 1) CHECK(a.rhat.r == kPhiCube);
  }
}

TEST_CASE("rhat maps A branches onto B branches") {
  const auto& A = A_branches();
  const auto& B = B_branches();
  for (const auto& a : A) {
    const Branch& target = B[(a.j - 1) * 4 + (a.index - 1)];
    Polyhedron img = a.rhat.apply(a.poly);
    CHECK(img.same_set(target.poly));
  }
}

TEST_CASE("homothety fixed point (1,1,1) for the R_111 layers") {
  // the point (1,1,1) (doubled (2,2,2)) is fixed by the i=3 general map
  const auto& A = A_branches();
  for (const auto& a : A) {
    if (a.i == 3 && a.j == 2) {
      torus::GPoint f{gr(2, 0), gr(2, 0), gr(2, 0)};
      torus::GPoint img = a.rhat(f);
      CHECK(img == f);
    }
  }
}

TEST_CASE("single atom cell construction") {
  // take an interior golden point of a B branch and build its atom
  const auto& B = B_branches();
  Vec3 ip = B[0].poly.interior_point();
  torus::GPoint p{ip.x.golden(), ip.y.golden(), ip.z.golden()};
  auto atom = return_cell(p, 1);
  REQUIRE(atom);
  CHECK(atom->branch == 0);
  CHECK(atom->poly.membership(ip) == Where::Interior);
  CHECK(atom->chain_length >= 1);
  CHECK(atom->chain_length <= 109);
  // the first-return point matches the offset bookkeeping
  auto [ret, n] = first_return(p, 1, +1);
  CHECK(n == atom->chain_length);
  torus::GPoint shifted = p + atom->offsets.back();
  CHECK(ret == shifted);
  // interior points of the atom share the chain length
  Vec3 ip2 = atom->poly.interior_point();
  torus::GPoint p2{ip2.x.golden(), ip2.y.golden(), ip2.z.golden()};
  auto [ret2, n2] = first_return(p2, 1, +1);
  CHECK(n2 == n);
}
