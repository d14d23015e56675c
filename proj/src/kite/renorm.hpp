#pragma once

#include <optional>

#include "report.hpp"
#include "torus.hpp"

// The renormalization apparatus: the sets A-hat (18 layers) and B-hat
// (6 layers) with four branches each, the piecewise golden affine map
// R-hat, atom generation by probing plus exact cell construction, chains,
// and the certificates of the Renormalization Theorem and the reduction
// theorems.

namespace kite {
namespace renorm {

using torus::GPoint;

struct NotInA : std::runtime_error {
  NotInA() : std::runtime_error("point not inside any A-hat branch") {}
};
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("first-return budget exceeded") {}
};

// A golden affine map V -> r V + W; r in {1, phi^-3, phi^3}.
struct AffineCode {
  GoldenReal r;
  GPoint w;  // doubled
  GPoint operator()(const GPoint& p) const {
    return {r * p[0] + w[0], r * p[1] + w[1], r * p[2] + w[2]};
  }
  AffineCode inverse() const;
  Vec3 apply(const Vec3& p) const;
  Polyhedron apply(const Polyhedron& P) const;
};

struct Branch {
  int which;        // 0 = A-hat, 1 = B-hat
  int layer;        // B: 1..6; A: index into the 18 layer list
  int index;        // branch 1..4
  int i = 0, j = 0; // A only: the (i,j) of I_i n R^-1(J'_j)
  bool type2 = false;  // R-hat dilates on this branch's layer
  AffineCode rhat;     // A only: the forward map onto the B branch
  Polyhedron poly;     // doubled coordinates
  GoldenReal zlo, zhi; // doubled layer interval
};

const std::vector<Branch>& B_branches();  // 24
const std::vector<Branch>& A_branches();  // 72

// interior membership among the branches of one family
int locate_branch(const std::vector<Branch>& family, const GPoint& p);

struct Atom {
  int branch;            // index into the family's branch list
  int chain_length;      // first-return step count
  Polyhedron poly;       // doubled
  std::vector<int> itinerary;   // pieces visited (length chain_length)
  std::vector<GPoint> offsets;  // cumulative displacement after k+1 steps
};

// All forward atoms of the family (0 = A-hat, 1 = B-hat), generated by
// probing and certified by the per-branch partition test.
const std::vector<Atom>& atoms(int which);

// Forward return-to-target cell at p (doubled, generic interior point).
std::optional<Atom> return_cell(const GPoint& p, int which, int budget = 1000);

// First return of the exchange map to the A- or B-set.
std::pair<GPoint, int> first_return(const GPoint& p, int which, int dir = +1,
                                    int budget = 1000);

// R-hat at a point of A-hat (locates the branch).
GPoint rhat(const GPoint& p);

VerificationReport verify_counts();
VerificationReport verify_statement1();   // conjugacy atom-by-atom
VerificationReport verify_statement2();   // height action = R
VerificationReport verify_statement3();   // Theta(Sigma) invariance
VerificationReport verify_statement5();   // strict chain shortening
VerificationReport verify_statement4B();  // 30 regions, slicing
VerificationReport verify_statement4A();  // 27 regions, slicing
VerificationReport verify_statement6();   // B-avoiding orbits avoid A

VerificationReport verify_fundamental_orbit();
VerificationReport verify_fixed_point();
VerificationReport verify_near_reduction();
VerificationReport verify_far_reduction();

// B-hat periodic tiles (orbits avoiding B-hat), per layer; cached.
struct PeriodicTile {
  int piece;   // home piece of the representative
  int layer;   // slab index 1..6
  int period;
  Polyhedron poly;
};
const std::vector<PeriodicTile>& B_periodic_tiles();

}  // namespace renorm
}  // namespace kite
