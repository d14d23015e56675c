#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golden.hpp"

// The degree-3 circle covering R on T = R/2Z, the descent computations,
// the diagonal dynamical system, and the Cantor set machinery.

namespace kite {
namespace circle {

struct StepBudgetExceeded : std::runtime_error {
  StepBudgetExceeded() : std::runtime_error("descent step budget exceeded") {}
};

// Reduce a golden value mod 2 into [0, 2).
GoldenReal reduce_mod2(GoldenReal y);

// Interval endpoints 0 < phi^-2 < 2 phi^-2 < 2-2 phi^-2 < 2-phi^-2 < 2.
extern const GoldenReal kEndpoints[6];

// Index (1..5) of the interval containing y; `boundary` is set when y is a
// shared endpoint, in which case `second` carries the other index.
struct IntervalHit {
  int index = 0;
  bool boundary = false;
  int second = 0;
};
IntervalHit interval_of(GoldenReal y);

// The branch formula on I_k applied to y (no mod-2 reduction).
GoldenReal branch(int k, GoldenReal y);

// R(y), reduced into [0,2).  At a shared endpoint both branch values are
// computed and their agreement asserted.
GoldenReal apply_R(GoldenReal y);

// rho = R on I1,I3,I5 and R^2 on I2,I4; the maps f[m,n]: x -> phi^3 x + m + n phi.
extern const i64 kRhoTable[5][2];
GoldenReal apply_rho(GoldenReal y);

enum class Cycle { Zero, One, PhiPair, Quad };

struct Descent {
  Cycle cycle;
  int steps;
};

// Iterate R from y until one of the 8 terminal values is reached.
Descent descend_to_cycle(GoldenReal y);

// Digits over {1..5}; unique=false iff some iterate hits an endpoint.
struct RenormSeq {
  std::vector<int> digits;
  bool unique = true;
};
RenormSeq renorm_sequence(GoldenReal y, int n);

enum class CantorClass { InCSharp, InCMinusCSharp, NotInC };
// Exact decision for golden inputs.
CantorClass cantor_membership(GoldenReal y);

struct G2Result {
  enum { Equivalent, NotEquivalent, Undecided } status;
  int n1 = 0, n2 = 0;
};
G2Result g2_equivalent(GoldenReal y1, GoldenReal y2, int budget);

// ---- the diagonal dynamical system of the second descent lemma ----

struct Diagonal {
  GoldenReal delta;  // y2 - y1 >= 0
  GoldenReal lo, hi; // y1 range (lo < hi unless degenerate)
};

struct DescentIIReport {
  bool ok = false;
  int seeds = 0;
  int max_generations = 0;
  std::string failure;
  // the delta(4,-2) sub-analysis
  int split_count = 0;       // small diagonals the seed splits into
  int terminal_children = 0; // children mapping straight into terminals
  bool self_return = false;  // delta'(4,-2) maps back into delta(4,-2)
};

// Runs every good seed with max(|2m|,|2n|) <= bound to termination in
// Delta(0,0) u Delta(-2,2) u Delta(4,-2).
DescentIIReport verify_descent_II(int bound);

// dim(C) = log 3 / log phi^3, evaluated in floating point.
double cantor_dimension();

const char* cycle_name(Cycle c);

}  // namespace circle
}  // namespace kite
