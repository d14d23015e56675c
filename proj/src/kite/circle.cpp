#include "circle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace kite {
namespace circle {

const GoldenReal kEndpoints[6] = {
    {0, 0}, {2, -1}, {4, -2}, {-2, 2}, {0, 1}, {2, 0},
};

GoldenReal reduce_mod2(GoldenReal y) {
  while (y.sign() < 0) y += kTwo;
  while ((y - kTwo).sign() >= 0) y -= kTwo;
  return y;
}

IntervalHit interval_of(GoldenReal y) {
  y = reduce_mod2(y);
  IntervalHit out;
  for (int k = 1; k <= 5; ++k) {
    int lo = (y - kEndpoints[k - 1]).sign();
    int hi = (kEndpoints[k] - y).sign();
    if (lo >= 0 && hi >= 0) {
      out.index = k;
      if (lo == 0) {
        out.boundary = true;
        out.second = k == 1 ? 5 : k - 1;  // 0 is shared with I5 mod 2
      } else if (hi == 0) {
        out.boundary = true;
        out.second = k == 5 ? 1 : k + 1;
      }
      return out;
    }
  }
  throw std::logic_error("interval_of: unreachable");
}

GoldenReal branch(int k, GoldenReal y) {
  switch (k) {
    case 1: return kPhiCube * y;
    case 2: return y + kPhi - kPhiInv2;
    case 3: return kPhiCube * y - kPhiCube + kOne;
    case 4: return y - kPhi + kPhiInv2;
    case 5: return kPhiCube * y - kTwo * kPhiCube + kTwo;
  }
  throw std::logic_error("branch index");
}

GoldenReal apply_R(GoldenReal y) {
  y = reduce_mod2(y);
  IntervalHit hit = interval_of(y);
  GoldenReal r = reduce_mod2(branch(hit.index, y));
  if (hit.boundary) {
    // endpoint 0 is shared between I1 at 0 and I5 at 2
    GoldenReal alt = hit.second == 5 && y.is_zero()
                         ? reduce_mod2(branch(5, kTwo))
                         : reduce_mod2(branch(hit.second, y));
    if (alt != r) throw std::logic_error("branches disagree at an endpoint");
  }
  return r;
}

const i64 kRhoTable[5][2] = {{0, 0}, {2, -2}, {0, -2}, {-2, -2}, {0, -4}};

GoldenReal apply_rho(GoldenReal y) {
  y = reduce_mod2(y);
  IntervalHit hit = interval_of(y);
  int k = hit.index;
  GoldenReal out = kPhiCube * y + GoldenReal(kRhoTable[k - 1][0], kRhoTable[k - 1][1]);
  return reduce_mod2(out);
}

namespace {
const GoldenReal kCycleVals[8] = {
    {0, 0}, {1, 0}, {0, 1}, {2, -1}, {-1, 1}, {-3, 3}, {3, -1}, {5, -3},
};
std::optional<Cycle> cycle_of_value(GoldenReal y) {
  if (y == kCycleVals[0]) return Cycle::Zero;
  if (y == kCycleVals[1]) return Cycle::One;
  if (y == kCycleVals[2] || y == kCycleVals[3]) return Cycle::PhiPair;
  for (int i = 4; i < 8; ++i)
    if (y == kCycleVals[i]) return Cycle::Quad;
  return std::nullopt;
}
}  // namespace

Descent descend_to_cycle(GoldenReal y) {
  y = reduce_mod2(y);
  i64 N = std::max(std::abs(y.a), std::abs(y.b));
  i64 budget = 2 * (N + 40);
  for (i64 n = 0; n <= budget; ++n) {
    if (auto c = cycle_of_value(y)) return {*c, int(n)};
    y = apply_R(y);
  }
  throw StepBudgetExceeded();
}

RenormSeq renorm_sequence(GoldenReal y, int n) {
  RenormSeq out;
  y = reduce_mod2(y);
  for (int i = 0; i < n; ++i) {
    IntervalHit hit = interval_of(y);
    if (hit.boundary) out.unique = false;
    out.digits.push_back(hit.index);
    y = apply_R(y);
  }
  return out;
}

CantorClass cantor_membership(GoldenReal y) {
  y = reduce_mod2(y);
  // C is the invariant set of R avoiding the open gaps
  //   (phi, 2), (2-phi, 4-2phi), (6-3phi, -2+2phi).
  const GoldenReal g0l{0, 1}, g0r{2, 0};
  const GoldenReal g1l{2, -1}, g1r{4, -2};
  const GoldenReal g2l{6, -3}, g2r{-2, 2};
  auto in_open = [](const GoldenReal& v, const GoldenReal& lo,
                    const GoldenReal& hi) {
    return (v - lo).sign() > 0 && (hi - v).sign() > 0;
  };
  std::set<std::pair<i64, i64>> seen;
  GoldenReal cur = y;
  while (true) {
    if (in_open(cur, g0l, g0r) || in_open(cur, g1l, g1r) || in_open(cur, g2l, g2r))
      return CantorClass::NotInC;
    if (!seen.insert({cur.a, cur.b}).second) break;  // entered a cycle
    cur = apply_R(cur);
  }
  // in C: C# vs gap endpoints decided by sequence uniqueness (m parity)
  bool m_even = (y.a % 2) == 0;
  return m_even ? CantorClass::InCMinusCSharp : CantorClass::InCSharp;
}

G2Result g2_equivalent(GoldenReal y1, GoldenReal y2, int budget) {
  y1 = reduce_mod2(y1);
  y2 = reduce_mod2(y2);
  // forward search for a common iterate
  std::map<std::pair<i64, i64>, int> orbit1;
  GoldenReal c = y1;
  for (int n = 0; n <= budget; ++n) {
    orbit1.insert({{c.a, c.b}, n});
    c = apply_R(c);
  }
  c = y2;
  for (int n = 0; n <= budget; ++n) {
    auto it = orbit1.find({c.a, c.b});
    if (it != orbit1.end()) return {G2Result::Equivalent, it->second, n};
    c = apply_R(c);
  }
  // golden inputs: disjoint forward-invariant terminal cycles decide
  try {
    Descent d1 = descend_to_cycle(y1);
    Descent d2 = descend_to_cycle(y2);
    if (d1.cycle != d2.cycle) return {G2Result::NotEquivalent, 0, 0};
    return {G2Result::Equivalent, d1.steps, d2.steps};
  } catch (const StepBudgetExceeded&) {
    return {G2Result::Undecided, 0, 0};
  }
}

namespace {

struct DiagKey {
  std::pair<i64, i64> delta;
  std::pair<i64, i64> lo, hi;
  bool operator<(const DiagKey& o) const {
    if (delta != o.delta) return delta < o.delta;
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
};

DiagKey key_of(const Diagonal& d) {
  return {{d.delta.a, d.delta.b}, {d.lo.a, d.lo.b}, {d.hi.a, d.hi.b}};
}

bool is_terminal_delta(const GoldenReal& delta) {
  return delta.is_zero() || delta == GoldenReal(-2, 2) || delta == GoldenReal(4, -2);
}

// Cut a diagonal into small diagonals (each inside one Q_ij).
std::vector<Diagonal> subdivide(const Diagonal& d) {
  std::vector<GoldenReal> cuts{d.lo, d.hi};
  for (int k = 1; k < 5; ++k) {
    GoldenReal c = kEndpoints[k];
    if ((c - d.lo).sign() > 0 && (d.hi - c).sign() > 0) cuts.push_back(c);
    GoldenReal c2 = c - d.delta;  // y2 = y1 + delta crosses the endpoint
    if ((c2 - d.lo).sign() > 0 && (d.hi - c2).sign() > 0) cuts.push_back(c2);
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const GoldenReal& a, const GoldenReal& b) { return a < b; });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Diagonal> out;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    out.push_back({d.delta, cuts[i], cuts[i + 1]});
  return out;
}

// Apply rho coordinatewise to a small diagonal, then reflect above y2=y1.
// Every f[m,n] branch maps its interval into [0,2], so no circle reduction
// is needed here.
Diagonal rho_image(const Diagonal& d) {
  GoldenReal mid1 = golden_blend(d.lo, d.hi);
  GoldenReal mid2 = mid1 + d.delta;
  int i = interval_of(mid1).index, j = interval_of(mid2).index;
  auto f = [](int k, GoldenReal x) {
    return kPhiCube * x + GoldenReal(kRhoTable[k - 1][0], kRhoTable[k - 1][1]);
  };
  GoldenReal ndelta = f(j, d.lo + d.delta) - f(i, d.lo);
  if (ndelta.sign() >= 0) return {ndelta, f(i, d.lo), f(i, d.hi)};
  return {-ndelta, f(j, d.lo + d.delta), f(j, d.hi + d.delta)};
}

}  // namespace

DescentIIReport verify_descent_II(int bound) {
  DescentIIReport rep;
  std::vector<Diagonal> seeds;
  for (i64 m = -bound / 2; m <= bound / 2; ++m)
    for (i64 n = -bound / 2; n <= bound / 2; ++n) {
      GoldenReal delta(2 * m, 2 * n);
      if (delta.sign() < 0 || (delta - kTwo).sign() > 0) continue;
      // Q = [0,2]^2; the seed is the full slope-1 segment in Q
      GoldenReal lo{0, 0};
      GoldenReal hi = kTwo - delta;
      if (!(lo < hi)) continue;
      seeds.push_back({delta, lo, hi});
    }
  rep.seeds = int(seeds.size());

  for (const auto& seed : seeds) {
    std::set<DiagKey> done;
    std::vector<Diagonal> work{seed};
    int gen = 0;
    while (!work.empty()) {
      if (++gen > 200) {
        rep.failure = "seed did not terminate";
        return rep;
      }
      std::vector<Diagonal> next;
      for (const auto& d : work) {
        for (const auto& s : subdivide(d)) {
          if (is_terminal_delta(s.delta)) continue;
          Diagonal img = rho_image(s);
          if (is_terminal_delta(img.delta)) continue;
          DiagKey k = key_of(img);
          if (done.insert(k).second) next.push_back(img);
        }
      }
      work = std::move(next);
    }
    rep.max_generations = std::max(rep.max_generations, gen);
  }

  // the Delta(4,-2) sub-analysis
  Diagonal d42{GoldenReal(4, -2), GoldenReal(0, 0), kTwo - GoldenReal(4, -2)};
  auto pieces = subdivide(d42);
  rep.split_count = int(pieces.size());
  for (const auto& s : pieces) {
    GoldenReal mid1 = golden_blend(s.lo, s.hi);
    int i = interval_of(mid1).index;
    int j = interval_of(mid1 + s.delta).index;
    Diagonal img = rho_image(s);
    if (i == 2 && j == 4) {
      if (img.delta == GoldenReal(4, -2)) rep.self_return = true;
    } else if (img.delta.is_zero() || img.delta == GoldenReal(-2, 2)) {
      ++rep.terminal_children;
    }
  }
  rep.ok = rep.failure.empty();
  return rep;
}

double cantor_dimension() { return std::log(3.0) / (3.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0)); }

const char* cycle_name(Cycle c) {
  switch (c) {
    case Cycle::Zero: return "{0}";
    case Cycle::One: return "{1}";
    case Cycle::PhiPair: return "{phi, 2-phi}";
    case Cycle::Quad: return "{-1+phi, -3+3phi, 3-phi, 5-3phi}";
  }
  return "?";
}

}  // namespace circle
}  // namespace kite
