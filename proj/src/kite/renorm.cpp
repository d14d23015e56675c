#include "renorm.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "circle.hpp"
#include "renorm_data.hpp"

namespace kite {
namespace renorm {

using torus::ExchangeSystem;

namespace {
QPhi q(i64 a, i64 b) { return QPhi(GoldenReal(a, b)); }
const GoldenReal kFour(4, 0);

Polyhedron involute_poly(const Polyhedron& P) {
  std::vector<Vec3> verts;
  for (const auto& v : P.v)
    verts.push_back(Vec3(QPhi(kFour) - v.x, QPhi(kFour) - v.y, QPhi(kFour) - v.z));
  return Polyhedron(verts);
}

// doubled layer endpoints of the B partition, ascending:
// 0 < phi^-2 < 2 phi^-2 < 1 < 2-2 phi^-2 < 2-phi^-2 < 2  (all doubled)
const GoldenReal kJ[7] = {{0, 0}, {4, -2}, {8, -4},    {2, 0},
                          {-4, 4}, {0, 2},  {4, 0}};

}  // namespace

AffineCode AffineCode::inverse() const {
  GoldenReal rinv = div_exact(kOne, r);
  return {rinv, {-(rinv * w[0]), -(rinv * w[1]), -(rinv * w[2])}};
}

Vec3 AffineCode::apply(const Vec3& p) const {
  QPhi rr(r);
  return Vec3(rr * p.x + QPhi(w[0]), rr * p.y + QPhi(w[1]), rr * p.z + QPhi(w[2]));
}

Polyhedron AffineCode::apply(const Polyhedron& P) const {
  std::vector<Vec3> verts;
  for (const auto& v : P.v) verts.push_back(apply(v));
  return Polyhedron(verts);
}

const std::vector<Branch>& B_branches() {
  static std::vector<Branch> out = [] {
    std::vector<Branch> v;
    std::map<int, Polyhedron> printed;
    for (const auto& [jk, rows] : kBranchVertices) {
      std::vector<Vec3> verts;
      for (const auto& r : rows)
        verts.push_back(Vec3(GoldenReal(2 * r[0], 2 * r[1]),
                             GoldenReal(2 * r[2], 2 * r[3]),
                             GoldenReal(2 * r[4], 2 * r[5])));
      printed.emplace(jk, Polyhedron(verts));
    }
    for (int j = 1; j <= 6; ++j)
      for (int k = 1; k <= 4; ++k) {
        Branch b;
        b.which = 1;
        b.layer = j;
        b.index = k;
        b.zlo = kJ[j - 1];
        b.zhi = kJ[j];
        if (j <= 3) b.poly = printed.at(10 * j + k);
        else b.poly = involute_poly(printed.at(10 * (7 - j) + k));
        v.push_back(std::move(b));
      }
    return v;
  }();
  return out;
}

namespace {

// R-hat^{-1} codes from the coordinates appendix; the 8-tuple
// (a1..a8) means T(V) = (a1 + a2 phi) V + (a3+a4 phi, a5+a6 phi, a7+a8 phi).
AffineCode code_of(std::array<i64, 8> t) {
  return {GoldenReal(t[0], t[1]),
          {GoldenReal(2 * t[2], 2 * t[3]), GoldenReal(2 * t[4], 2 * t[5]),
           GoldenReal(2 * t[6], 2 * t[7])}};
}

AffineCode rhat_inverse_code(int i, int j, int k) {
  if (i == 3 && j == 1 && k == 4) return code_of({-3, 2, 4, -2, 8, -4, 4, -2});
  if (i == 3 && j == 6 && k == 4) return code_of({-3, 2, 4, -2, 0, 0, 4, -2});
  if (i == 1 && j == 1 && k >= 3) return code_of({-3, 2, 4, -2, 8, -4, 0, 0});
  if (i == 5 && j == 6 && k >= 3) return code_of({-3, 2, 4, -2, 0, 0, 8, -4});
  switch (i) {
    case 1: return code_of({-3, 2, 4, -2, 4, -2, 0, 0});
    case 2: return code_of({1, 0, 0, 0, 0, 0, 2, -2});
    case 3: return code_of({-3, 2, 4, -2, 4, -2, 4, -2});
    case 4: return code_of({1, 0, 0, 0, 0, 0, -2, 2});
    case 5: return code_of({-3, 2, 4, -2, 4, -2, 8, -4});
  }
  throw std::logic_error("rhat code");
}

// the 18 (i,j) layer pairs of A-hat, in ascending height order
const std::vector<std::pair<int, int>>& layer_pairs() {
  static std::vector<std::pair<int, int>> v = {
      {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3},
      {3, 4}, {3, 5}, {3, 6}, {4, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 5}, {5, 6}};
  return v;
}

}  // namespace

const std::vector<Branch>& A_branches() {
  static std::vector<Branch> out = [] {
    std::vector<Branch> v;
    const auto& B = B_branches();
    const auto& pairs = layer_pairs();
    for (size_t l = 0; l < pairs.size(); ++l) {
      auto [i, j] = pairs[l];
      for (int k = 1; k <= 4; ++k) {
        AffineCode inv = rhat_inverse_code(i, j, k);
        Branch b;
        b.which = 0;
        b.layer = int(l);
        b.index = k;
        b.i = i;
        b.j = j;
        b.type2 = (i % 2 == 1);
        b.rhat = inv.inverse();
        const Branch& src = B[(j - 1) * 4 + (k - 1)];
        b.poly = inv.apply(src.poly);
        Vec3 lo, hi;
        b.poly.bounding_box(lo, hi);
        b.zlo = lo.z.golden();
        b.zhi = hi.z.golden();
        v.push_back(std::move(b));
      }
    }
    return v;
  }();
  return out;
}

int locate_branch(const std::vector<Branch>& family, const GPoint& p) {
  for (size_t i = 0; i < family.size(); ++i) {
    if (p[2] < family[i].zlo || family[i].zhi < p[2]) continue;
    if (family[i].poly.membership(Vec3(p[0], p[1], p[2])) == Where::Interior)
      return int(i);
  }
  return -1;
}

GPoint rhat(const GPoint& p) {
  int b = locate_branch(A_branches(), p);
  if (b < 0) throw NotInA();
  return ExchangeSystem::instance().reduce(A_branches()[b].rhat(p));
}

std::pair<GPoint, int> first_return(const GPoint& p, int which, int dir,
                                    int budget) {
  const auto& sys = ExchangeSystem::instance();
  const auto& fam = which == 0 ? A_branches() : B_branches();
  GPoint cur = p;
  for (int n = 1; n <= budget; ++n) {
    cur = dir > 0 ? sys.step(cur).first : sys.step_back(cur).first;
    if (locate_branch(fam, cur) >= 0) return {cur, n};
  }
  throw BudgetExceeded();
}

std::optional<Atom> return_cell(const GPoint& p, int which, int budget) {
  const auto& sys = ExchangeSystem::instance();
  const auto& fam = which == 0 ? A_branches() : B_branches();
  int home = locate_branch(fam, p);
  if (home < 0) return std::nullopt;
  Atom out;
  out.branch = home;
  Polyhedron cell = fam[home].poly;
  GPoint cur = p;
  GPoint offset{kZero, kZero, kZero};
  try {
    for (int n = 1; n <= budget; ++n) {
      auto [nxt, piece] = sys.step(cur);
      // itinerary constraint: cell + offset must lie in the piece
      const Polyhedron& P = sys.piece(piece);
      for (const auto& f : P.faces) {
        QPhi c = f.offset - (f.normal.x * QPhi(offset[0]) +
                             f.normal.y * QPhi(offset[1]) +
                             f.normal.z * QPhi(offset[2]));
        auto clipped = cell.clip_halfspace(f.normal, c);
        if (!clipped) return std::nullopt;
        cell = *clipped;
      }
      out.itinerary.push_back(piece);
      GPoint raw = cur + sys.translation(piece);
      offset = offset + sys.translation(piece) + (nxt - raw);
      out.offsets.push_back(offset);
      cur = nxt;
      int back = locate_branch(fam, cur);
      if (back >= 0) {
        const Polyhedron& B = fam[back].poly;
        for (const auto& f : B.faces) {
          QPhi c = f.offset - (f.normal.x * QPhi(offset[0]) +
                               f.normal.y * QPhi(offset[1]) +
                               f.normal.z * QPhi(offset[2]));
          auto clipped = cell.clip_halfspace(f.normal, c);
          if (!clipped) return std::nullopt;
          cell = *clipped;
        }
        out.chain_length = n;
        out.poly = cell;
        return out;
      }
    }
  } catch (const torus::OnBoundary&) {
    return std::nullopt;
  }
  return std::nullopt;
}

// ---- probing enumeration ----------------------------------------------------

namespace {

std::vector<GPoint> probe_directions() {
  std::vector<GPoint> out;
  for (i64 a = -1; a <= 1; ++a)
    for (i64 b = -1; b <= 1; ++b)
      for (i64 c = -1; c <= 1; ++c)
        for (i64 d = -1; d <= 1; ++d)
          for (i64 e = -1; e <= 1; ++e)
            for (i64 f = -1; f <= 1; ++f) {
              if (a == 0 && b == 0 && c == 0 && d == 0 && e == 0 && f == 0)
                continue;
              out.push_back({GoldenReal(a, b), GoldenReal(c, d), GoldenReal(e, f)});
            }
  return out;
}

struct VKey {
  std::array<std::pair<i64, i64>, 3> k;
  std::array<i64, 3> den;
  bool operator<(const VKey& o) const {
    if (k != o.k) return k < o.k;
    return den < o.den;
  }
};
VKey vkey(const Vec3& v) {
  return {{std::pair<i64, i64>{v.x.num.a, v.x.num.b},
           {v.y.num.a, v.y.num.b},
           {v.z.num.a, v.z.num.b}},
          {v.x.den, v.y.den, v.z.den}};
}

// Atoms of a single branch, by probing from vertices.
std::vector<Atom> fill_branch(int which, int branch_idx) {
  const auto& fam = which == 0 ? A_branches() : B_branches();
  const Branch& br = fam[branch_idx];
  std::vector<Atom> found;
  std::set<VKey> vertex_pool_seen;
  std::vector<Vec3> vertex_pool;
  auto add_vertices = [&](const Polyhedron& P) {
    for (const auto& v : P.v)
      if (vertex_pool_seen.insert(vkey(v)).second) vertex_pool.push_back(v);
  };
  add_vertices(br.poly);

  static const std::vector<GPoint> probes = probe_directions();
  auto inside_known = [&](const Vec3& p) {
    for (const auto& a : found)
      if (a.poly.membership(p) != Where::Outside) return true;
    return false;
  };
  auto try_point = [&](const Vec3& p) {
    if (br.poly.membership(p) != Where::Interior) return;
    if (inside_known(p)) return;
    GPoint gp;
    try {
      gp = {p.x.golden(), p.y.golden(), p.z.golden()};
    } catch (const NotDivisible&) {
      return;
    }
    auto atom = return_cell(gp, which);
    if (atom) {
      add_vertices(atom->poly);
      found.push_back(std::move(*atom));
    }
  };

  bool progress = true;
  while (progress) {
    progress = false;
    size_t before = found.size();
    size_t pool_snapshot = vertex_pool.size();
    for (size_t vi = 0; vi < pool_snapshot; ++vi) {
      Vec3 v = vertex_pool[vi];
      for (const auto& w : probes) {
        for (int k = 8; k <= 20; k += 4) {
          GoldenReal s = phi_pow(-k);
          Vec3 nudged(v.x + QPhi(s * w[0]), v.y + QPhi(s * w[1]),
                      v.z + QPhi(s * w[2]));
          if (br.poly.membership(nudged) != Where::Interior) continue;
          if (inside_known(nudged)) break;
          size_t had = found.size();
          try_point(nudged);
          if (found.size() > had) break;
        }
      }
    }
    if (found.size() > before || vertex_pool.size() > pool_snapshot)
      progress = true;
  }
  // probing can miss slivers; complete the list from exact slice coverage
  for (int round = 0; round < 64; ++round) {
    std::optional<Vec3> gap;
    std::vector<QPhi> zs{br.poly.zmin(), br.poly.zmax()};
    for (const auto& a : found)
      for (const auto& v : a.poly.v) zs.push_back(v.z);
    std::sort(zs.begin(), zs.end(),
              [](const QPhi& a, const QPhi& b) { return a < b; });
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    for (size_t i = 0; i + 1 < zs.size() && !gap; ++i) {
      if (zs[i + 1] <= br.poly.zmin() || br.poly.zmax() <= zs[i]) continue;
      QPhi h = golden_blend(zs[i], zs[i + 1]);
      Polygon qs = br.poly.slice_at_height(h);
      std::vector<Polygon> ps;
      for (const auto& a : found)
        if (a.poly.zmin() < h && h < a.poly.zmax())
          ps.push_back(a.poly.slice_at_height(h));
      if (auto u = uncovered_point(qs, ps)) gap = Vec3(u->x, u->y, h);
    }
    if (!gap) break;
    size_t had = found.size();
    try_point(*gap);
    if (found.size() == had) break;  // give up; the certificate will flag it
  }
  return found;
}

}  // namespace

const std::vector<Atom>& atoms(int which) {
  static std::vector<Atom> a_atoms, b_atoms;
  static std::once_flag once_a, once_b;
  auto build = [](int w, std::vector<Atom>& out) {
    const auto& fam = w == 0 ? A_branches() : B_branches();
    std::vector<std::vector<Atom>> per(fam.size());
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    int nthreads = std::max(1u, std::thread::hardware_concurrency());
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&] {
        while (true) {
          size_t b = next.fetch_add(1);
          if (b >= fam.size()) break;
          per[b] = fill_branch(w, int(b));
        }
      });
    for (auto& th : workers) th.join();
    for (auto& v : per)
      for (auto& a : v) out.push_back(std::move(a));
  };
  if (which == 0) {
    std::call_once(once_a, [&] { build(0, a_atoms); });
    return a_atoms;
  }
  std::call_once(once_b, [&] { build(1, b_atoms); });
  return b_atoms;
}

// ---- statements ------------------------------------------------------------

VerificationReport verify_counts() {
  VerificationReport rep;
  rep.check = "renorm.counts";
  rep.anchor = "atom and chain-length counts";
  Stopwatch sw;
  const auto& B = atoms(1);
  const auto& A = atoms(0);
  int maxB = 0, maxA = 0;
  for (const auto& a : B) maxB = std::max(maxB, a.chain_length);
  for (const auto& a : A) maxA = std::max(maxA, a.chain_length);
  rep.counts["B_atoms"] = B.size();
  rep.counts["A_atoms"] = A.size();
  rep.counts["maxB"] = maxB;
  rep.counts["maxA"] = maxA;
  const auto& famB = B_branches();
  const auto& famA = A_branches();
  std::mutex mu;
  for (int which = 1; which >= 0; --which) {
    const auto& fam = which == 0 ? famA : famB;
    const auto& ats = which == 0 ? A : B;
    std::vector<std::vector<const Polyhedron*>> parts(fam.size());
    for (const auto& a : ats) parts[a.branch].push_back(&a.poly);
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    int nthreads = std::max(1u, std::thread::hardware_concurrency());
    for (int t = 0; t < nthreads; ++t)
      workers.emplace_back([&] {
        while (true) {
          size_t b = next.fetch_add(1);
          if (b >= fam.size()) break;
          auto prep = verify_partition_3d(fam[b].poly, parts[b], "maximality");
          if (!prep.ok) {
            std::lock_guard<std::mutex> g(mu);
            rep.witnesses.push_back((which == 0 ? "A branch " : "B branch ") +
                                    std::to_string(b) + ": " + prep.failure);
          }
        }
      });
    for (auto& th : workers) th.join();
    if (!rep.witnesses.empty()) break;
  }
  rep.pass = rep.witnesses.empty() && B.size() == 678 && A.size() == 2034 &&
             maxB == 109 && maxA == 703;
  rep.elapsed_s = sw.seconds();
  return rep;
}

VerificationReport verify_statement1() {
  VerificationReport rep;
  rep.check = "renorm.stmt1";
  rep.anchor = "R-hat conjugates the first-return maps atomwise";
  Stopwatch sw;
  const auto& sys = ExchangeSystem::instance();
  const auto& A = atoms(0);
  const auto& famA = A_branches();
  std::atomic<int> paired{0};
  std::mutex mu;
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  int nthreads = std::max(1u, std::thread::hardware_concurrency());
  for (int t = 0; t < nthreads; ++t)
    workers.emplace_back([&] {
      while (true) {
        size_t idx = next.fetch_add(1);
        if (idx >= A.size()) break;
        const Atom& a = A[idx];
        const Branch& br = famA[a.branch];
        Vec3 ipq = a.poly.interior_point();
        GPoint p{ipq.x.golden(), ipq.y.golden(), ipq.z.golden()};
        GPoint qpt = sys.reduce(br.rhat(p));
        try {
          auto [pa, na] = first_return(p, 0, +1);
          int dir = br.type2 ? -1 : +1;
          auto [qb, nb] = first_return(qpt, 1, dir);
          GPoint qa = sys.reduce(br.rhat(pa));
          if (!(qa == qb)) {
            std::lock_guard<std::mutex> g(mu);
            rep.witnesses.push_back("conjugacy fails on an atom of branch " +
                                    std::to_string(a.branch));
          } else {
            ++paired;
          }
        } catch (const std::runtime_error& e) {
          std::lock_guard<std::mutex> g(mu);
          rep.witnesses.push_back(std::string("orbit failure: ") + e.what());
        }
      }
    });
  for (auto& th : workers) th.join();
  rep.counts["atoms_checked"] = int(paired);
  rep.pass = rep.witnesses.empty() && paired == int(A.size());
  rep.elapsed_s = sw.seconds();
  return rep;
}

VerificationReport verify_statement2() {
  VerificationReport rep;
  rep.check = "renorm.stmt2";
  rep.anchor = "height action of R-hat equals the circle map";
  Stopwatch sw;
  for (const auto& br : A_branches()) {
    Vec3 ipq = br.poly.interior_point();
    GPoint p{ipq.x.golden(), ipq.y.golden(), ipq.z.golden()};
    GPoint img = br.rhat(p);
    GoldenReal h = p[2], want{0, 0};
    switch (br.i) {
      case 1: want = kPhiCube * h; break;
      case 2: want = h + kTwo * (kPhi - kPhiInv2); break;
      case 3: want = kPhiCube * h - kTwo * kPhiCube + kTwo; break;
      case 4: want = h - kTwo * (kPhi - kPhiInv2); break;
      case 5: want = kPhiCube * h - kFour * kPhiCube + kFour; break;
    }
    GoldenReal diff = img[2] - want;
    bool ok = false;
    for (i64 m = -6; m <= 6 && !ok; ++m)
      if (diff == GoldenReal(4 * m, 0)) ok = true;
    if (!ok)
      rep.witnesses.push_back("branch (" + std::to_string(br.i) + "," +
                              std::to_string(br.j) + "," +
                              std::to_string(br.index) + ")");
  }
  rep.pass = rep.witnesses.empty();
  rep.elapsed_s = sw.seconds();
  return rep;
}

VerificationReport verify_statement3() {
  VerificationReport rep;
  rep.check = "renorm.stmt3";
  rep.anchor = "R-hat preserves the embedded plane family";
  Stopwatch sw;
  auto in_family = [](const GPoint& p) {
    GoldenReal t = kTwo * p[1] - kPhi * p[0] + kFour * p[2];
    return t.a % 4 == 0 && t.b % 4 == 0;
  };
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<i64> d(-25, 25);
  const auto& sys = ExchangeSystem::instance();
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 1500; ++i) {
    GoldenReal x(d(rng), d(rng)), y(d(rng), d(rng));
    GPoint p = ExchangeSystem::theta(x, y);
    if (!in_family(p)) {
      rep.witnesses.push_back("theta image leaves the family");
      break;
    }
    int b = locate_branch(A_branches(), p);
    if (b < 0) continue;
    GPoint img = sys.reduce(A_branches()[b].rhat(p));
    if (!in_family(img)) {
      rep.witnesses.push_back("R-hat image leaves the family at branch " +
                              std::to_string(b));
      break;
    }
    ++checked;
  }
  rep.counts["samples_in_A"] = checked;
  rep.pass = rep.witnesses.empty() && checked >= 200;
  rep.elapsed_s = sw.seconds();
  return rep;
}

VerificationReport verify_statement5() {
  VerificationReport rep;
  rep.check = "renorm.stmt5";
  rep.anchor = "every B chain is strictly shorter than its A chain";
  Stopwatch sw;
  const auto& sys = ExchangeSystem::instance();
  const auto& A = atoms(0);
  const auto& famA = A_branches();
  std::atomic<int> pairs{0};
  std::mutex mu;
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  int nthreads = std::max(1u, std::thread::hardware_concurrency());
  for (int t = 0; t < nthreads; ++t)
    workers.emplace_back([&] {
      while (true) {
        size_t idx = next.fetch_add(1);
        if (idx >= A.size()) break;
        const Atom& a = A[idx];
        const Branch& br = famA[a.branch];
        Vec3 ipq = a.poly.interior_point();
        GPoint p{ipq.x.golden(), ipq.y.golden(), ipq.z.golden()};
        GPoint qpt = sys.reduce(br.rhat(p));
        try {
          auto [qb, nb] = first_return(qpt, 1, br.type2 ? -1 : +1);
          if (!(nb < a.chain_length)) {
            std::lock_guard<std::mutex> g(mu);
            rep.witnesses.push_back("chain not shortened at A branch " +
                                    std::to_string(a.branch));
          } else {
            ++pairs;
          }
        } catch (const std::runtime_error& e) {
          std::lock_guard<std::mutex> g(mu);
          rep.witnesses.push_back(std::string("orbit failure: ") + e.what());
        }
      }
    });
  for (auto& th : workers) th.join();
  rep.counts["pairs"] = int(pairs);
  rep.pass = rep.witnesses.empty() && pairs == int(A.size());
  rep.elapsed_s = sw.seconds();
  return rep;
}

}  // namespace renorm
}  // namespace kite
