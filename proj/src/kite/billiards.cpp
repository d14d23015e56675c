#include "billiards.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tiling.hpp"

namespace kite {
namespace billiards {

namespace {
QPhi q(i64 a, i64 b) { return QPhi(GoldenReal(a, b)); }
const QPhi kA = q(-3, 2);  // phi^-3
}  // namespace

const std::vector<Vec2>& kite_vertices() {
  static std::vector<Vec2> v = {Vec2(q(-1, 0), q(0, 0)), Vec2(q(0, 0), q(1, 0)),
                                Vec2(q(0, 0), q(-1, 0)), Vec2(kA, q(0, 0))};
  return v;
}

Vec2 outer_map(const Vec2& p, int dir) {
  const auto& K = kite_vertices();
  for (size_t i = 0; i < K.size(); ++i) {
    bool ok = true, grazing = false;
    for (size_t j = 0; j < K.size() && ok; ++j) {
      if (j == i) continue;
      int s = cross(K[i] - p, K[j] - p).sign();
      if (s == 0) grazing = true;
      else if (dir > 0 ? s > 0 : s < 0) ok = false;
    }
    if (!ok) continue;
    // a second vertex on the supporting line: p extends a kite edge
    if (grazing) throw Singular("p on an edge-extension line");
    return Vec2(q(2, 0) * K[i].x - p.x, q(2, 0) * K[i].y - p.y);
  }
  throw Singular("no supporting vertex (p inside K)");
}

Vec2 square_map(const Vec2& p, int dir) { return outer_map(outer_map(p, dir), dir); }

const Polygon& top_triangle() {
  static Polygon t({Vec2(q(0, 0), q(1, 0)), Vec2(q(1, 0), q(2, 0)),
                    Vec2(QPhi() - kA, q(2, 0))});
  return t;
}
const Polygon& bottom_triangle() {
  static Polygon t({Vec2(q(0, 0), q(-1, 0)), Vec2(QPhi() - kA, q(-2, 0)),
                    Vec2(q(1, 0), q(-2, 0))});
  return t;
}

int sigma_side(const Vec2& p) {
  const QPhi two = q(2, 0);
  if (two < p.y || p.y < QPhi() - two) return 0;  // outside the strip
  QPhi ay = p.y.sign() >= 0 ? p.y : QPhi() - p.y;
  QPhi xr, xl;
  if (ay <= QPhi(kOne)) {
    xr = kA * (QPhi(kOne) - ay);  // kite right edges
    xl = ay - QPhi(kOne);         // kite left edges
  } else {
    xr = ay - QPhi(kOne);              // special triangle right edge
    xl = QPhi() - kA * (ay - QPhi(kOne));  // special triangle left edge
  }
  if (xr < p.x) return +1;
  if (p.x < xl) return -1;
  return 0;
}

// ---- strips ----------------------------------------------------------------

const std::vector<StripPair>& strip_pairs() {
  static std::vector<StripPair> sp = [] {
    std::vector<StripPair> v;
    // vectors oriented so that g(V) = +width
    // S0: x + y + 1 in [0,4], V0 = (2,2)
    v.push_back({Vec2(q(1, 0), q(1, 0)), q(1, 0), q(0, 0), q(4, 0),
                 Vec2(q(2, 0), q(2, 0)), q(4, 0)});
    // S1: x - y + 1 in [0,4], V1 = (0,4); g(V1) = -4, so store -V1
    v.push_back({Vec2(q(1, 0), q(-1, 0)), q(1, 0), q(0, 0), q(4, 0),
                 Vec2(q(0, 0), q(-4, 0)), q(4, 0)});
    // S2: x - A y - A in [4-4phi, 0], V2 = (2,-2); g(V2) = 2+2A = 4phi-4
    v.push_back({Vec2(q(1, 0), QPhi() - kA), QPhi() - kA, q(4, -4), q(-4, 4),
                 Vec2(q(2, 0), q(-2, 0)), q(-4, 4)});
    // S3: x + A y - A in [4-4phi, 0], V3 = (-2-2A, 0); store -V3
    v.push_back({Vec2(q(1, 0), kA), QPhi() - kA, q(4, -4), q(-4, 4),
                 Vec2(q(-4, 4), q(0, 0)), q(-4, 4)});
    return v;
  }();
  return sp;
}

const StripPair& zeta_strip() {
  static StripPair z{Vec2(q(0, 0), q(1, 0)), q(0, 0), q(-2, 0), q(4, 0),
                     Vec2(q(0, 0), q(4, 0)), q(4, 0)};
  return z;
}

Vec2 strip_map(const Vec2& p, const StripPair& sp, int k) {
  QPhi g = dot(sp.normal, p) + sp.g0;
  QPhi rel = (g - sp.lo) / sp.gV;
  double est = rel.to_double();
  i64 n = i64(std::floor(est));
  while (QPhi::integer(n + 1) <= rel) ++n;
  while (rel < QPhi::integer(n)) --n;
  QPhi frac = rel - QPhi::integer(n);
  if (frac.is_zero()) throw OnSingularLine(k);
  return p - QPhi::integer(n) * sp.V;
}

Vec2 zeta(const Vec2& p) {
  const QPhi two = q(2, 0), four = q(4, 0);
  Vec2 out = p;
  while (two < out.y) out.y -= four;
  while (out.y <= QPhi() - two) out.y += four;
  return out;
}

Vec2 pinwheel_map(const Vec2& p) {
  const auto& sp = strip_pairs();
  Vec2 cur = p;
  static const int order[8] = {1, 2, 3, 0, 1, 2, 3, 0};
  for (int k = 0; k < 8; ++k) cur = strip_map(cur, sp[order[k]], k + 1);
  return zeta(cur);
}

// ---- return map -------------------------------------------------------------

ReturnStep return_map(const Vec2& p) {
  const QPhi two = q(2, 0);
  if (p.y == two || p.y == QPhi() - two) return {p, 0, kZero, kZero, kZero};
  int sigma = sigma_side(p);
  if (sigma == 0) return {p, 0, kZero, kZero, kZero};  // identity on K u B
  Vec2 cur = p;
  for (int n = 1; n <= 10000; ++n) {
    cur = square_map(cur);
    if (!(two < cur.y) && !(cur.y < QPhi() - two) && sigma_side(cur) == sigma) {
      Vec2 d = cur - p;
      GoldenReal dx = d.x.golden(), dy = d.y.golden();
      if (dx.b % 4 != 0) throw UndefinedOrbit("displacement not in the lattice");
      i64 n1 = dx.b / 4;
      i64 n2 = (dx.a + 6 * n1) / 2;
      if (-6 * n1 + 2 * n2 != dx.a || dy.a % 2 != 0 || dy.b != 0)
        throw UndefinedOrbit("displacement not in the lattice");
      return {cur, n, GoldenReal(n1, 0), GoldenReal(n2, 0), GoldenReal(dy.a / 2, 0)};
    }
  }
  throw UndefinedOrbit("return budget exceeded");
}

// ---- exact return-cell construction ----------------------------------------

namespace {

struct CellBuilder {
  Polygon cell;
  bool alive = true;

  explicit CellBuilder(const QPhi& halfwidth) {
    QPhi two = q(2, 0);
    cell = Polygon({Vec2(QPhi() - halfwidth, QPhi() - two),
                    Vec2(halfwidth, QPhi() - two), Vec2(halfwidth, two),
                    Vec2(QPhi() - halfwidth, two)});
  }
  void constrain(const Vec2& n, const QPhi& c) {  // keep dot(n,q) <= c
    if (!alive) return;
    auto nxt = cell.clip_halfplane(n, c);
    if (!nxt) alive = false;
    else cell = *nxt;
  }
};

struct Track {  // M(q) = s q + t with s = +-1
  int s = 1;
  Vec2 t{QPhi(), QPhi()};
  Vec2 operator()(const Vec2& p) const {
    return s > 0 ? p + t : Vec2(t.x - p.x, t.y - p.y);
  }
};

// cross(v - M(q), w - M(q)) * dir <= 0 as a half-plane in q
void sector_constraint(CellBuilder& cb, const Track& M, const Vec2& v,
                       const Vec2& w, int dir) {
  Vec2 u = w - v;
  QPhi base = cross(v, w);
  Vec2 n(QPhi::integer(-M.s) * u.y, QPhi::integer(M.s) * u.x);
  QPhi c = QPhi() - base - cross(u, M.t);
  if (dir > 0) cb.constrain(n, c);
  else cb.constrain(Vec2(QPhi() - n.x, QPhi() - n.y), QPhi() - c);
}

// arrival constraints: the full-psi-step image M(q) lies in the same
// region (relative to the strip, the wall, and the side) as `at`
void region_constraints(CellBuilder& cb, const Track& M, const Vec2& at,
                        bool returned, int side) {
  const QPhi one = q(1, 0), two = q(2, 0);
  auto lin = [&](const QPhi& a, const QPhi& b, const QPhi& c) {
    // a x + b y <= c at (x,y) = M(q)
    Vec2 n(QPhi::integer(M.s) * a, QPhi::integer(M.s) * b);
    cb.constrain(n, c - a * M.t.x - b * M.t.y);
  };
  if (!returned) {
    if (two < at.y) { lin(q(0, 0), q(-1, 0), QPhi() - two); return; }
    if (at.y < QPhi() - two) { lin(q(0, 0), q(1, 0), QPhi() - two); return; }
    int s = sigma_side(at);
    if (s == 0) {
      static const Polygon kk = tiling::kite_K();
      const Polygon* W = nullptr;
      if (top_triangle().membership(at) != Where::Outside) W = &top_triangle();
      else if (bottom_triangle().membership(at) != Where::Outside)
        W = &bottom_triangle();
      else W = &kk;
      for (size_t i = 0; i < W->size(); ++i) {
        Vec2 e = (*W)[i + 1] - (*W)[i];
        Vec2 nrm(e.y, QPhi() - e.x);
        lin(nrm.x, nrm.y, dot(nrm, (*W)[i]));
      }
      return;
    }
    side = s;
  } else {
    lin(q(0, 0), q(1, 0), two);
    lin(q(0, 0), q(-1, 0), two);
  }
  int band = at.y.sign() >= 0 ? +1 : -1;
  if (side > 0) {
    if (band > 0) {
      lin(q(-1, 0), q(1, 0), one);           // x >= y - 1
      lin(q(-1, 0), QPhi() - kA, QPhi() - kA);  // x >= A (1 - y)
    } else {
      lin(q(-1, 0), q(-1, 0), one);          // x >= -1 - y
      lin(q(-1, 0), kA, QPhi() - kA);        // x >= A (1 + y)
    }
  } else {
    if (band > 0) {
      lin(q(1, 0), q(-1, 0), QPhi() - one);  // x <= y - 1
      lin(q(1, 0), kA, kA);                  // x <= -A (y - 1)
    } else {
      lin(q(1, 0), q(1, 0), QPhi() - one);   // x <= -1 - y
      lin(q(1, 0), QPhi() - kA, kA);         // x <= A (y + 1)
    }
  }
}

std::optional<ReturnCell> build_cell(const Vec2& p, int dir, int budget) {
  const QPhi two = q(2, 0);
  if (p.y == two || p.y == QPhi() - two) return std::nullopt;
  int sigma = sigma_side(p);
  if (sigma == 0) return std::nullopt;
  CellBuilder cb(q(200, 0));
  Track M;
  ReturnCell out;
  Vec2 cur = p;
  const auto& K = kite_vertices();
  try {
    for (int n = 1; n <= budget; ++n) {
      for (int half = 0; half < 2; ++half) {
        size_t chosen = K.size();
        for (size_t i = 0; i < K.size() && chosen == K.size(); ++i) {
          bool ok = true, grazing = false;
          for (size_t j = 0; j < K.size() && ok; ++j) {
            if (j == i) continue;
            int s = cross(K[i] - cur, K[j] - cur).sign();
            if (s == 0) grazing = true;
            else if (dir > 0 ? s > 0 : s < 0) ok = false;
          }
          if (!ok) continue;
          if (grazing) throw Singular("singular");
          chosen = i;
        }
        if (chosen == K.size()) throw Singular("inside kite");
        for (size_t j = 0; j < K.size(); ++j)
          if (j != chosen) sector_constraint(cb, M, K[chosen], K[j], dir);
        out.itinerary.push_back(int(chosen));
        cur = Vec2(q(2, 0) * K[chosen].x - cur.x, q(2, 0) * K[chosen].y - cur.y);
        M.s = -M.s;
        M.t = Vec2(q(2, 0) * K[chosen].x - M.t.x, q(2, 0) * K[chosen].y - M.t.y);
      }
      bool returned = !(two < cur.y) && !(cur.y < QPhi() - two) &&
                      sigma_side(cur) == sigma;
      region_constraints(cb, M, cur, returned, sigma);
      if (!cb.alive) return std::nullopt;
      if (returned) {
        out.steps = n;
        out.displacement = M.t;
        out.poly = cb.cell;
        return out;
      }
    }
  } catch (const Singular&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReturnCell> return_cell(const Vec2& p, int budget) {
  return build_cell(p, +1, budget);
}
std::optional<ReturnCell> backward_return_cell(const Vec2& p, int budget) {
  return build_cell(p, -1, budget);
}

// ---- certificate ------------------------------------------------------------

const std::vector<ReturnCell>& pinwheel_polygons() {
  static std::vector<ReturnCell> polys = [] {
    std::vector<ReturnCell> out;
    std::vector<Polygon> found;
    const QPhi eps(gr(1, 0), 100000);
    const QPhi twenty = q(20, 0);
    std::multimap<double, size_t> by_x;  // keyed by bbox lo.x
    auto already = [&](const Vec2& s) {
      double x = s.x.to_double();
      auto lo = by_x.lower_bound(x - 500), hi = by_x.upper_bound(x + 1);
      for (auto it = lo; it != hi; ++it)
        if (found[it->second].membership(s) != Where::Outside) return true;
      return false;
    };
    for (int j = -199; j <= 199; ++j) {
      if (j == 0) continue;
      for (int i = -2500; i <= 2500; ++i) {
        Vec2 seed(QPhi(gr(i, 0), 100) + eps, QPhi(gr(j, 0), 100) + eps);
        if (sigma_side(seed) == 0) continue;
        if (already(seed)) continue;
        auto cell = return_cell(seed);
        if (!cell) continue;
        Vec2 lo, hi;
        cell->poly.bounding_box(lo, hi);
        if (hi.x <= QPhi() - twenty || twenty <= lo.x) continue;
        found.push_back(cell->poly);
        by_x.insert({lo.x.to_double(), found.size() - 1});
        out.push_back(std::move(*cell));
      }
    }
    return out;
  }();
  return polys;
}

PinwheelCertificate verify_pinwheel(bool corrupt_for_test) {
  PinwheelCertificate cert;
  auto polys = pinwheel_polygons();
  if (corrupt_for_test && !polys.empty()) {
    polys[0].poly.v[0].y += q(-6, 4);  // perturb a vertex by 2 phi^-3
  }
  cert.polygons = int(polys.size());
  auto fail = [&](int k, const std::string& what) {
    cert.failures.push_back("polygon " + std::to_string(k) + ": " + what);
  };
  const QPhi two = q(2, 0);
  for (size_t k = 0; k < polys.size(); ++k) {
    const Polygon& P = polys[k].poly;
    Vec2 ip = P.interior_point();
    auto re = return_cell(ip);
    if (!re || re->steps != polys[k].steps ||
        !(re->displacement == polys[k].displacement)) {
      fail(int(k), "interior itinerary mismatch");
      continue;
    }
    // feasibility: every vertex satisfies the itinerary constraints
    bool vertex_bad = false;
    for (const auto& V : P.v)
      if (re->poly.membership(V) == Where::Outside) vertex_bad = true;
    if (vertex_bad) {
      fail(int(k), "vertex infeasible for the itinerary");
      continue;
    }
    for (size_t e = 0; e < P.size(); ++e) {
      Vec2 a = P[e], b = P[e + 1];
      Vec2 mid = a + golden_blend(QPhi::integer(0), QPhi::integer(1)) * (b - a);
      if (a.y == b.y) {
        try {
          ReturnStep r = return_map(mid);
          if (!(r.point == mid)) fail(int(k), "horizontal edge not fixed");
        } catch (const std::runtime_error&) {
          fail(int(k), "horizontal edge orbit undefined");
        }
        continue;
      }
      // Psi^2 must be nowhere defined here: the raw orbit hits a singular
      // line before completing two returns
      bool singular = false;
      Vec2 cur2 = mid;
      int returns = 0;
      int sigma = sigma_side(mid);
      try {
        for (int s = 0; s < 100000 && returns < 2; ++s) {
          cur2 = square_map(cur2);
          if (!(two < cur2.y) && !(cur2.y < QPhi() - two) &&
              sigma_side(cur2) == sigma)
            ++returns;
        }
      } catch (const Singular&) {
        singular = true;
      }
      if (!singular) fail(int(k), "non-horizontal edge survives two returns");
    }
    try {
      Vec2 piv = pinwheel_map(ip);
      Vec2 want = ip + re->displacement;
      if (!(piv == want)) fail(int(k), "pinwheel disagrees with the return map");
    } catch (const OnSingularLine& e) {
      fail(int(k), "pinwheel singular at stage " + std::to_string(e.stage));
    }
  }
  std::vector<Polygon> parts;
  for (const auto& c : polys) parts.push_back(c.poly);
  parts.push_back(tiling::kite_K());
  parts.push_back(top_triangle());
  parts.push_back(bottom_triangle());
  Polygon rect({Vec2(q(-20, 0), q(-2, 0)), Vec2(q(20, 0), q(-2, 0)),
                Vec2(q(20, 0), q(2, 0)), Vec2(q(-20, 0), q(2, 0))});
  auto cov = verify_covering_2d(rect, parts, "dynamical-maximality");
  if (!cov.covered)
    for (auto& f : cov.failures) cert.failures.push_back("covering: " + f.what);
  cert.pass = cert.failures.empty();
  return cert;
}

ArithmeticGraph arithmetic_graph(GoldenReal y, GoldenReal xi, int window,
                                 int budget) {
  ArithmeticGraph g;
  g.y = y;
  g.xi = xi;
  g.window = window;
  for (int m = -window; m <= window; ++m)
    for (int n = -window; n <= window; ++n) {
      // tau = 0 on the odd sublattice, -2 on the even one, so that the
      // image lattice is return-map invariant (Eq. pregraph parity)
      int tau = ((m + n) % 2 + 2) % 2 == 1 ? 0 : -2;
      auto Mof = [&](int mm, int nn) {
        int t2 = ((mm + nn) % 2 + 2) % 2 == 1 ? 0 : -2;
        return Vec2(QPhi(gr(2 * nn, 0)) + QPhi::integer(2 * mm) * kA + QPhi(xi),
                    QPhi(y) + QPhi::integer(t2));
      };
      Vec2 p = Mof(m, n);
      try {
        ReturnStep r = return_map(p);
        GoldenReal dx = (r.point - p).x.golden();
        i64 dm = dx.b / 4, dn = (dx.a + 6 * (dx.b / 4)) / 2;
        if (!(Mof(m + int(dm), n + int(dn)) == r.point))
          throw UndefinedOrbit("image leaves the lattice");
        g.edges.push_back({m, n, m + int(dm), n + int(dn)});
      } catch (const std::runtime_error&) {
        g.isolated.push_back({m, n});
      }
    }
  return g;
}

}  // namespace billiards
}  // namespace kite
