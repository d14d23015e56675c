#include "geom2.hpp"

#include <algorithm>
#include <map>

namespace kite {

bool Polygon::positively_convex() const {
  size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) return false;
    Vec2 a = v[(i + 1) % n] - v[i];
    Vec2 b = v[(i + 2) % n] - v[i];
    if (cross(a, b).sign() < 0) return false;
  }
  return true;
}

bool Polygon::strictly_convex() const {
  size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = v[(i + 1) % n] - v[i];
    Vec2 b = v[(i + 2) % n] - v[i];
    if (cross(a, b).sign() <= 0) return false;
  }
  return true;
}

QPhi Polygon::area2() const {
  QPhi s;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    s += cross(a, b);
  }
  return s;
}

Where Polygon::membership(const Vec2& p) const {
  bool boundary = false;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    int s = cross(v[i] - p, v[(i + 1) % n] - p).sign();
    if (s < 0) return Where::Outside;
    if (s == 0) {
      // on the edge line; inside the segment span?
      if (dot(v[i] - p, v[(i + 1) % n] - p).sign() <= 0) boundary = true;
      else return Where::Outside;
    }
  }
  return boundary ? Where::Boundary : Where::Interior;
}

Vec2 Polygon::interior_point() const {
  Vec2 w = v[0];
  for (size_t i = 1; i < v.size(); ++i) {
    w = Vec2(golden_blend(w.x, v[i].x), golden_blend(w.y, v[i].y));
  }
  return w;
}

std::optional<Polygon> Polygon::clip_halfplane(const Vec2& n, const QPhi& c) const {
  // keep side n.p <= c
  std::vector<Vec2> out;
  size_t m = v.size();
  std::vector<int> side(m);
  for (size_t i = 0; i < m; ++i) side[i] = (dot(n, v[i]) - c).sign();
  for (size_t i = 0; i < m; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % m];
    int sa = side[i], sb = side[(i + 1) % m];
    if (sa <= 0) out.push_back(a);
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
      QPhi t = (c - dot(n, a)) / dot(n, b - a);
      out.push_back(a + t * (b - a));
    }
  }
  // drop repeats
  std::vector<Vec2> clean;
  for (const auto& p : out) {
    if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
  }
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  if (clean.size() < 3) return std::nullopt;
  Polygon poly(clean);
  if (poly.area2().sign() <= 0) return std::nullopt;
  return poly;
}

std::optional<Polygon> Polygon::intersect(const Polygon& q) const {
  Polygon cur = *this;
  size_t n = q.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 e = q[(i + 1) % n] - q[i];
    // interior of ccw q is where dot((e.y,-e.x), p) <= dot((e.y,-e.x), q[i])
    Vec2 nrm(e.y, QPhi::integer(0) - e.x);
    auto nxt = cur.clip_halfplane(nrm, dot(nrm, q[i]));
    if (!nxt) return std::nullopt;
    cur = *nxt;
  }
  return cur;
}

bool Polygon::disjoint_interior(const Polygon& q) const {
  // exact separating-axis test for convex polygons
  auto separated_by = [](const Polygon& a, const Polygon& b) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
      Vec2 e = a[(i + 1) % n] - a[i];
      Vec2 nrm(e.y, -e.x);  // outward for ccw a
      // all of b weakly on the outer side?
      bool all = true;
      for (const auto& p : b.v) {
        if (dot(nrm, p - a[i]).sign() < 0) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  };
  if (separated_by(*this, q) || separated_by(q, *this)) return true;
  return false;
}

Polygon Polygon::translated(const Vec2& t) const {
  Polygon out = *this;
  for (auto& p : out.v) p = p + t;
  return out;
}

Polygon Polygon::canonical() const {
  size_t n = v.size(), best = 0;
  for (size_t i = 1; i < n; ++i)
    if (v[i].lex_less(v[best])) best = i;
  Polygon out;
  out.v.reserve(n);
  for (size_t i = 0; i < n; ++i) out.v.push_back(v[(best + i) % n]);
  return out;
}

void Polygon::bounding_box(Vec2& lo, Vec2& hi) const {
  lo = hi = v[0];
  for (const auto& p : v) {
    if (p.x < lo.x) lo.x = p.x;
    if (p.y < lo.y) lo.y = p.y;
    if (hi.x < p.x) hi.x = p.x;
    if (hi.y < p.y) hi.y = p.y;
  }
}

Polygon ccw_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Vec2& a, const Vec2& b) { return a.lex_less(b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n < 3) return Polygon(pts);
  std::vector<Vec2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return Polygon(h);
}

namespace {

// Oriented edge vectors at p for part P: if p is a vertex, the two edges
// leaving p; if p lies in the interior of an edge, both directions of it.
std::vector<std::pair<Vec2, Vec2>> edges_at(const Polygon& P, const Vec2& p,
                                            bool& incident) {
  incident = false;
  std::vector<std::pair<Vec2, Vec2>> out;  // (e_plus, e_minus), away from p
  size_t n = P.size();
  for (size_t i = 0; i < n; ++i) {
    if (P[i] == p) {
      Vec2 ep = P[i + 1] - P[i];
      Vec2 em = P[(i + n - 1) % n] - P[i];
      out.push_back({ep, em});
      incident = true;
      return out;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = P[i], b = P[i + 1];
    if (cross(b - a, p - a).is_zero() && dot(a - p, b - p).sign() < 0) {
      out.push_back({b - p, a - p});
      incident = true;
      return out;
    }
  }
  return out;
}

}  // namespace

std::optional<Vec2> uncovered_point(const Polygon& Q,
                                    const std::vector<Polygon>& parts) {
  // candidate heights: blends between consecutive distinct vertex heights
  std::vector<QPhi> ys;
  for (const auto& p : Q.v) ys.push_back(p.y);
  for (const auto& P : parts)
    for (const auto& p : P.v) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end(), [](const QPhi& a, const QPhi& b) { return a < b; });
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  Vec2 qlo, qhi;
  Q.bounding_box(qlo, qhi);
  for (size_t i = 0; i + 1 < ys.size(); ++i) {
    if (ys[i + 1] <= qlo.y || qhi.y <= ys[i]) continue;
    QPhi h = golden_blend(ys[i], ys[i + 1]);
    // x-extent of Q at height h
    std::optional<QPhi> xq_lo, xq_hi;
    size_t n = Q.size();
    for (size_t e = 0; e < n; ++e) {
      const Vec2 &a = Q[e], &b = Q[e + 1];
      int sa = (a.y - h).sign(), sb = (b.y - h).sign();
      if (sa * sb >= 0) continue;
      QPhi x = a.x + ((h - a.y) / (b.y - a.y)) * (b.x - a.x);
      if (!xq_lo || x < *xq_lo) xq_lo = x;
      if (!xq_hi || *xq_hi < x) xq_hi = x;
    }
    if (!xq_lo || !(*xq_lo < *xq_hi)) continue;
    // covered x-intervals from the parts
    std::vector<std::pair<QPhi, QPhi>> iv;
    for (const auto& P : parts) {
      std::optional<QPhi> lo, hi;
      size_t m = P.size();
      for (size_t e = 0; e < m; ++e) {
        const Vec2 &a = P[e], &b = P[e + 1];
        int sa = (a.y - h).sign(), sb = (b.y - h).sign();
        if (sa == 0 && sb == 0) {  // horizontal edge on the line
          if (!lo || a.x < *lo) lo = a.x;
          if (!hi || *hi < a.x) hi = a.x;
          if (!lo || b.x < *lo) lo = b.x;
          if (!hi || *hi < b.x) hi = b.x;
          continue;
        }
        if (sa * sb > 0) continue;
        QPhi x = sa == 0 ? a.x
                         : (sb == 0 ? b.x
                                    : a.x + ((h - a.y) / (b.y - a.y)) * (b.x - a.x));
        if (!lo || x < *lo) lo = x;
        if (!hi || *hi < x) hi = x;
      }
      if (lo && hi && *lo < *hi) iv.push_back({*lo, *hi});
    }
    std::sort(iv.begin(), iv.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    QPhi cur = *xq_lo;
    for (const auto& [lo, hi] : iv) {
      if (cur < lo && cur < *xq_hi) {
        QPhi gap_hi = lo < *xq_hi ? lo : *xq_hi;
        return Vec2(golden_blend(cur, gap_hi), h);
      }
      if (cur < hi) cur = hi;
    }
    if (cur < *xq_hi) return Vec2(golden_blend(cur, *xq_hi), h);
  }
  return std::nullopt;
}

CoverReport verify_covering_2d(const Polygon& Q, const std::vector<Polygon>& parts,
                               const std::string& mechanism, bool check_area) {
  CoverReport rep;
  rep.parts = parts.size();
  rep.mechanism = mechanism;

  Vec2 qlo, qhi;
  Q.bounding_box(qlo, qhi);
  std::vector<Vec2> plo(parts.size()), phi(parts.size());
  std::vector<char> touches(parts.size(), 0);
  for (size_t k = 0; k < parts.size(); ++k) {
    parts[k].bounding_box(plo[k], phi[k]);
    touches[k] = !(phi[k].x <= qlo.x || qhi.x <= plo[k].x || phi[k].y <= qlo.y ||
                   qhi.y <= plo[k].y);
  }

  // every part must meet Q
  for (size_t k = 0; k < parts.size(); ++k) {
    if (!touches[k] || !parts[k].intersect(Q)) {
      rep.failures.push_back({"precondition: part misses Q", parts[k][0], int(k)});
      return rep;
    }
  }

  // spanning-edge elimination: collect extra pseudo-vertices per part
  std::vector<std::vector<Vec2>> extra(parts.size());
  for (size_t k = 0; k < parts.size(); ++k) {
    const Polygon& P = parts[k];
    size_t n = P.size();
    for (size_t i = 0; i < n; ++i) {
      Vec2 a = P[i], b = P[i + 1];
      bool a_in = Q.membership(a) == Where::Interior;
      bool b_in = Q.membership(b) == Where::Interior;
      if (a_in || b_in) continue;
      // does the open edge meet the interior of Q?  clip [a,b] by Q
      QPhi t0 = QPhi::integer(0), t1 = QPhi::integer(1);
      bool empty = false;
      size_t m = Q.size();
      for (size_t j = 0; j < m && !empty; ++j) {
        Vec2 e = Q[j + 1] - Q[j];
        Vec2 nrm(-e.y, e.x);  // inward normal
        QPhi da = dot(nrm, a - Q[j]), db = dot(nrm, b - Q[j]);
        QPhi d = db - da;
        if (d.is_zero()) {
          if (da.sign() < 0) empty = true;
        } else if (d.sign() > 0) {
          QPhi t = (QPhi::integer(0) - da) / d;
          if (t0 < t) t0 = t;
        } else {
          QPhi t = (QPhi::integer(0) - da) / d;
          if (t < t1) t1 = t;
        }
        if (!(t0 < t1)) empty = true;
      }
      if (empty) continue;
      // the clipped open sub-segment lies in closure(Q); check a midpoint
      QPhi tm = golden_blend(t0, t1);
      Vec2 ins = a + tm * (b - a);
      if (Q.membership(ins) == Where::Interior) extra[k].push_back(ins);
    }
  }

  // matching property at every (pseudo-)vertex interior to Q
  auto check_vertex = [&](const Vec2& p, int home) -> bool {
    if (Q.membership(p) != Where::Interior) return true;
    std::vector<Vec2> plus, minus;
    for (size_t k = 0; k < parts.size(); ++k) {
      if (!touches[k]) continue;
      if (p.x < plo[k].x || phi[k].x < p.x || p.y < plo[k].y || phi[k].y < p.y)
        continue;
      bool inc = false;
      auto ee = edges_at(parts[k], p, inc);
      if (!inc) {
        if (parts[k].membership(p) == Where::Interior && int(k) != home &&
            home >= 0) {
          rep.failures.push_back({"overlap-witness", p, int(k)});
          return false;
        }
        continue;
      }
      for (auto& [ep, em] : ee) {
        plus.push_back(ep);
        minus.push_back(em);
      }
    }
    for (const auto& em : minus) {
      int matches = 0;
      for (const auto& ep : plus)
        if (same_ray(em, ep)) ++matches;
      if (matches != 1) {
        rep.failures.push_back({"gap-witness: link of vertex not a circle", p, home});
        return false;
      }
    }
    return true;
  };

  for (size_t k = 0; k < parts.size(); ++k) {
    for (const auto& p : parts[k].v)
      if (!check_vertex(p, int(k))) return rep;
    for (const auto& p : extra[k])
      if (!check_vertex(p, int(k))) return rep;
  }

  if (check_area) {
    QPhi sum;
    for (const auto& P : parts) {
      auto c = P.intersect(Q);
      if (c) sum += c->area2();
    }
    if (sum != Q.area2()) {
      rep.failures.push_back({"area mismatch: " + (Q.area2() - sum).str(),
                              Q[0], -1});
      return rep;
    }
  }

  rep.covered = true;
  return rep;
}

}  // namespace kite
