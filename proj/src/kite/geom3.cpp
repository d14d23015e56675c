#include "geom3.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kite {

namespace {

// Primitive golden direction: clear denominators and divide out the
// integer content of the six coefficients.
Vec3 primitive(const Vec3& n) {
  i64 l = std::lcm(std::lcm(n.x.den, n.y.den), n.z.den);
  auto sc = [&](const QPhi& q) {
    return GoldenReal::checked(i128(q.num.a) * (l / q.den),
                               i128(q.num.b) * (l / q.den), "prim");
  };
  GoldenReal a = sc(n.x), b = sc(n.y), c = sc(n.z);
  i64 g = 0;
  for (i64 t : {a.a, a.b, b.a, b.b, c.a, c.b}) g = std::gcd(g, std::abs(t));
  if (g > 1) {
    a.a /= g; a.b /= g; b.a /= g; b.b /= g; c.a /= g; c.b /= g;
  }
  return Vec3(a, b, c);
}

struct PlaneKey {
  GoldenReal nx, ny, nz;
  QPhi off;
  bool operator<(const PlaneKey& o) const {
    auto t = [](const GoldenReal& g) { return std::pair<i64, i64>(g.a, g.b); };
    if (t(nx) != t(o.nx)) return t(nx) < t(o.nx);
    if (t(ny) != t(o.ny)) return t(ny) < t(o.ny);
    if (t(nz) != t(o.nz)) return t(nz) < t(o.nz);
    if (off != o.off) return off < o.off;
    return false;
  }
};

}  // namespace

void Polyhedron::build_faces() {
  size_t n = v.size();
  if (n < 4) throw DegenerateInput("fewer than 4 vertices");

  // Raw face enumeration: planes spanned by vertex triples that support
  // the whole vertex set.
  std::set<PlaneKey> seen;
  std::vector<std::pair<Vec3, QPhi>> planes;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec3 nr = cross(v[j] - v[i], v[k] - v[i]);
        if (nr.x.is_zero() && nr.y.is_zero() && nr.z.is_zero()) continue;
        nr = primitive(nr);
        QPhi c = dot(nr, v[i]);
        bool above = false, below = false;
        for (size_t m = 0; m < n && !(above && below); ++m) {
          int s = (dot(nr, v[m]) - c).sign();
          if (s > 0) above = true;
          if (s < 0) below = true;
        }
        if (above && below) continue;
        if (above) {  // outward is -nr
          nr = Vec3(QPhi::integer(0) - nr.x, QPhi::integer(0) - nr.y,
                    QPhi::integer(0) - nr.z);
          c = QPhi::integer(0) - c;
        }
        PlaneKey key{nr.x.golden(), nr.y.golden(), nr.z.golden(), c};
        if (seen.insert(key).second) planes.push_back({nr, c});
      }
  if (planes.empty()) throw DegenerateInput("coplanar vertex set");
  Polyhedron built = from_planes(v, planes);
  if (built.v.size() != n) throw DegenerateInput("non-extreme vertex");
  *this = std::move(built);
}

Where Polyhedron::membership(const Vec3& p) const {
  bool boundary = false;
  for (const auto& f : faces) {
    int s = (dot(f.normal, p) - f.offset).sign();
    if (s > 0) return Where::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Where::Boundary : Where::Interior;
}

Vec3 Polyhedron::interior_point() const {
  Vec3 w = v[0];
  for (size_t i = 1; i < v.size(); ++i)
    w = Vec3(golden_blend(w.x, v[i].x), golden_blend(w.y, v[i].y),
             golden_blend(w.z, v[i].z));
  return w;
}

Vec3 Polyhedron::strict_convexity_witness(int i) const {
  // Sum of outward normals of the incident faces supports strictly at a
  // genuine vertex; verify and fall back to the small golden search.
  Vec3 wsum(QPhi::integer(0), QPhi::integer(0), QPhi::integer(0));
  for (const auto& f : faces)
    if (std::find(f.cycle.begin(), f.cycle.end(), i) != f.cycle.end())
      wsum = wsum + f.normal;
  auto works = [&](const Vec3& W) {
    QPhi me = dot(W, v[i]);
    for (size_t j = 0; j < v.size(); ++j)
      if (int(j) != i && (dot(W, v[j]) - me).sign() >= 0) return false;
    return true;
  };
  if (works(wsum)) return wsum;
  for (i64 a = -2; a <= 2; ++a)
    for (i64 b = -2; b <= 2; ++b)
      for (i64 c = -2; c <= 2; ++c)
        for (i64 d = -2; d <= 2; ++d)
          for (i64 e = -2; e <= 2; ++e)
            for (i64 f2 = -2; f2 <= 2; ++f2) {
              Vec3 W(gr(a, b), gr(c, d), gr(e, f2));
              if (works(W)) return W;
            }
  throw NoWitnessFound();
}

bool Polyhedron::strictly_convex() const {
  try {
    for (size_t i = 0; i < v.size(); ++i) (void)strict_convexity_witness(int(i));
  } catch (const NoWitnessFound&) {
    return false;
  }
  return true;
}

bool Polyhedron::fibered(std::string* why) const {
  for (auto [i, j] : edges) {
    GoldenReal dz;
    try {
      dz = (v[j].z - v[i].z).golden();
    } catch (const NotDivisible&) {
      if (why) *why = "non-golden vertex";
      return false;
    }
    if (dz.is_zero()) continue;
    try {
      GoldenReal x1 = v[i].x.golden(), x2 = v[j].x.golden();
      GoldenReal y1 = v[i].y.golden(), y2 = v[j].y.golden();
      GoldenReal z1 = v[i].z.golden(), z2 = v[j].z.golden();
      (void)div_exact(x2 - x1, dz);
      (void)div_exact(y2 - y1, dz);
      (void)div_exact(x2 * z1 - x1 * z2, dz);
      (void)div_exact(y2 * z1 - y1 * z2, dz);
    } catch (const NotDivisible&) {
      if (why) *why = "edge " + std::to_string(i) + "-" + std::to_string(j);
      return false;
    }
  }
  return true;
}

Polygon Polyhedron::slice_at_height(const QPhi& h) const {
  for (const auto& p : v)
    if (p.z == h) throw VertexOnPlane();
  // crossing edges, ordered so consecutive ones share a face
  std::map<std::pair<int, int>, Vec2> hit;
  for (auto e : edges) {
    const Vec3 &a = v[e.first], &b = v[e.second];
    int sa = (a.z - h).sign(), sb = (b.z - h).sign();
    if (sa * sb >= 0) continue;
    QPhi t = (h - a.z) / (b.z - a.z);
    hit[e] = Vec2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
  }
  if (hit.size() < 3) throw VertexOnPlane();
  // edge -> faces map
  auto faces_of = [&](std::pair<int, int> e) {
    std::vector<int> out;
    for (size_t f = 0; f < faces.size(); ++f) {
      const auto& c = faces[f].cycle;
      size_t m = c.size();
      for (size_t i = 0; i < m; ++i) {
        int a = c[i], b = c[(i + 1) % m];
        if (std::min(a, b) == e.first && std::max(a, b) == e.second) {
          out.push_back(int(f));
          break;
        }
      }
    }
    return out;
  };
  std::map<std::pair<int, int>, std::vector<int>> ef;
  for (auto& [e, p] : hit) ef[e] = faces_of(e);
  std::vector<Vec2> cyc;
  auto cur = hit.begin()->first;
  int via = ef[cur][0];
  for (size_t steps = 0; steps < hit.size(); ++steps) {
    cyc.push_back(hit[cur]);
    // move to the other crossing edge on face `via`... then flip face
    std::pair<int, int> nxt{-1, -1};
    for (auto& [e, fs] : ef) {
      if (e == cur) continue;
      if (std::find(fs.begin(), fs.end(), via) != fs.end()) {
        nxt = e;
        break;
      }
    }
    if (nxt.first < 0) throw DegenerateInput("slice walk failed");
    int nvia = ef[nxt][0] == via ? ef[nxt][1] : ef[nxt][0];
    cur = nxt;
    via = nvia;
  }
  Polygon poly(cyc);
  if (poly.area2().sign() < 0) std::reverse(poly.v.begin(), poly.v.end());
  return poly;
}

Polyhedron Polyhedron::from_planes(std::vector<Vec3> verts,
                                   const std::vector<std::pair<Vec3, QPhi>>& planes) {
  std::sort(verts.begin(), verts.end(),
            [](const Vec3& a, const Vec3& b) { return a.lex_less(b); });
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Polyhedron out;
  out.v = std::move(verts);
  size_t n = out.v.size();
  if (n < 4) throw DegenerateInput("fewer than 4 vertices");
  for (const auto& [nr, c] : planes) {
    std::vector<int> inc;
    bool supports = true;
    for (size_t m = 0; m < n; ++m) {
      int s = (dot(nr, out.v[m]) - c).sign();
      if (s > 0) { supports = false; break; }
      if (s == 0) inc.push_back(int(m));
    }
    if (!supports || inc.size() < 3) continue;
    // skip duplicates (same incident set already recorded)
    bool dup = false;
    for (const auto& f : out.faces) {
      if (f.cycle.size() == inc.size()) {
        std::vector<int> a = f.cycle, b = inc;
        std::sort(a.begin(), a.end());
        if (a == b) { dup = true; break; }
      }
    }
    if (dup) continue;
    Vec3 u = out.v[inc[1]] - out.v[inc[0]];
    Vec3 w = cross(nr, u);
    std::vector<Vec2> proj;
    for (int idx : inc)
      proj.push_back(
          Vec2(dot(u, out.v[idx] - out.v[inc[0]]), dot(w, out.v[idx] - out.v[inc[0]])));
    Polygon hull = ccw_hull(proj);
    if (hull.size() < 3) continue;  // plane meets P in an edge or vertex only
    Face f;
    f.normal = nr;
    f.offset = c;
    // non-hull incident points are non-extreme and get dropped below
    for (const auto& p : hull.v)
      for (size_t t = 0; t < inc.size(); ++t)
        if (proj[t] == p) { f.cycle.push_back(inc[t]); break; }
    if (f.cycle.size() != hull.size()) throw DegenerateInput("face ordering");
    out.faces.push_back(std::move(f));
  }
  // drop vertices that ended up extreme in no face
  std::vector<char> used(n, 0);
  for (const auto& f : out.faces)
    for (int i : f.cycle) used[i] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    std::vector<Vec3> nv;
    std::vector<int> remap(n, -1);
    for (size_t i = 0; i < n; ++i)
      if (used[i]) {
        remap[i] = int(nv.size());
        nv.push_back(out.v[i]);
      }
    out.v = std::move(nv);
    for (auto& f : out.faces)
      for (auto& i : f.cycle) i = remap[i];
  }
  std::map<std::pair<int, int>, int> count;
  for (const auto& f : out.faces) {
    size_t m = f.cycle.size();
    for (size_t i = 0; i < m; ++i) {
      int a = f.cycle[i], b = f.cycle[(i + 1) % m];
      count[{std::min(a, b), std::max(a, b)}]++;
    }
  }
  for (auto& [e, cnt] : count) {
    if (cnt != 2) throw DegenerateInput("edge not in two faces");
    out.edges.push_back(e);
  }
  return out;
}

std::optional<Polyhedron> Polyhedron::clip_halfspace(const Vec3& n,
                                                     const QPhi& c) const {
  // keep n.p <= c
  std::vector<Vec3> keep;
  std::vector<int> sgn(v.size());
  bool any_out = false, any_in = false;
  for (size_t i = 0; i < v.size(); ++i) {
    sgn[i] = (dot(n, v[i]) - c).sign();
    if (sgn[i] > 0) any_out = true;
    else {
      if (sgn[i] < 0) any_in = true;
      keep.push_back(v[i]);
    }
  }
  if (!any_out) return *this;
  if (!any_in) return std::nullopt;
  for (auto [i, j] : edges) {
    if (sgn[i] * sgn[j] < 0) {
      QPhi t = (c - dot(n, v[i])) / dot(n, v[j] - v[i]);
      keep.push_back(v[i] + t * (v[j] - v[i]));
    }
  }
  if (keep.size() < 4) return std::nullopt;
  // faces of the result lie on old face planes or on the cut plane
  std::vector<std::pair<Vec3, QPhi>> planes;
  for (const auto& f : faces) planes.push_back({f.normal, f.offset});
  planes.push_back({n, c});
  try {
    Polyhedron out = from_planes(std::move(keep), planes);
    if (out.volume6().sign() <= 0) return std::nullopt;
    return out;
  } catch (const DegenerateInput&) {
    return std::nullopt;
  }
}

Polyhedron Polyhedron::translated(const Vec3& t) const {
  Polyhedron out = *this;
  for (auto& p : out.v) p = p + t;
  for (auto& f : out.faces) f.offset = f.offset + dot(f.normal, t);
  return out;
}

QPhi Polyhedron::volume6() const {
  QPhi s;
  const Vec3& o = v[0];
  for (const auto& f : faces) {
    for (size_t i = 1; i + 1 < f.cycle.size(); ++i) {
      Vec3 a = v[f.cycle[0]] - o;
      Vec3 b = v[f.cycle[i]] - o;
      Vec3 c = v[f.cycle[i + 1]] - o;
      s += dot(a, cross(b, c));
    }
  }
  return s;
}

QPhi Polyhedron::zmin() const {
  QPhi m = v[0].z;
  for (const auto& p : v)
    if (p.z < m) m = p.z;
  return m;
}
QPhi Polyhedron::zmax() const {
  QPhi m = v[0].z;
  for (const auto& p : v)
    if (m < p.z) m = p.z;
  return m;
}

void Polyhedron::bounding_box(Vec3& lo, Vec3& hi) const {
  lo = hi = v[0];
  for (const auto& p : v) {
    if (p.x < lo.x) lo.x = p.x;
    if (p.y < lo.y) lo.y = p.y;
    if (p.z < lo.z) lo.z = p.z;
    if (hi.x < p.x) hi.x = p.x;
    if (hi.y < p.y) hi.y = p.y;
    if (hi.z < p.z) hi.z = p.z;
  }
}

Polyhedron Polyhedron::canonical() const {
  Polyhedron out = *this;
  std::sort(out.v.begin(), out.v.end(),
            [](const Vec3& a, const Vec3& b) { return a.lex_less(b); });
  return out;
}

bool Polyhedron::same_set(const Polyhedron& o) const {
  if (v.size() != o.v.size()) return false;
  auto a = canonical(), b = o.canonical();
  return a.v == b.v;
}

std::optional<Vec3> Polyhedron::separation_witness(const Polyhedron& o) const {
  auto try_w = [&](const Vec3& W) -> bool {
    if (W.x.is_zero() && W.y.is_zero() && W.z.is_zero()) return false;
    QPhi mymax = dot(W, v[0]);
    for (const auto& p : v) {
      QPhi d = dot(W, p);
      if (mymax < d) mymax = d;
    }
    for (const auto& p : o.v)
      if ((dot(W, p) - mymax).sign() < 0) return false;
    return true;
  };
  // search among cross products of edge pairs, in both orientations
  for (auto [i, j] : edges)
    for (auto [k, l] : o.edges) {
      Vec3 W = cross(v[j] - v[i], o.v[l] - o.v[k]);
      if (W.x.is_zero() && W.y.is_zero() && W.z.is_zero()) continue;
      W = primitive(W);
      if (try_w(W)) return W;
      Vec3 Wn(QPhi::integer(0) - W.x, QPhi::integer(0) - W.y,
              QPhi::integer(0) - W.z);
      if (try_w(Wn)) return Wn;
    }
  // face normals too (cross products miss face-to-face contacts)
  for (const auto& f : faces)
    if (try_w(f.normal)) return f.normal;
  for (const auto& f : o.faces) {
    Vec3 Wn(QPhi::integer(0) - f.normal.x, QPhi::integer(0) - f.normal.y,
            QPhi::integer(0) - f.normal.z);
    if (try_w(Wn)) return Wn;
  }
  return std::nullopt;
}

bool Polyhedron::disjoint_interior(const Polyhedron& o) const {
  return separation_witness(o).has_value();
}

PartitionReport verify_partition_3d(const Polyhedron& Q,
                                    const std::vector<const Polyhedron*>& parts,
                                    const std::string& mechanism,
                                    bool check_volume) {
  PartitionReport rep;
  if (check_volume) {
    QPhi total;
    for (auto* p : parts) total += p->volume6();
    if (total != Q.volume6()) {
      rep.failure = "volume mismatch: " + (Q.volume6() - total).str();
      return rep;
    }
  }
  // gather heights
  std::vector<QPhi> hs;
  for (const auto& p : Q.v) hs.push_back(p.z);
  for (auto* pp : parts)
    for (const auto& p : pp->v) hs.push_back(p.z);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  QPhi qlo = Q.zmin(), qhi = Q.zmax();

  for (size_t i = 0; i + 1 < hs.size(); ++i) {
    if (hs[i + 1] <= qlo || qhi <= hs[i]) continue;
    QPhi h = golden_blend(hs[i], hs[i + 1]);
    Polygon qs = Q.slice_at_height(h);
    std::vector<Polygon> ps;
    for (auto* pp : parts) {
      if (pp->zmin() < h && h < pp->zmax()) ps.push_back(pp->slice_at_height(h));
    }
    CoverReport cov = verify_covering_2d(qs, ps, mechanism, true);
    ++rep.slices;
    if (!cov.covered) {
      rep.failure = "slice failure";
      rep.failure_height = h;
      rep.failures = cov.failures;
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace kite
