#include "tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "circle.hpp"

namespace kite {
namespace tiling {

namespace {
QPhi q(i64 a, i64 b) { return QPhi(GoldenReal(a, b)); }
const QPhi kQTwo = q(2, 0);
}  // namespace

Polygon AffMap::operator()(const Polygon& P) const {
  std::vector<Vec2> out;
  for (const auto& p : P.v) out.push_back((*this)(p));
  Polygon poly(out);
  if (orientation_reversing()) std::reverse(poly.v.begin(), poly.v.end());
  return poly;
}

Vec2 eta(const Vec2& p) { return {kQTwo - p.x, p.y}; }

// --- exact tile data -------------------------------------------------------

Polygon T_plus() {
  // (0,1), (phi^-3, 0), (phi^-1, phi); ccw
  return Polygon({Vec2(q(0, 0), q(1, 0)), Vec2(q(-3, 2), q(0, 0)),
                  Vec2(q(-1, 1), q(0, 1))});
}

Polygon kite_K() {
  return Polygon({Vec2(q(-1, 0), q(0, 0)), Vec2(q(0, 0), q(-1, 0)),
                  Vec2(q(-3, 2), q(0, 0)), Vec2(q(0, 0), q(1, 0))});
}

Polygon K0() {
  // phi^-3 homothety at the top vertex (phi^-1, phi) applied to K
  Vec2 c(q(-1, 1), q(0, 1));
  QPhi r = q(-3, 2);
  std::vector<Vec2> out;
  for (const auto& p : kite_K().v) out.push_back(c + r * (p - c));
  return Polygon(out);
}

Polygon J0() {
  // D2-symmetric octagon solved from the three anchor vertices of the
  // construction; sides are parallel to the four kite-edge directions.
  return Polygon({
      Vec2(q(-3, 2), q(10, -6)),   // bottom
      Vec2(q(-11, 7), q(2, -1)),   // lower right
      Vec2(q(-19, 12), q(4, -2)),  // right
      Vec2(q(-11, 7), q(6, -3)),   // upper right
      Vec2(q(-3, 2), q(-2, 2)),    // top (anchor)
      Vec2(q(5, -3), q(6, -3)),    // upper left (anchor)
      Vec2(q(13, -8), q(4, -2)),   // left (anchor)
      Vec2(q(5, -3), q(2, -1)),    // lower left
  });
}

const char* kSubLabels[5] = {"11", "12", "31", "32", "41"};

AffMap sub_map(int k) {
  const QPhi r = q(-3, 2);  // phi^-3
  switch (k) {
    case 0:  // T -> T11: x -> (2phi-2 - x) phi^-3, y -> phi^-3 y
      return {QPhi() - r, q(-2, 2) * r, r, QPhi()};
    case 1:  // T -> T12: x -> (4-2phi + x) phi^-3
      return {r, q(4, -2) * r, r, QPhi()};
    case 2:  // T -> T31: homothety at (0,1)
      return {r, QPhi(), r, QPhi(kOne) - r};
    case 3:  // T -> T32: x -> (2 - x) phi^-3
      return {QPhi() - r, kQTwo * r, r, QPhi(kOne) - r};
    case 4:  // T -> T41: T12 translated by (10-6phi, 2phi-2)
      return {r, q(4, -2) * r + q(10, -6), r, q(-2, 2)};
  }
  throw std::logic_error("sub_map index");
}

namespace {

std::vector<TenMap> build_ten_maps() {
  Polygon T = T_plus();
  std::vector<TenMap> out;
  // R11+: T11+ -> T+ and R32+: T32+ -> T+ are the plain sub-map inverses;
  // R12+: T12+ -> T- and R31+: T31+ -> T- get post-composed with eta;
  // R41+ is the isometry carrying T41+ to T12+.
  int heights[5] = {1, 1, 3, 3, 4};
  bool flip[5] = {false, true, true, false, false};
  static std::string labels[10];
  for (int k = 0; k < 5; ++k) {
    AffMap fwd = sub_map(k).inverse();
    if (flip[k]) {
      // eta o fwd: x -> 2 - (sx x + cx)
      fwd = AffMap{QPhi() - fwd.sx, kQTwo - fwd.cx, fwd.sy, fwd.cy};
    }
    if (k == 4) {
      // translation T41+ -> T12+ by -(10-6phi, 2phi-2)
      fwd = AffMap{QPhi(kOne), q(-10, 6), QPhi(kOne), q(2, -2)};
    }
    Polygon dom = sub_map(k)(T);
    labels[k] = std::string("R") + kSubLabels[k] + "+";
    out.push_back({labels[k].c_str(), k, +1, fwd, dom, heights[k]});
  }
  // minus family: conjugate by eta: map = eta o R+ o eta
  for (int k = 0; k < 5; ++k) {
    const AffMap& f = out[k].map;
    // eta o f o eta (x,y) = (2 - (sx (2-x) + cx), sy y + cy)
    //                    = (sx x + 2 - 2 sx - cx, ...)
    AffMap m{f.sx, kQTwo - kQTwo * f.sx - f.cx, f.sy, f.cy};
    std::vector<Vec2> dv;
    for (const auto& p : out[k].domain.v) dv.push_back(eta(p));
    std::reverse(dv.begin(), dv.end());
    labels[5 + k] = std::string("R") + kSubLabels[k] + "-";
    out.push_back({labels[5 + k].c_str(), k, -1, m, Polygon(dv), out[k].height_interval});
  }
  return out;
}

}  // namespace

const std::vector<TenMap>& ten_maps() {
  static std::vector<TenMap> maps = build_ten_maps();
  return maps;
}

Vec2 apply_Rij(const Vec2& p, int ij, int sigma) {
  for (const auto& m : ten_maps()) {
    if (m.ij == ij && m.sigma == sigma) {
      if (m.domain.membership(p) == Where::Outside) throw OutOfDomain();
      return m.map(p);
    }
  }
  throw std::logic_error("apply_Rij label");
}

std::vector<std::pair<AffMap, Polygon>> instances(int level) {
  Polygon T = T_plus();
  AffMap id{QPhi(kOne), QPhi(), QPhi(kOne), QPhi()};
  std::vector<AffMap> cur{id};
  for (int l = 0; l < level; ++l) {
    std::vector<AffMap> next;
    for (const auto& g : cur)
      for (int k = 0; k < 5; ++k) next.push_back(sub_map(k).then(g));
    cur = std::move(next);
  }
  std::vector<std::pair<AffMap, Polygon>> out;
  for (const auto& g : cur) out.push_back({g, g(T)});
  return out;
}

std::vector<Tile> build_tiling(int depth) {
  std::vector<Tile> out;
  std::set<std::vector<std::array<std::pair<i64, i64>, 2>>> seen;
  auto key_of = [](const Polygon& P) {
    Polygon c = P.canonical();
    std::vector<std::array<std::pair<i64, i64>, 2>> key;
    for (const auto& p : c.v) {
      GoldenReal xd = p.x.doubled(), yd = p.y.doubled();
      key.push_back({std::pair<i64, i64>{xd.a, xd.b}, {yd.a, yd.b}});
    }
    return key;
  };
  Polygon k0 = K0(), j0 = J0();
  for (int d = 0; d <= depth; ++d) {
    for (const auto& [g, tri] : instances(d)) {
      for (int which = 0; which < 2; ++which) {
        Polygon img = g(which == 0 ? k0 : j0);
        if (seen.insert(key_of(img)).second)
          out.push_back({which == 0 ? Tile::Kite : Tile::Octagon, d, img});
      }
    }
  }
  return out;
}

std::vector<std::pair<QPhi, QPhi>> gasket_intervals(const QPhi& y, int n) {
  std::vector<std::pair<QPhi, QPhi>> cur;
  if (n == 0) {
    // x-extent of T at height y; T spans heights [0, phi]
    if (y.sign() < 0 || (y - q(0, 1)).sign() > 0) return cur;
    QPhi xr = q(-3, 2) * (QPhi(kOne) + y);  // right edge: x = phi^-3 (1+y)
    QPhi xl;
    if ((y - QPhi(kOne)).sign() <= 0)
      xl = q(-3, 2) * (QPhi(kOne) - y);  // lower-left edge: x = phi^-3 (1-y)
    else
      xl = y - QPhi(kOne);  // upper-left edge: y = x + 1
    cur.push_back({xl, xr});
    return cur;
  }
  // S_n slice = union over the five maps of the mapped S_{n-1} slices at
  // the pulled-back height
  for (int k = 0; k < 5; ++k) {
    AffMap m = sub_map(k);
    QPhi yhat = (y - m.cy) / m.sy;
    if (yhat.sign() < 0 || (yhat - q(0, 1)).sign() > 0) continue;
    for (auto& [a, b] : gasket_intervals(yhat, n - 1)) {
      QPhi xa = m.sx * a + m.cx, xb = m.sx * b + m.cx;
      if (xb < xa) std::swap(xa, xb);
      cur.push_back({xa, xb});
    }
  }
  std::sort(cur.begin(), cur.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<QPhi, QPhi>> merged;
  for (auto& iv : cur) {
    if (!merged.empty() && !(merged.back().second < iv.first)) {
      if (merged.back().second < iv.second) merged.back().second = iv.second;
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

std::vector<Vec2> upsilon(const Vec2& p, int depth) {
  // q ~ p iff some k-step chain image of q equals a k-step chain image of
  // p; both chains act on the common height in the same way, so everything
  // stays on p's horizontal line.
  auto key_of = [](const Vec2& v) {
    return std::array<std::pair<i64, i64>, 4>{
        std::pair<i64, i64>{v.x.num.a, v.x.num.b}, {v.x.den, 0},
        {v.y.num.a, v.y.num.b}, {v.y.den, 0}};
  };
  auto forward = [&](const std::vector<Vec2>& pts) {
    std::vector<Vec2> out;
    std::set<decltype(key_of(p))> seen;
    for (const auto& v : pts)
      for (const auto& m : ten_maps())
        if (m.domain.membership(v) != Where::Outside) {
          Vec2 w = m.map(v);
          if (seen.insert(key_of(w)).second) out.push_back(w);
        }
    return out;
  };
  // preimages restricted to the known height of the target level, so both
  // members of a pair always sit on the same horizontal line
  auto backward = [&](const std::vector<Vec2>& pts, const QPhi& h) {
    std::vector<Vec2> out;
    std::set<decltype(key_of(p))> seen;
    for (const auto& v : pts)
      for (const auto& m : ten_maps()) {
        Vec2 pre = m.map.inverse()(v);
        if (pre.y != h) continue;
        if (m.domain.membership(pre) != Where::Outside) {
          if (seen.insert(key_of(pre)).second) out.push_back(pre);
        }
      }
    return out;
  };
  std::set<decltype(key_of(p))> all_keys{key_of(p)};
  std::vector<Vec2> all{p};
  std::vector<Vec2> fwd{p};
  std::vector<QPhi> level_heights{p.y};
  for (int k = 1; k <= depth; ++k) {
    fwd = forward(fwd);
    if (fwd.empty()) break;
    level_heights.push_back(fwd[0].y);
    std::vector<Vec2> back = fwd;
    for (int j = k - 1; j >= 0; --j) back = backward(back, level_heights[j]);
    for (const auto& v : back)
      if (all_keys.insert(key_of(v)).second) all.push_back(v);
  }
  return all;
}

Polygon T_minus() {
  std::vector<Vec2> dv;
  for (const auto& p : T_plus().v) dv.push_back(eta(p));
  std::reverse(dv.begin(), dv.end());
  return Polygon(dv);
}

}  // namespace tiling
}  // namespace kite
