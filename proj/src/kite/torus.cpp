#include "torus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torus_data.hpp"

namespace kite {
namespace torus {

GoldenReal A_const() { return kPhiInv3; }

int FastPiece::membership(const GPoint& p) const {
  if (p[0] < xlo || xhi < p[0] || p[1] < ylo || yhi < p[1] || p[2] < zlo ||
      zhi < p[2])
    return -1;
  bool boundary = false;
  for (const auto& f : faces) {
    GoldenReal d = f.nx * p[0] + f.ny * p[1] + f.nz * p[2] - f.off;
    int s = d.sign();
    if (s > 0) return -1;
    if (s == 0) boundary = true;
  }
  return boundary ? 0 : 1;
}

namespace {

std::pair<i64, i64> lookup_pair(int j) {
  if (j <= 21) return {0, 0};
  if (j <= 29) return {1, 0};
  if (j <= 32) return {1, 1};
  if (j <= 40) return {0, 1};
  if (j <= 42) return {-1, 1};
  if (j <= 50) return {-1, 0};
  if (j <= 53) return {-1, -1};
  if (j <= 61) return {0, -1};
  return {1, -1};
}

// Printed transitions for a = 22..42.
const std::vector<std::vector<int>> kPrintedTransitions = {
    {61, 23, 56},                          // 22
    {63, 58, 29, 32, 26, 24},              // 23
    {25, 53, 37},                          // 24
    {31, 35, 28, 27, 23, 62, 61},          // 25
    {25},                                  // 26
    {63},                                  // 27
    {25},                                  // 28
    {23},                                  // 29
    {23},                                  // 30
    {32},                                  // 31
    {25, 30, 47, 36, 34, 37, 42, 38, 39},  // 32
    {32},                                  // 33
    {46, 26, 32},                          // 34
    {44, 40, 41, 48},                      // 35
    {39},                                  // 36
    {32},                                  // 37
    {32, 33},                              // 38
    {32},                                  // 39
    {48, 23},                              // 40
    {43, 32, 46},                          // 41
    {44, 40, 41},                          // 42
};

int involute_index(int j) {
  if (j >= 22 && j <= 42) return j + 21;
  if (j >= 43) return j - 21;
  return -1;  // inactive: image determined geometrically
}

}  // namespace

ExchangeSystem::ExchangeSystem() {
  // build the 43 printed pieces (doubled), then the 21 involution images
  for (const auto& rows : kPieceVertices) {
    std::vector<Vec3> verts;
    for (const auto& r : rows)
      verts.push_back(Vec3(GoldenReal(2 * r[0], 2 * r[1]),
                           GoldenReal(2 * r[2], 2 * r[3]),
                           GoldenReal(2 * r[4], 2 * r[5])));
    pieces_.push_back(Polyhedron(std::move(verts)));
  }
  for (int j = 22; j <= 42; ++j) {
    std::vector<Vec3> verts;
    for (const auto& p : pieces_[j].v)
      verts.push_back(Vec3(QPhi(gr(4, 0)) - p.x, QPhi(gr(4, 0)) - p.y,
                           QPhi(gr(4, 0)) - p.z));
    pieces_.push_back(Polyhedron(std::move(verts)));
  }

  for (int j = 0; j < 64; ++j) {
    auto [m, n] = lookup_pair(j);
    // psi-hat displacement ((-2m+10n) + (2m-6n) phi, -2n + 2n phi, 0), doubled
    trans_.push_back(gp(GoldenReal(2 * (-2 * m + 10 * n), 2 * (2 * m - 6 * n)),
                        GoldenReal(2 * (-2 * n), 2 * (2 * n)), GoldenReal(0, 0)));
  }

  for (const auto& P : pieces_) {
    FastPiece fp;
    for (const auto& f : P.faces) {
      fp.faces.push_back({f.normal.x.golden(), f.normal.y.golden(),
                          f.normal.z.golden(), f.offset.golden()});
    }
    Vec3 lo, hi;
    P.bounding_box(lo, hi);
    fp.xlo = lo.x.golden();
    fp.xhi = hi.x.golden();
    fp.ylo = lo.y.golden();
    fp.yhi = hi.y.golden();
    fp.zlo = lo.z.golden();
    fp.zhi = hi.z.golden();
    fast_.push_back(std::move(fp));
  }

  // full transition table
  table_.assign(64, {});
  for (int a = 0; a <= 21; ++a) table_[a] = {a};
  for (int a = 22; a <= 42; ++a) table_[a] = kPrintedTransitions[a - 22];
  for (int a = 22; a <= 42; ++a)
    for (int b : kPrintedTransitions[a - 22])
      table_[involute_index(a)].push_back(involute_index(b));
}

const ExchangeSystem& ExchangeSystem::instance() {
  static ExchangeSystem sys;
  return sys;
}

std::pair<i64, i64> ExchangeSystem::lookup(int j) const { return lookup_pair(j); }

Polyhedron ExchangeSystem::fundamental_domain() const {
  // doubled: y,z in [0,4], x in [Ay - 2A, Ay - 2A + 4]; the parallelogram
  // R of the paper lives in the (x,y)-plane
  GoldenReal A = A_const();
  std::vector<Vec3> verts;
  for (int zi = 0; zi <= 1; ++zi)
    for (int yi = 0; yi <= 1; ++yi)
      for (int xi = 0; xi <= 1; ++xi) {
        GoldenReal z(4 * zi, 0), y(4 * yi, 0);
        GoldenReal x = A * y - kTwo * A + GoldenReal(4 * xi, 0);
        verts.push_back(Vec3(x, y, z));
      }
  return Polyhedron(verts);
}

GPoint ExchangeSystem::reduce(GPoint p) const {
  const GoldenReal four(4, 0);
  for (int c = 1; c <= 2; ++c) {
    while (p[c].sign() < 0) p[c] += four;
    while ((p[c] - four).sign() >= 0) p[c] -= four;
  }
  GoldenReal A = A_const();
  GoldenReal xlo = A * p[1] - kTwo * A;
  while ((p[0] - xlo).sign() < 0) p[0] += four;
  while ((p[0] - xlo - four).sign() >= 0) p[0] -= four;
  return p;
}

int ExchangeSystem::locate(const GPoint& p) const {
  std::vector<int> touching;
  for (int j = 0; j < 64; ++j) {
    int m = fast_[j].membership(p);
    if (m == 1) return j;
    if (m == 0) touching.push_back(j);
  }
  throw OnBoundary(touching);
}

std::pair<GPoint, int> ExchangeSystem::step(const GPoint& p) const {
  int j = locate(p);
  return {reduce(p + trans_[j]), j};
}

std::pair<GPoint, int> ExchangeSystem::step_back(const GPoint& p) const {
  std::vector<int> touching;
  for (int j = 0; j < 64; ++j) {
    GPoint q = reduce(p - trans_[j]);
    int m = fast_[j].membership(q);
    if (m == 1) return {q, j};
    if (m == 0) touching.push_back(j);
  }
  throw OnBoundary(touching);
}

GPoint ExchangeSystem::theta(GoldenReal x, GoldenReal y) {
  // doubled: (2 + 2x/phi, 1 + (x - y), 2y), with 1/phi = phi - 1
  GoldenReal tx = kTwo + kTwo * (x * kPhiInv);
  GoldenReal ty = kOne + x - y;
  GoldenReal tz = kTwo * y;
  return instance().reduce(gp(tx, ty, tz));
}

GPoint ExchangeSystem::involute(const GPoint& p) const {
  const GoldenReal four(4, 0);
  return reduce(gp(four - p[0], four - p[1], four - p[2]));
}

bool ExchangeSystem::table_allows(int a, int b) const {
  const auto& row = table_[a];
  return std::find(row.begin(), row.end(), b) != row.end();
}

std::vector<std::pair<int, int>> ExchangeSystem::computed_transitions() const {
  // a -> b iff interior points of P_a map into P_b: exact overlap of the
  // translated piece with lattice copies of P_b.
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < 64; ++a) {
    if (trans_[a][0].is_zero() && trans_[a][1].is_zero()) {
      out.push_back({a, a});
      continue;
    }
    Polyhedron moved = pieces_[a].translated(
        Vec3(QPhi(trans_[a][0]), QPhi(trans_[a][1]), QPhi(trans_[a][2])));
    Vec3 mlo, mhi;
    moved.bounding_box(mlo, mhi);
    for (int b = 0; b < 64; ++b) {
      Vec3 blo, bhi;
      pieces_[b].bounding_box(blo, bhi);
      bool hit = false;
      for (int sx = -2; sx <= 2 && !hit; ++sx)
        for (int sy = -2; sy <= 2 && !hit; ++sy) {
          QPhi dx(gr(4 * sx, 0)), dy(gr(4 * sy, 0));
          if (!(mlo.x < dx + bhi.x) || !(dx + blo.x < mhi.x)) continue;
          if (!(mlo.y < dy + bhi.y) || !(dy + blo.y < mhi.y)) continue;
          Polyhedron shifted =
              pieces_[b].translated(Vec3(dx, dy, QPhi::integer(0)));
          if (!moved.disjoint_interior(shifted)) hit = true;
        }
      if (hit) out.push_back({a, b});
    }
  }
  return out;
}

std::optional<std::vector<int>> ExchangeSystem::absorption_certificate() const {
  // Work modulo the involution, on indices 22..42; target set L.
  std::set<int> good = {23, 25, 32, 40, 41};
  auto reduce_idx = [](int b) { return b > 42 ? b - 21 : b; };
  std::vector<int> order;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a = 22; a <= 42; ++a) {
      if (good.count(a)) continue;
      bool all_good = true;
      for (int b : table_[a])
        if (!good.count(reduce_idx(b))) {
          all_good = false;
          break;
        }
      if (all_good) {
        good.insert(a);
        order.push_back(a);
        progress = true;
      }
    }
  }
  for (int a = 22; a <= 42; ++a)
    if (!good.count(a)) return std::nullopt;
  return order;
}

ExchangeSystem::Validation ExchangeSystem::validate() const {
  Validation v;
  for (int j = 0; j < 64; ++j) {
    if (!pieces_[j].strictly_convex()) {
      v.convex = false;
      v.detail = "piece " + std::to_string(j) + " not strictly convex";
      return v;
    }
    std::string why;
    if (!pieces_[j].fibered(&why)) {
      v.fibered = false;
      v.detail = "piece " + std::to_string(j) + ": " + why;
      return v;
    }
  }
  // the involution maps the inactive pieces among themselves
  for (int j = 0; j <= 21; ++j) {
    std::vector<Vec3> verts;
    for (const auto& p : pieces_[j].v)
      verts.push_back(Vec3(QPhi(gr(4, 0)) - p.x, QPhi(gr(4, 0)) - p.y,
                           QPhi(gr(4, 0)) - p.z));
    Polyhedron img(verts);
    bool found = false;
    for (int sx = -1; sx <= 1 && !found; ++sx)
      for (int sy = -1; sy <= 1 && !found; ++sy)
        for (int sz = -1; sz <= 1 && !found; ++sz) {
          Polyhedron sh = img.translated(Vec3(QPhi(gr(4 * sx, 0)),
                                              QPhi(gr(4 * sy, 0)),
                                              QPhi(gr(4 * sz, 0))));
          for (int k = 0; k <= 21 && !found; ++k)
            if (sh.same_set(pieces_[k])) found = true;
        }
    if (!found) {
      v.involution = false;
      v.detail = "inactive piece " + std::to_string(j) + " has no involution image";
      return v;
    }
  }
  return v;
}

GPoint theta_of(const std::pair<GoldenReal, GoldenReal>& p) {
  return ExchangeSystem::theta(p.first, p.second);
}

}  // namespace torus
}  // namespace kite
