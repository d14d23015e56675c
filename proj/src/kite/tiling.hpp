#pragma once

#include <optional>

#include "geom2.hpp"

// The fundamental triangle T, its self-similar kite-and-octagon tiling,
// the ten horizontal-adapted maps R_ij^{+-}, and renormalization sets.

namespace kite {
namespace tiling {

struct OutOfDomain : std::runtime_error {
  OutOfDomain() : std::runtime_error("point outside the map's triangle") {}
};

// Axis-aligned golden similarity (x,y) -> (sx * x + cx, sy * y + cy) with
// |sx| = sy; reflections only in x, so the horizontal foliation survives.
struct AffMap {
  QPhi sx, cx, sy, cy;
  Vec2 operator()(const Vec2& p) const { return {sx * p.x + cx, sy * p.y + cy}; }
  Polygon operator()(const Polygon& P) const;
  AffMap then(const AffMap& g) const {  // g o this
    return {g.sx * sx, g.sx * cx + g.cx, g.sy * sy, g.sy * cy + g.cy};
  }
  AffMap inverse() const {
    return {QPhi(kOne) / sx, (QPhi() - cx) / sx, QPhi(kOne) / sy,
            (QPhi() - cy) / sy};
  }
  bool orientation_reversing() const { return sx.sign() < 0; }
};

// Fundamental triangle T+ with vertices (0,1), (phi^-3,0), (phi^-1,phi).
Polygon T_plus();
Polygon T_minus();  // eta(T+), eta(x,y) = (2-x, y)
Vec2 eta(const Vec2& p);

// The Penrose kite K.
Polygon kite_K();
// K0 = phi^-3 contraction of K at the top vertex of T; J0 the big octagon.
Polygon K0();
Polygon J0();

// The five subdivision maps T+ -> T_ij+ for ij in {11,12,31,32,41}.
extern const char* kSubLabels[5];
AffMap sub_map(int k);

// The ten maps: R_ij^sigma for ij in {11,12,31,32,41}, sigma = +1 / -1.
// apply_Rij checks the domain triangle and applies the labeled map.
struct TenMap {
  const char* label;
  int ij;       // 0..4 in kSubLabels order
  int sigma;    // +1 or -1
  AffMap map;
  Polygon domain;  // T_ij^sigma
  int height_interval;  // acts on heights as R_i on I_i
};
const std::vector<TenMap>& ten_maps();
Vec2 apply_Rij(const Vec2& p, int ij, int sigma);

struct Tile {
  enum Kind { Kite, Octagon } kind;
  int depth;
  Polygon poly;
};

// All tiles of depth <= depth, deduplicated by exact vertex set.
std::vector<Tile> build_tiling(int depth);

// Triangle instances (images of T+) at exactly the given level.
std::vector<std::pair<AffMap, Polygon>> instances(int level);

// Horizontal slice of the n-th triangle approximation S_n at height y:
// a list of disjoint golden intervals, merged and sorted.
std::vector<std::pair<QPhi, QPhi>> gasket_intervals(const QPhi& y, int n);

// The renormalization set of p up to the given chain depth.
std::vector<Vec2> upsilon(const Vec2& p, int depth);

}  // namespace tiling
}  // namespace kite
