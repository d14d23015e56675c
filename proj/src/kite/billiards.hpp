#pragma once

#include <functional>
#include <optional>

#include "geom2.hpp"

// Planar dynamics: the outer billiards map on the Penrose kite, its square
// psi, the return map to the strip Sigma = R x [-2,2], the pinwheel map,
// and the exact return-cell construction used by the certificates.

namespace kite {
namespace billiards {

struct Singular : std::runtime_error {
  explicit Singular(const std::string& m) : std::runtime_error(m) {}
};
struct UndefinedOrbit : std::runtime_error {
  explicit UndefinedOrbit(const std::string& m) : std::runtime_error(m) {}
};
struct OnSingularLine : std::runtime_error {
  int stage;
  explicit OnSingularLine(int k)
      : std::runtime_error("point on singular line of strip " + std::to_string(k)),
        stage(k) {}
};

// Kite vertices (-1,0), (0,1), (0,-1), (A,0) with A = phi^-3.
const std::vector<Vec2>& kite_vertices();

// One outer-billiards step 2v - p; v is the unique supporting vertex with
// the kite right of the ray p -> v.  dir=+1 forward, dir=-1 inverse.
Vec2 outer_map(const Vec2& p, int dir = +1);
Vec2 square_map(const Vec2& p, int dir = +1);

// Which side of the wall K u B a strip point is on: +1 right, -1 left,
// 0 inside the wall or on its boundary.  B is the pair of triangles
// sharing the top and bottom kite vertices and reaching y = +-2.
int sigma_side(const Vec2& p);
const Polygon& top_triangle();
const Polygon& bottom_triangle();

struct ReturnStep {
  Vec2 point;        // the return image
  int psi_steps;     // number of psi (square map) steps taken
  GoldenReal n1, n2, n3;  // displacement (2 n1 A + 2 n2, 2 n3)
};

// First return of psi to the half of Sigma containing p; identity on the
// wall and on the boundary y = 2.  Budget of 10^4 psi steps.
ReturnStep return_map(const Vec2& p);

// ---- strips and the pinwheel map ----

struct StripPair {
  Vec2 normal;     // g(p) = dot(normal, p) + g0
  QPhi g0, lo, width;  // strip = { lo <= g < lo + width }
  Vec2 V;
  QPhi gV;         // g(p + V) - g(p), = +-width
};

// The four strip pairs (S0..S3) and zeta's strip (Sigma, (0,4)).
const std::vector<StripPair>& strip_pairs();
const StripPair& zeta_strip();

// E(p) = p + nV, the representative with g in [lo, lo+width); throws
// OnSingularLine(k) when g(p) == lo mod width.
Vec2 strip_map(const Vec2& p, const StripPair& sp, int k = -1);

// Pi = zeta o E8 o ... o E1 with E_i the strip maps of (S_i, V_i),
// S_{4+i} = S_i and S_4 = S_0.
Vec2 pinwheel_map(const Vec2& p);

// zeta: normalize y into (-2, 2].
Vec2 zeta(const Vec2& p);

// ---- exact return-cell construction -------------------------------------

// The polygon of points sharing p's itinerary up to and including the
// first return to p's half of Sigma, built by clipping half-planes along
// the exact orbit of p.  `both` additionally intersects with the backward
// return cell (symmetric return tile).
struct ReturnCell {
  Polygon poly;
  int steps = 0;             // psi steps to return
  Vec2 displacement;         // constant on the cell
  std::vector<int> itinerary;  // chosen kite vertex per psi' step
};
std::optional<ReturnCell> return_cell(const Vec2& p, int budget = 10000);
std::optional<ReturnCell> backward_return_cell(const Vec2& p, int budget = 10000);

// ---- certificate ----------------------------------------------------------

struct PinwheelCertificate {
  bool pass = false;
  int polygons = 0;
  std::vector<std::string> failures;
};

// Generates (or re-verifies) the full pinwheel certificate: the polygon
// list covering [-20,20] x [-2,2] together with K and the two special
// triangles, the per-polygon dynamical conditions, and Pi = Psi.
const std::vector<ReturnCell>& pinwheel_polygons();
PinwheelCertificate verify_pinwheel(bool corrupt_for_test = false);

// ---- arithmetic graph ----

struct ArithmeticGraph {
  GoldenReal y, xi;
  int window;
  // directed edges (m0,n0) -> (m1,n1); vertices with undefined orbits are
  // recorded as isolated
  std::vector<std::array<int, 4>> edges;
  std::vector<std::pair<int, int>> isolated;
};
ArithmeticGraph arithmetic_graph(GoldenReal y, GoldenReal xi, int window,
                                 int budget = 2000);

}  // namespace billiards
}  // namespace kite
