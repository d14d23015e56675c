#pragma once

#include <array>
#include <optional>

#include "geom3.hpp"

// The compactified system: the 3-torus (R/2Z)^3 with the 64-piece
// polyhedron exchange.  All torus coordinates are stored doubled (the
// global x2 scaling), so points are golden triples mod the lattice 4Z^3
// and the fundamental domain has volume 64 = 8 * 2^3.

namespace kite {
namespace torus {

struct OnBoundary : std::runtime_error {
  std::vector<int> incident;
  explicit OnBoundary(std::vector<int> inc)
      : std::runtime_error("torus point on piece boundary"), incident(std::move(inc)) {}
};
struct DataValidationFault : std::runtime_error {
  explicit DataValidationFault(const std::string& m) : std::runtime_error(m) {}
};

using GPoint = std::array<GoldenReal, 3>;  // doubled coordinates

inline GPoint gp(GoldenReal x, GoldenReal y, GoldenReal z) { return {x, y, z}; }
}  // namespace torus

// argument-dependent lookup for std::array<GoldenReal,3> finds kite::
inline torus::GPoint operator+(const torus::GPoint& a, const torus::GPoint& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline torus::GPoint operator-(const torus::GPoint& a, const torus::GPoint& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

namespace torus {

// Half-space representation of a piece for fast stepping.
struct FastPiece {
  struct F {
    GoldenReal nx, ny, nz, off;  // outward: n.p <= off inside
  };
  std::vector<F> faces;
  GoldenReal xlo, xhi, ylo, yhi, zlo, zhi;  // bounding box
  int membership(const GPoint& p) const;    // -1 out, 0 boundary, 1 interior
};

class ExchangeSystem {
 public:
  static const ExchangeSystem& instance();

  const Polyhedron& piece(int j) const { return pieces_[j]; }
  const GPoint& translation(int j) const { return trans_[j]; }
  std::pair<i64, i64> lookup(int j) const;  // the (m,n) pair of the table

  // Fundamental domain X (doubled): y,z in [0,4], x in [A z - 2A, ... + 4].
  Polyhedron fundamental_domain() const;
  GPoint reduce(GPoint p) const;

  // Index of the piece whose interior contains p; throws OnBoundary.
  int locate(const GPoint& p) const;
  // One exchange step: p + translation of its piece, reduced.
  std::pair<GPoint, int> step(const GPoint& p) const;
  std::pair<GPoint, int> step_back(const GPoint& p) const;

  // The embedding Theta (doubled output), planar input in Z[phi]^2.
  static GPoint theta(GoldenReal x, GoldenReal y);

  // involution I(p) = (2,2,2) - p
  GPoint involute(const GPoint& p) const;

  // allowed transitions a -> b (64x64), from the printed table
  bool table_allows(int a, int b) const;
  // exact transition relation computed from piece overlaps
  std::vector<std::pair<int, int>> computed_transitions() const;
  // mechanical replay of the absorption argument; returns the certified
  // order of elimination or nullopt on failure
  std::optional<std::vector<int>> absorption_certificate() const;

  struct Validation {
    bool convex = true, fibered = true, involution = true;
    std::string detail;
  };
  Validation validate() const;

 private:
  ExchangeSystem();
  std::vector<Polyhedron> pieces_;   // 64, doubled coordinates
  std::vector<FastPiece> fast_;
  std::vector<GPoint> trans_;        // doubled translation vectors
  std::vector<std::vector<int>> table_;  // transition table, full 64
};

// doubled golden constant helpers
GoldenReal A_const();   // phi^-3
GPoint theta_of(const std::pair<GoldenReal, GoldenReal>& p);

}  // namespace torus
}  // namespace kite
