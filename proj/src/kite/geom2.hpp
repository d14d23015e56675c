#pragma once

#include <optional>
#include <vector>

#include "qphi.hpp"

namespace kite {

struct Vec2 {
  QPhi x, y;
  Vec2() = default;
  Vec2(QPhi x0, QPhi y0) : x(std::move(x0)), y(std::move(y0)) {}
  Vec2(GoldenReal x0, GoldenReal y0) : x(x0), y(y0) {}

  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Vec2 operator*(const QPhi& s, const Vec2& a) {
    return {s * a.x, s * a.y};
  }
  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  bool lex_less(const Vec2& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

inline QPhi cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline QPhi dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Parallel with the same orientation (both nonzero).
inline bool same_ray(const Vec2& a, const Vec2& b) {
  return cross(a, b).is_zero() && dot(a, b).sign() > 0;
}

enum class Where { Interior, Boundary, Outside };

// A positively convex polygon: counterclockwise vertex cycle, weak
// convexity allowed, no two consecutive vertices equal.
struct Polygon {
  std::vector<Vec2> v;

  Polygon() = default;
  explicit Polygon(std::vector<Vec2> verts) : v(std::move(verts)) {}

  size_t size() const { return v.size(); }
  const Vec2& operator[](size_t i) const { return v[i % v.size()]; }

  bool positively_convex() const;
  bool strictly_convex() const;
  QPhi area2() const;  // twice the signed area
  Where membership(const Vec2& p) const;
  Vec2 interior_point() const;  // golden-blend interior point
  std::optional<Polygon> clip_halfplane(const Vec2& n, const QPhi& c) const;
  // Intersection with another convex polygon (empty optional if the
  // interior intersection is empty).
  std::optional<Polygon> intersect(const Polygon& q) const;
  bool disjoint_interior(const Polygon& q) const;
  Polygon translated(const Vec2& t) const;
  Polygon canonical() const;  // cycle rotated so the lex-min vertex is first
  void bounding_box(Vec2& lo, Vec2& hi) const;

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.v == b.v;
  }
};

// Make a counterclockwise polygon out of an unordered hull vertex set
// (all points must be extreme or on the hull boundary).
Polygon ccw_hull(std::vector<Vec2> pts);

struct CoverFailure {
  std::string what;     // gap-witness | overlap-witness | spanning-edge | precondition
  Vec2 witness{};
  int part = -1;
};

struct CoverReport {
  bool covered = false;
  std::vector<CoverFailure> failures;
  size_t parts = 0;
  std::string mechanism;  // how disjointness was certified
};

// Lemma coverX: Q is covered by `parts` provided the parts pairwise have
// disjoint interiors (certified by the caller), each part meets Q, no part
// has a spanning edge after golden-point insertion, and the matching
// property holds at every part vertex interior to Q.
CoverReport verify_covering_2d(const Polygon& Q, const std::vector<Polygon>& parts,
                               const std::string& disjointness_mechanism,
                               bool check_area = true);

// An interior point of Q outside every part, found by scanning exact 1-D
// coverage along horizontal lines between vertex heights.
std::optional<Vec2> uncovered_point(const Polygon& Q,
                                    const std::vector<Polygon>& parts);

}  // namespace kite
