#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

// Exact arithmetic in the golden ring Z[phi], phi^2 = phi + 1.
// A value is the integer pair (a, b) meaning a + b*phi.  Every operation
// keeps both coefficients below 2^60 in absolute value or throws.

namespace kite {

using i64 = std::int64_t;
using i128 = __int128;

inline constexpr i64 kCoeffBound = i64(1) << 60;

struct OverflowFault : std::runtime_error {
  explicit OverflowFault(const std::string& op)
      : std::runtime_error("golden overflow in " + op) {}
};

struct NotDivisible : std::runtime_error {
  NotDivisible() : std::runtime_error("golden division leaves the ring") {}
};

// Raised when the strong-positivity forms disagree in sign; see
// GoldenReal::strong_sign.  Never happens for in-bound coefficients.
struct Indeterminate : std::runtime_error {
  Indeterminate() : std::runtime_error("strong positivity indeterminate") {}
};

struct GoldenReal {
  i64 a = 0;  // coefficient of 1
  i64 b = 0;  // coefficient of phi

  constexpr GoldenReal() = default;
  constexpr GoldenReal(i64 a0, i64 b0) : a(a0), b(b0) {}

  static GoldenReal checked(i128 a0, i128 b0, const char* op) {
    if (a0 >= kCoeffBound || a0 <= -kCoeffBound || b0 >= kCoeffBound ||
        b0 <= -kCoeffBound)
      throw OverflowFault(op);
    return GoldenReal(i64(a0), i64(b0));
  }

  friend GoldenReal operator+(GoldenReal x, GoldenReal y) {
    return checked(i128(x.a) + y.a, i128(x.b) + y.b, "add");
  }
  friend GoldenReal operator-(GoldenReal x, GoldenReal y) {
    return checked(i128(x.a) - y.a, i128(x.b) - y.b, "sub");
  }
  friend GoldenReal operator-(GoldenReal x) {
    return checked(-i128(x.a), -i128(x.b), "neg");
  }
  // (a0,a1)(b0,b1) = (a0 b0 + a1 b1, a0 b1 + a1 b0 + a1 b1)
  friend GoldenReal operator*(GoldenReal x, GoldenReal y) {
    i128 p = i128(x.a) * y.a + i128(x.b) * y.b;
    i128 q = i128(x.a) * y.b + i128(x.b) * y.a + i128(x.b) * y.b;
    return checked(p, q, "mul");
  }
  friend GoldenReal operator*(i64 n, GoldenReal x) {
    return checked(i128(n) * x.a, i128(n) * x.b, "scale");
  }
  GoldenReal& operator+=(GoldenReal y) { return *this = *this + y; }
  GoldenReal& operator-=(GoldenReal y) { return *this = *this - y; }
  GoldenReal& operator*=(GoldenReal y) { return *this = *this * y; }

  friend bool operator==(GoldenReal x, GoldenReal y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(GoldenReal x, GoldenReal y) { return !(x == y); }

  bool is_zero() const { return a == 0 && b == 0; }

  // Galois conjugation tau(a + b phi) = (a+b) - b phi.
  GoldenReal conj() const { return checked(i128(a) + b, -i128(b), "conj"); }

  // Field norm x * conj(x) = a^2 + a b - b^2, an ordinary integer.
  i128 norm() const { return i128(a) * a + i128(a) * b - i128(b) * b; }

  // Exact sign of a + b phi.  Writing 2x = u + v sqrt(5) with u = 2a + b,
  // v = b, the sign is decided by comparing u^2 with 5 v^2.  For in-bound
  // coefficients this equals the sign decided by the strong-positivity
  // Fibonacci forms of strong_sign().
  int sign() const {
    i128 u = 2 * i128(a) + b;
    i128 v = b;
    int su = u > 0 ? 1 : (u < 0 ? -1 : 0);
    int sv = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (su == sv) return su;
    if (su == 0) return sv;
    if (sv == 0) return su;
    // opposite signs: compare |u| and sqrt(5)|v|
    i128 uu = u * u, vv5 = 5 * v * v;
    if (uu == vv5) return 0;  // impossible for nonzero golden values
    return uu > vv5 ? su : sv;
  }

  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  friend bool operator<(GoldenReal x, GoldenReal y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(GoldenReal x, GoldenReal y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(GoldenReal x, GoldenReal y) { return y < x; }
  friend bool operator>=(GoldenReal x, GoldenReal y) { return y <= x; }

  // Strong positivity evaluated literally with the Fibonacci linear forms
  // a f100 + b f101 and a f101 + b f102 in arbitrary precision.  Returns
  // +1 / -1 when both forms are positive / negative, 0 for zero, and
  // throws Indeterminate when the forms disagree.
  int strong_sign() const;

  double to_double() const {
    static const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return double(a) + double(b) * phi;
  }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GoldenReal& x);

inline GoldenReal gr(i64 a, i64 b) { return GoldenReal(a, b); }
inline const GoldenReal kZero{0, 0};
inline const GoldenReal kOne{1, 0};
inline const GoldenReal kPhi{0, 1};
inline const GoldenReal kPhiInv{-1, 1};    // phi^-1 = phi - 1
inline const GoldenReal kPhiInv2{2, -1};   // phi^-2 = 2 - phi
inline const GoldenReal kPhiInv3{-3, 2};   // phi^-3 = 2 phi - 3
inline const GoldenReal kPhiCube{1, 2};    // phi^3 = 1 + 2 phi
inline const GoldenReal kTwo{2, 0};

GoldenReal phi_pow(int k);  // phi^k for any integer k

// Guided division: the quotient alpha/beta, which must lie in Z[phi].
GoldenReal div_exact(GoldenReal alpha, GoldenReal beta);

// Largest n with 4n <= x (used by the gamma_k offsets); exact.
i64 floor_quarter(GoldenReal x);

// a(U,V) = phi^-1 U + phi^-2 V, the golden point on segment [U,V].
inline GoldenReal golden_blend(GoldenReal u, GoldenReal v) {
  return kPhiInv * u + kPhiInv2 * v;
}

}  // namespace kite
