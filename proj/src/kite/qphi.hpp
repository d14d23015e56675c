#pragma once

#include <numeric>

#include "golden.hpp"

// Field elements num/den with num in Z[phi] and den a positive machine
// integer.  Singular-line intersections live in (1/2)Z[phi] and general
// golden linear systems can leave the ring, so the geometry kernel works
// over these; certified outputs are asserted back to den in {1,2}.

namespace kite {

struct QPhi {
  GoldenReal num{0, 0};
  i64 den = 1;

  QPhi() = default;
  QPhi(GoldenReal n) : num(n), den(1) {}
  QPhi(i64 a, i64 b, i64 d) : num(a, b), den(d) { normalize(); }
  QPhi(GoldenReal n, i64 d) : num(n), den(d) { normalize(); }
  static QPhi integer(i64 n) { return QPhi(GoldenReal(n, 0)); }

  void normalize() {
    if (den == 0) throw OverflowFault("qphi zero den");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    i64 g = std::gcd(std::gcd(std::abs(num.a), std::abs(num.b)), den);
    if (g > 1) {
      num.a /= g;
      num.b /= g;
      den /= g;
    }
  }

  bool is_golden() const { return den == 1; }
  bool is_half_golden() const { return den == 1 || den == 2; }
  GoldenReal golden() const {
    if (den != 1) throw NotDivisible();
    return num;
  }
  // The value scaled by 2, which must be golden.
  GoldenReal doubled() const {
    if (den == 1) return GoldenReal::checked(2 * i128(num.a), 2 * i128(num.b), "dbl");
    if (den == 2) return num;
    throw NotDivisible();
  }

  bool is_zero() const { return num.is_zero(); }
  int sign() const { return num.sign(); }

  friend QPhi operator+(const QPhi& x, const QPhi& y) {
    i64 g = std::gcd(x.den, y.den);
    i64 xd = x.den / g, yd = y.den / g;
    i128 d = i128(x.den) * yd;
    if (d >= kCoeffBound) throw OverflowFault("qphi add den");
    GoldenReal n = GoldenReal::checked(i128(x.num.a) * yd + i128(y.num.a) * xd,
                                       i128(x.num.b) * yd + i128(y.num.b) * xd,
                                       "qphi add");
    return QPhi(n, i64(d));
  }
  friend QPhi operator-(const QPhi& x, const QPhi& y) { return x + (-y); }
  friend QPhi operator-(const QPhi& x) { return QPhi(-x.num, x.den); }
  friend QPhi operator*(const QPhi& x, const QPhi& y) {
    QPhi a(x.num, y.den);  // cross-cancel first to keep things small
    QPhi b(y.num, x.den);
    i128 d = i128(a.den) * b.den;
    if (d >= kCoeffBound) throw OverflowFault("qphi mul den");
    return QPhi(a.num * b.num, i64(d));
  }
  friend QPhi operator/(const QPhi& x, const QPhi& y) { return x * y.inverse(); }

  QPhi inverse() const {
    if (num.is_zero()) throw NotDivisible();
    // 1/(n/d) = d conj(n) / N(n)
    i128 nn = num.norm();
    if (nn >= kCoeffBound || nn <= -kCoeffBound) throw OverflowFault("qphi inv");
    GoldenReal c = num.conj();
    i64 d = i64(nn);
    QPhi out(i64(den) * c, 1);
    out.den = std::abs(d);
    if (d < 0) out.num = -out.num;
    out.normalize();
    return out;
  }

  QPhi& operator+=(const QPhi& y) { return *this = *this + y; }
  QPhi& operator-=(const QPhi& y) { return *this = *this - y; }
  QPhi& operator*=(const QPhi& y) { return *this = *this * y; }

  friend bool operator==(const QPhi& x, const QPhi& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const QPhi& x, const QPhi& y) { return !(x == y); }
  friend bool operator<(const QPhi& x, const QPhi& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QPhi& x, const QPhi& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QPhi& x, const QPhi& y) { return y < x; }
  friend bool operator>=(const QPhi& x, const QPhi& y) { return y <= x; }

  double to_double() const { return num.to_double() / double(den); }
  std::string str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }
};

inline QPhi golden_blend(const QPhi& u, const QPhi& v) {
  return QPhi(kPhiInv) * u + QPhi(kPhiInv2) * v;
}

}  // namespace kite
