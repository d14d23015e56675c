#include "golden.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <ostream>
#include <sstream>

namespace kite {

using boost::multiprecision::int256_t;

namespace {
// f1 = f2 = 1 convention, so these are the 100th..102nd Fibonacci numbers.
const int256_t kF100("354224848179261915075");
const int256_t kF101("573147844013817084101");
const int256_t kF102("927372692193078999176");
}  // namespace

int GoldenReal::strong_sign() const {
  if (a == 0 && b == 0) return 0;
  int256_t f1 = kF100 * a + kF101 * b;
  int256_t f2 = kF101 * a + kF102 * b;
  if (f1 > 0 && f2 > 0) return 1;
  if (f1 < 0 && f2 < 0) return -1;
  throw Indeterminate();
}

GoldenReal phi_pow(int k) {
  GoldenReal base = k >= 0 ? kPhi : kPhiInv;
  GoldenReal out = kOne;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

GoldenReal div_exact(GoldenReal alpha, GoldenReal beta) {
  if (beta.is_zero()) throw NotDivisible();
  // gamma = alpha tau(beta) / (beta tau(beta)); the denominator is an
  // ordinary integer.  The find step is unchecked; the verification
  // multiply below re-establishes the bounds.
  i128 den = beta.norm();
  i128 na = i128(alpha.a) * (i128(beta.a) + beta.b) - i128(alpha.b) * beta.b;
  i128 nb = -i128(alpha.a) * beta.b + i128(alpha.b) * beta.a;
  if (na % den != 0 || nb % den != 0) throw NotDivisible();
  GoldenReal gamma = GoldenReal::checked(na / den, nb / den, "div");
  if (beta * gamma != alpha) throw NotDivisible();
  return gamma;
}

i64 floor_quarter(GoldenReal x) {
  double est = x.to_double() / 4.0;
  i64 n = i64(std::floor(est));
  // exact adjustment
  while ((x - GoldenReal(4 * (n + 1), 0)).sign() >= 0) ++n;
  while ((x - GoldenReal(4 * n, 0)).sign() < 0) --n;
  return n;
}

std::string GoldenReal::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenReal& x) {
  os << x.a;
  if (x.b >= 0)
    os << "+" << x.b << "*phi";
  else
    os << x.b << "*phi";
  return os;
}

}  // namespace kite
