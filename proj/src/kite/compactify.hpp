#pragma once

#include <array>

#include "report.hpp"
#include "torus.hpp"

// The compactification proof apparatus: the maps Theta~, zeta~, I_t, the
// hyperplane potentials g_k with offsets gamma_k, the piecewise affine
// maps E~_1..E~_8, and the mechanical verification of the three technical
// lemmas (statements 1-8, the offset set Omega, 256-polyhedron feasibility).

namespace kite {
namespace compactify {

struct OnHyperplane : std::runtime_error {
  OnHyperplane() : std::runtime_error("g_k lands in 4Z") {}
};

using FourVector = std::array<GoldenReal, 4>;

FourVector operator+(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a, const FourVector& b);
bool in_4Z4(const FourVector& v);

// Theta~(x1,x2) = (x1+x2, x1-x2, (x1+x2)/phi, (x1-x2)/phi)
FourVector tilde_theta(GoldenReal x1, GoldenReal x2);

// zeta~: R^4 -> torus (doubled coordinates)
torus::GPoint tilde_zeta(const FourVector& X);

// I_t: fundamental-domain point (doubled) -> R^4; golden whenever the
// standard coordinates are golden or Theta-images of golden points.
FourVector iota(GoldenReal t, const torus::GPoint& doubled);

// The four offsets Omega = {0, 2, -2/phi, 2-2/phi}.
const std::array<GoldenReal, 4>& omega_set();

GoldenReal g_k(int k, const FourVector& X);           // k = 1..8 (period 4)
GoldenReal gamma_k(int k, const FourVector& X);       // phi * tau(g_k)
FourVector tilde_E(int k, const FourVector& X);       // throws OnHyperplane
// the same map with gamma pinned to 4 phi * n (domain verification)
FourVector tilde_E_pinned(int k, const FourVector& X, i64 n);

// Pi~ = zeta~ o E~_8 o ... o E~_1
torus::GPoint tilde_pi(const FourVector& X);

// the lattice-shift defect u(j,k,X) = E~_j(X + 4 e_k) - E~_j(X)
FourVector defect(int j, int k, const FourVector& X);

VerificationReport verify_statements(int seed = 20260810);
VerificationReport verify_omega(int samples = 10000, int seed = 20260810);
VerificationReport verify_feasibility();

}  // namespace compactify
}  // namespace kite
