#pragma once

// Reference computations written independently of the library. Tests compare
// library results against these; none of them call into surfgeo internals
// beyond the Rational value type.

#include <cstdint>
#include <vector>

#include "surfgeo/rational.hpp"

namespace oracle {

using surfgeo::BigInt;
using surfgeo::Rational;

// Smooth degree-d surface in P3: K = (d-4)H, H^2 = d.
inline BigInt hypersurface_c1_squared(long d) { return BigInt(d) * (4 - d) * (4 - d); }
inline BigInt hypersurface_c2(long d) { return BigInt(d) * (d * d - 4 * d + 6); }

// Coefficients of H and H^2 in (1+H)^{N+1} / prod(1 + a_i H), then multiplied
// by the degree prod(a_i) to get numbers. Uses explicit power sums.
struct CiNumbers {
  BigInt c1_squared, c2;
};
inline CiNumbers complete_intersection(const std::vector<long>& a, long n) {
  BigInt deg = 1, s1 = 0, s2 = 0;
  for (long x : a) {
    deg *= x;
    s1 += x;
    s2 += BigInt(x) * x;
  }
  // c(X) = (1+H)^{n+1} (1 - s1 H + h2 H^2) with h2 the complete homogeneous sum.
  BigInt h2 = (s1 * s1 + s2) / 2;
  BigInt c1 = (n + 1) - s1;
  BigInt c2 = BigInt(n + 1) * n / 2 - BigInt(n + 1) * s1 + h2;
  return {c1 * c1 * deg, c2 * deg};
}

// Double cover of Y branched along B in |2L|.
struct Cover {
  BigInt c1_squared, c2, signature;
};
inline Cover double_cover(BigInt k_y_sq, BigInt e_y, BigInt sigma_y, BigInt l_sq, BigInt l_k) {
  // K_X = f^*(K_Y + L); e(B) = -B(B+K_Y) = -(4L^2 + 2LK).
  BigInt e_b = -(4 * l_sq + 2 * l_k);
  return {2 * (k_y_sq + 2 * l_k + l_sq), 2 * e_y - e_b, 2 * sigma_y - 2 * l_sq};
}

// Kodaira fibration from a degree-n unramified cover of a genus-p curve.
struct Kodaira {
  BigInt chi, tau, c1_squared, fiber_over_base, fiber_over_cover;
};
inline Kodaira kodaira(long p, long n) {
  BigInt gc = BigInt(n) * (p - 1) + 1;
  // Y = B x C, branch curve = graph of f union graph of f composed with involution.
  BigInt e_y = BigInt(2 - 2 * p) * (2 - 2 * gc);
  BigInt graph_sq = BigInt(n) * (2 - 2 * p);
  BigInt e_branch = 2 * (2 - 2 * gc);
  BigInt chi = 2 * e_y - e_branch;
  BigInt tau = -(2 * graph_sq) / 2;  // -Σ²/2, Σ = two disjoint graphs
  // fiber over a point of B: double cover of C branched at 2n points.
  BigInt q_b = (2 - (2 * (2 - 2 * gc) - 2 * n)) / 2;
  // fiber over a point of C: double cover of B branched at 2 points.
  BigInt q_c = (2 - (2 * (2 - 2 * BigInt(p)) - 2)) / 2;
  return {chi, tau, 2 * chi + 3 * tau, q_b, q_c};
}

// Direct numeric evaluation of the norm functionals on the Kähler class
// ω = 2(p-1)F - εc1 with χ = 1 units; returns value / π^k.
struct NormValues {
  Rational scalar, w_plus, w_minus, cbar_plus, cbar_minus;
};
inline NormValues norms_at(long p, const Rational& rho, const Rational& f_c1, const Rational& eps) {
  const Rational c1sq = Rational(2) + Rational(3) * rho;
  const Rational a = Rational(2 * (p - 1));
  // classes as (F-coefficient, c1-coefficient); F^2 = 0.
  auto dot = [&](Rational f1, Rational k1, Rational f2, Rational k2) {
    return (f1 * k2 + k1 * f2) * f_c1 + k1 * k2 * c1sq;
  };
  const Rational w2 = dot(a, -eps, a, -eps);
  const Rational c1w = dot(0, 1, a, -eps);
  const Rational s = Rational(32) * c1w * c1w / w2;
  const Rational cb_f = Rational(4 * (p - 1));
  const Rational cbw = dot(cb_f, 1, a, -eps);
  const Rational plus = cbw * cbw / w2;
  return {s, s / 24, s / 24 - Rational(12) * rho, plus, plus - dot(cb_f, 1, cb_f, 1)};
}

}  // namespace oracle
