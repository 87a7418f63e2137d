#pragma once

#include <cstddef>
#include <string>

#include "surfgeo/constructors.hpp"
#include "surfgeo/polynomial.hpp"
#include "surfgeo/power_series.hpp"
#include "surfgeo/rational.hpp"
#include "surfgeo/rational_function.hpp"

namespace surfgeo {

// Polynomials in the formal ratio ϱ = τ/χ.
using RhoPoly = RationalPoly;

// Intersection data of a Kodaira-fibered surface M -> B with fiber F.
struct FibrationGeometry {
  long base_genus = 2;  // p
  Rational euler;       // χ
  Rational signature;   // τ
  Rational fiber_dot_c1;  // F·c1 = 2 - 2q, q the fiber genus
};

FibrationGeometry fibration_geometry(const KodairaData& data);

// The symmetric form on span{F, c1}: F·F = 0, F·c1 given, c1·c1 = 2χ + 3τ.
template <class C>
struct PairingForm {
  C fiber_dot_c1;
  C c1_squared;
};

// Exact values, in ε with rational coefficients.
PairingForm<Rational> numeric_form(const FibrationGeometry& g);
// χ scaled to 1 and τ replaced by ϱ; every quantity below is then a multiple of χ.
PairingForm<RhoPoly> symbolic_form(const FibrationGeometry& g);

// f·F + c·c1 with coefficients rational functions of ε.
template <class C>
struct LatticeClass {
  RationalFunction<C> f_coeff;
  RationalFunction<C> c1_coeff;

  friend LatticeClass operator+(const LatticeClass& a, const LatticeClass& b) {
    return {a.f_coeff + b.f_coeff, a.c1_coeff + b.c1_coeff};
  }
  friend LatticeClass operator-(const LatticeClass& a, const LatticeClass& b) {
    return {a.f_coeff - b.f_coeff, a.c1_coeff - b.c1_coeff};
  }
  friend LatticeClass operator*(const RationalFunction<C>& s, const LatticeClass& a) {
    return {s * a.f_coeff, s * a.c1_coeff};
  }
};

template <class C>
RationalFunction<C> pairing(const LatticeClass<C>& a, const LatticeClass<C>& b, const PairingForm<C>& form) {
  const RationalFunction<C> f_dot_c1(form.fiber_dot_c1);
  const RationalFunction<C> c1_sq(form.c1_squared);
  return (a.f_coeff * b.c1_coeff + a.c1_coeff * b.f_coeff) * f_dot_c1 + a.c1_coeff * b.c1_coeff * c1_sq;
}

// [ω_ε] = 2(p-1)F - ε c1.
template <class C>
LatticeClass<C> kahler_class(long base_genus) {
  return {RationalFunction<C>(C(Rational(2 * (base_genus - 1)))), -RationalFunction<C>::epsilon()};
}

template <class C>
LatticeClass<C> canonical_chern_class() {
  return {RationalFunction<C>(0), RationalFunction<C>(1)};
}

template <class C>
LatticeClass<C> fiber_class() {
  return {RationalFunction<C>(1), RationalFunction<C>(0)};
}

// c̄1 = c1 + 4(p-1)F, first Chern class of the almost-complex structure on
// the orientation-reversed manifold.
template <class C>
LatticeClass<C> reversed_chern_class(long base_genus) {
  return {RationalFunction<C>(C(Rational(4 * (base_genus - 1)))), RationalFunction<C>(1)};
}

// value = prefactor · π^pi_power · (χ/ε) · series, series(0) = 1.
struct NormExpansion {
  std::string name;
  int pi_power = 0;
  Rational prefactor;
  PowerSeries<RhoPoly> series{0};
  // value / (π^pi_power · χ) as a function of ε, before expansion.
  RationalFunction<RhoPoly> closed_form;
};

struct NormExpansions {
  NormExpansion scalar;            // ‖s‖²
  NormExpansion self_dual_weyl;    // ∫|W+|²
  NormExpansion anti_self_dual_weyl;  // ‖W-‖²
  NormExpansion reversed_c1_plus;  // |c̄1+|²
  NormExpansion reversed_c1_minus;  // |c̄1-|²
};

// Curvature norms of a putative constant-scalar-curvature Kähler metric in
// [ω_ε], expanded from their closed forms to the given order in ε.
NormExpansions norm_expansions(const FibrationGeometry& g, std::size_t order = 2);

// Series under the three square roots once the reversed-orientation estimate
// (1-δ)‖s/√24‖ + δ‖W-‖ >= (2π/√3)|c̄1-| is divided by its common prefactor.
struct ProbeSeries {
  PowerSeries<RhoPoly> scalar{0};   // A
  PowerSeries<RhoPoly> weyl{0};     // B
  PowerSeries<RhoPoly> chern{0};    // C
  Rational common_prefactor;  // in units of π²χ/ε
  int pi_power = 0;
};

ProbeSeries normalized_probe(const NormExpansions& norms);

enum class RhoSign { positive, negative };

struct DeltaBound {
  enum class Kind { upper, lower, unbounded, infeasible };
  Kind kind = Kind::unbounded;
  Rational value;
  // First-order coefficients of √A, √B, √C.
  RhoPoly sqrt_scalar_1, sqrt_weyl_1, sqrt_chern_1;
  // Collected first-order inequality  lhs·ε >= delta_coeff·ε·δ.
  RhoPoly lhs;
  RhoPoly delta_coeff;
};

// Keeps the first-order terms of (1-δ)√A + δ√B >= √C and solves for δ,
// treating ϱ as a formal parameter of the given sign.
DeltaBound delta_bound(const ProbeSeries& probe, RhoSign sign = RhoSign::positive);
// Same with ϱ specialised to a rational value.
DeltaBound delta_bound(const ProbeSeries& probe, const Rational& rho);

std::string describe(const DeltaBound& bound);

// Checks |c̄1-|² - |c̄1+|² = 2χ - 3τ as rational functions of ε, with c̄1±
// obtained by projecting onto [ω_ε] and its orthogonal complement.
bool verify_chern_class_identity(const FibrationGeometry& g);
bool verify_chern_class_identity_symbolic(const FibrationGeometry& g);

}  // namespace surfgeo
