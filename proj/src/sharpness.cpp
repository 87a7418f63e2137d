#include "surfgeo/sharpness.hpp"

#include "surfgeo/errors.hpp"

namespace surfgeo {

namespace {

using SymbolicRF = RationalFunction<RhoPoly>;

void check_geometry(const FibrationGeometry& g) {
  if (g.euler.sign() <= 0) throw DomainError("χ must be positive, got " + g.euler.str());
  if (g.base_genus < 2) throw DomainError("base genus must be at least 2");
  // F·c1 = 2 - 2q = -χ / (2(p-1)) for a Kodaira fibration over a genus-p base.
  if (g.fiber_dot_c1 * Rational(2 * (g.base_genus - 1)) != -g.euler)
    throw InconsistencyError("F·c1 = " + g.fiber_dot_c1.str() + " is inconsistent with χ = " + g.euler.str() +
                             " and base genus " + std::to_string(g.base_genus));
}

RhoPoly rho() { return RhoPoly::variable(); }

// Expands value = π^pi_power · χ · closed_form with one pole at ε = 0.
NormExpansion expand(std::string name, int pi_power, const SymbolicRF& closed_form, std::size_t order) {
  auto laurent = rf_laurent_expand(closed_form, 1, order);
  const RhoPoly& lead = laurent.series[0];
  if (lead.degree() != 0)
    throw NormalizationError(name + ": leading coefficient " + to_string(lead) + " is not a nonzero constant");
  Rational prefactor = lead.coeff(0);
  NormExpansion out;
  out.name = std::move(name);
  out.pi_power = pi_power;
  out.prefactor = prefactor;
  out.series = laurent.series.scaled(RhoPoly(prefactor.reciprocal()));
  out.closed_form = closed_form;
  return out;
}

// Sign of p(x) on x > 0 (or x < 0): +1 / -1 when every nonzero coefficient of
// p(±x) has that sign, 0 when undetermined.
int sign_on_half_line(const RhoPoly& p, RhoSign side) {
  int sign = 0;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    int s = p.coefficients()[i].sign();
    if (side == RhoSign::negative && i % 2 == 1) s = -s;
    if (s == 0) continue;
    if (sign == 0) {
      sign = s;
    } else if (sign != s) {
      return 0;
    }
  }
  return sign;
}

// Solves lhs0 >= coeff·δ over the rationals.
void solve_linear(DeltaBound& out, const Rational& lhs0, const Rational& coeff) {
  if (coeff.is_zero()) {
    out.kind = lhs0.sign() >= 0 ? DeltaBound::Kind::unbounded : DeltaBound::Kind::infeasible;
    out.value = Rational(0);
  } else if (coeff.sign() > 0) {
    out.kind = DeltaBound::Kind::upper;
    out.value = lhs0 / coeff;
  } else {
    out.kind = DeltaBound::Kind::lower;
    out.value = lhs0 / coeff;
  }
}

DeltaBound first_order_terms(const ProbeSeries& probe) {
  for (const auto* s : {&probe.scalar, &probe.weyl, &probe.chern}) {
    if (!(s->coefficients().at(0) == RhoPoly(1)))
      throw NormalizationError("zeroth-order term of a probe series is not 1");
    if (s->order() < 1) throw DomainError("probe series must be known to first order");
  }
  // Drop everything from ε² on before taking square roots.
  auto a = series_sqrt(probe.scalar.truncated(1));
  auto b = series_sqrt(probe.weyl.truncated(1));
  auto c = series_sqrt(probe.chern.truncated(1));
  DeltaBound out;
  out.sqrt_scalar_1 = a[1];
  out.sqrt_weyl_1 = b[1];
  out.sqrt_chern_1 = c[1];
  // (1-δ)(1 + a1 ε) + δ(1 + b1 ε) >= 1 + c1 ε  <=>  (a1 - c1) ε >= (a1 - b1) ε δ.
  out.lhs = a[1] - c[1];
  out.delta_coeff = a[1] - b[1];
  return out;
}

template <class C>
bool chern_identity_holds(const PairingForm<C>& form, long base_genus, const C& two_chi_minus_3tau) {
  auto omega = kahler_class<C>(base_genus);
  auto cbar = reversed_chern_class<C>(base_genus);
  RationalFunction<C> coefficient = pairing(cbar, omega, form) / pairing(omega, omega, form);
  LatticeClass<C> plus = coefficient * omega;
  LatticeClass<C> minus = cbar - plus;
  RationalFunction<C> plus_sq = pairing(plus, plus, form);
  RationalFunction<C> minus_sq = -pairing(minus, minus, form);
  return minus_sq - plus_sq == RationalFunction<C>(two_chi_minus_3tau);
}

}  // namespace

FibrationGeometry fibration_geometry(const KodairaData& data) {
  KodairaFibration k = kodaira_fibration(data);
  FibrationGeometry g;
  g.base_genus = data.base_genus;
  g.euler = Rational(k.top.euler);
  g.signature = Rational(k.top.signature);
  g.fiber_dot_c1 = Rational(BigInt(2 - 2 * k.fiber_genus_over_base));
  return g;
}

PairingForm<Rational> numeric_form(const FibrationGeometry& g) {
  check_geometry(g);
  return {g.fiber_dot_c1, Rational(2) * g.euler + Rational(3) * g.signature};
}

PairingForm<RhoPoly> symbolic_form(const FibrationGeometry& g) {
  check_geometry(g);
  return {RhoPoly(g.fiber_dot_c1 / g.euler), RhoPoly(2) + rho().scaled(Rational(3))};
}

NormExpansions norm_expansions(const FibrationGeometry& g, std::size_t order) {
  const PairingForm<RhoPoly> form = symbolic_form(g);
  const auto omega = kahler_class<RhoPoly>(g.base_genus);
  const auto c1 = canonical_chern_class<RhoPoly>();
  const auto cbar = reversed_chern_class<RhoPoly>(g.base_genus);

  // Volume [ω]²/2 and total scalar curvature 4π c1·[ω]; s is constant, so
  // ‖s‖² = (4π c1·ω)² / ([ω]²/2) = 32π² (c1·ω)² / ω².
  const SymbolicRF omega_sq = pairing(omega, omega, form);
  const SymbolicRF c1_omega = pairing(c1, omega, form);
  const SymbolicRF scalar = SymbolicRF(32) * c1_omega * c1_omega / omega_sq;
  // Kähler metrics have |W+|² = s²/24.
  const SymbolicRF w_plus = scalar / SymbolicRF(24);
  // ∫|W-|² = ∫|W+|² - 12π²τ.
  const SymbolicRF w_minus = w_plus - SymbolicRF(RhoPoly(12) * rho());
  // c̄1+ = (c̄1·ω / ω²) ω, so |c̄1+|² = (c̄1·ω)² / ω²; and |c̄1-|² = |c̄1+|² - c̄1².
  const SymbolicRF cbar_omega = pairing(cbar, omega, form);
  const SymbolicRF cbar_plus = cbar_omega * cbar_omega / omega_sq;
  const SymbolicRF cbar_minus = cbar_plus - pairing(cbar, cbar, form);

  NormExpansions out;
  out.scalar = expand("‖s‖²", 2, scalar, order);
  out.self_dual_weyl = expand("∫|W+|²", 2, w_plus, order);
  out.anti_self_dual_weyl = expand("‖W-‖²", 2, w_minus, order);
  out.reversed_c1_plus = expand("|c̄1+|²", 0, cbar_plus, order);
  out.reversed_c1_minus = expand("|c̄1-|²", 0, cbar_minus, order);
  return out;
}

ProbeSeries normalized_probe(const NormExpansions& norms) {
  struct Term {
    Rational prefactor;
    int pi_power;
  };
  // ‖s/√24‖², ‖W-‖², ((2π/√3)|c̄1-|)².
  const Term scalar{norms.scalar.prefactor / Rational(24), norms.scalar.pi_power};
  const Term weyl{norms.anti_self_dual_weyl.prefactor, norms.anti_self_dual_weyl.pi_power};
  const Term chern{norms.reversed_c1_minus.prefactor * Rational(4, 3), norms.reversed_c1_minus.pi_power + 2};
  if (scalar.pi_power != weyl.pi_power || scalar.pi_power != chern.pi_power)
    throw NormalizationError("powers of π do not cancel across the estimate");
  if (scalar.prefactor != weyl.prefactor || scalar.prefactor != chern.prefactor)
    throw NormalizationError("prefactors " + scalar.prefactor.str() + ", " + weyl.prefactor.str() + ", " +
                             chern.prefactor.str() + " do not agree");
  ProbeSeries p;
  p.scalar = norms.scalar.series;
  p.weyl = norms.anti_self_dual_weyl.series;
  p.chern = norms.reversed_c1_minus.series;
  p.common_prefactor = scalar.prefactor;
  p.pi_power = scalar.pi_power;
  return p;
}

DeltaBound delta_bound(const ProbeSeries& probe, RhoSign sign) {
  DeltaBound out = first_order_terms(probe);
  if (out.lhs.is_zero() && out.delta_coeff.is_zero()) {
    solve_linear(out, Rational(0), Rational(0));
    return out;
  }
  // Both sides must be rational multiples of one polynomial g(ϱ) of known sign.
  const RhoPoly& ref = out.lhs.is_zero() ? out.delta_coeff : out.lhs;
  RhoPoly g = monic(ref);
  auto multiple_of_g = [&](const RhoPoly& p) -> Rational {
    if (p.is_zero()) return Rational(0);
    if (!(monic(p) == g)) throw NotApplicable("first-order terms are not proportional; δ cannot be isolated symbolically");
    return p.leading();
  };
  Rational lhs0 = multiple_of_g(out.lhs);
  Rational coeff = multiple_of_g(out.delta_coeff);
  int s = sign_on_half_line(g, sign);
  if (s == 0) throw NotApplicable("sign of " + to_string(g) + " is not determined by the sign of ϱ");
  solve_linear(out, lhs0 * Rational(s), coeff * Rational(s));
  return out;
}

DeltaBound delta_bound(const ProbeSeries& probe, const Rational& rho_value) {
  DeltaBound out = first_order_terms(probe);
  solve_linear(out, out.lhs.evaluate(rho_value), out.delta_coeff.evaluate(rho_value));
  return out;
}

std::string describe(const DeltaBound& bound) {
  switch (bound.kind) {
    case DeltaBound::Kind::upper:
      return "δ ≤ " + bound.value.str();
    case DeltaBound::Kind::lower:
      return "δ ≥ " + bound.value.str() + " (no upper bound derived)";
    case DeltaBound::Kind::unbounded:
      return "unbounded (constraint holds for every δ)";
    case DeltaBound::Kind::infeasible:
      return "infeasible (no δ satisfies the constraint)";
  }
  return "?";
}

bool verify_chern_class_identity(const FibrationGeometry& g) {
  return chern_identity_holds<Rational>(numeric_form(g), g.base_genus,
                                        Rational(2) * g.euler - Rational(3) * g.signature);
}

bool verify_chern_class_identity_symbolic(const FibrationGeometry& g) {
  // In units of χ: 2χ - 3τ -> 2 - 3ϱ.
  return chern_identity_holds<RhoPoly>(symbolic_form(g), g.base_genus, RhoPoly(2) - rho().scaled(Rational(3)));
}

}  // namespace surfgeo
