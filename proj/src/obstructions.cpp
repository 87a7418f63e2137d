#include "surfgeo/obstructions.hpp"

#include "surfgeo/errors.hpp"

namespace surfgeo {

namespace {

constexpr const char* kHitchinThorpe = "Hitchin-Thorpe inequality 2χ >= 3|τ| for Einstein metrics";
constexpr const char* kFloor =
    "Seiberg-Witten estimate: (1/4π²)∫(s²/24 + 2|W+|²) > (2/3)c1²(X) on X # k CP2bar, b+(X) > 1";
constexpr const char* kBlowupTheorem =
    "blow-up obstruction: X # k CP2bar has no Einstein metric when k >= (1/3)c1²(X), b+(X) > 1";
constexpr const char* kWeylBound = "Weyl-curvature Seiberg-Witten estimate: obstruction for k >= (25/57)c1²(X)";
constexpr const char* kScalarBound = "scalar-curvature estimate: obstruction for k >= (2/3)c1²(X)";

void require_monopole_hypotheses(const SurfaceInvariants& x) {
  if (x.b_plus() < 3)
    throw NotApplicable("b+ = " + x.b_plus().str() + " <= 1; the Seiberg-Witten estimate needs b+ > 1");
  if (!x.minimal_general_type)
    throw NotApplicable("surface is not flagged minimal of general type; c1 is not known to be a monopole class");
}

BigInt abs_value(const BigInt& v) { return v.sign() < 0 ? BigInt(-v) : v; }

}  // namespace

CurvatureBudget curvature_budget(const TopInvariants& t) {
  return CurvatureBudget{2 * t.euler + 3 * t.signature, 2 * t.euler - 3 * t.signature, Rational(2, 3)};
}

HitchinThorpe hitchin_thorpe(const TopInvariants& t) {
  BigInt slack = 2 * t.euler - 3 * abs_value(t.signature);
  if (slack.sign() > 0) return HitchinThorpe::strict;
  if (slack.is_zero()) return HitchinThorpe::equality;
  return HitchinThorpe::violated;
}

Rational sw_einstein_floor(const SurfaceInvariants& x) {
  require_monopole_hypotheses(x);
  return Rational(2, 3) * Rational(x.c1_squared);
}

Rational threshold_value(Threshold t) {
  switch (t) {
    case Threshold::one_third:
      return Rational(1, 3);
    case Threshold::twenty_five_57ths:
      return Rational(25, 57);
    case Threshold::two_thirds:
      return Rational(2, 3);
  }
  throw DomainError("unknown threshold");
}

std::string to_string(Threshold t) { return threshold_value(t).str(); }

Threshold threshold_from_string(const std::string& text) {
  for (auto t : {Threshold::one_third, Threshold::twenty_five_57ths, Threshold::two_thirds})
    if (to_string(t) == text) return t;
  throw DomainError("unknown threshold '" + text + "' (expected 1/3, 25/57 or 2/3)");
}

ObstructionVerdict einstein_obstruction(const SurfaceInvariants& x, long k, Threshold threshold) {
  require_monopole_hypotheses(x);
  if (k < 1) throw DomainError("blow-up count must be positive, got " + std::to_string(k));
  ObstructionVerdict v;
  v.k = k;
  v.threshold = threshold;
  v.bound = threshold_value(threshold) * Rational(x.c1_squared);
  Rational kk(static_cast<std::int64_t>(k));
  v.obstructed = kk >= v.bound;
  v.at_equality = kk == v.bound;
  switch (threshold) {
    case Threshold::one_third:
      v.provenance = kBlowupTheorem;
      if (v.at_equality) {
        v.provenance += "; obstructed at equality k = c1²/3 (the strict estimate excludes 2χ+3τ = (2/3)c1²(X))";
      } else if (v.obstructed) {
        v.provenance += "; strictly obstructed";
      }
      break;
    case Threshold::twenty_five_57ths:
      v.provenance = kWeylBound;
      break;
    case Threshold::two_thirds:
      v.provenance = kScalarBound;
      break;
  }
  return v;
}

BigInt einstein_budget_identity(const TopInvariants& t) { return 2 * t.euler + 3 * t.signature; }

ObstructionReport obstruction_report(const SurfaceInvariants& x, long k, Threshold threshold) {
  ObstructionVerdict verdict = einstein_obstruction(x, k, threshold);
  TopInvariants m = blow_up(derive_topology(x), k);
  ObstructionReport report;
  report.hitchin_thorpe = hitchin_thorpe(m);
  report.sw_blowup_threshold = verdict.bound;
  report.verdicts.push_back({"hitchin-thorpe", report.hitchin_thorpe != HitchinThorpe::violated, kHitchinThorpe});

  Rational floor = sw_einstein_floor(x);
  Rational budget(einstein_budget_identity(m));
  // An Einstein metric would need 2χ+3τ(M) > floor; failing that obstructs.
  report.verdicts.push_back({"sw-floor-exceeds-einstein-budget", budget <= floor, kFloor});
  report.verdicts.push_back({"einstein-obstructed", verdict.obstructed, verdict.provenance});
  return report;
}

}  // namespace surfgeo
