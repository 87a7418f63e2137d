#pragma once

#include <string>

#include "surfgeo/invariants.hpp"
#include "surfgeo/rational.hpp"

namespace surfgeo {

// The two Gauss-Bonnet/signature combinations 2χ ± 3τ, each 1/(4π²) times a
// curvature integral, plus the Seiberg-Witten multiplier on (c1+)^2.
struct CurvatureBudget {
  BigInt two_chi_plus_3tau;
  BigInt two_chi_minus_3tau;
  Rational sw_lower_bound_coeff{2, 3};
};

CurvatureBudget curvature_budget(const TopInvariants& t);

// Sign of 2χ - 3|τ|.
HitchinThorpe hitchin_thorpe(const TopInvariants& t);

// Lower bound (2/3) c1^2(X) on (1/4π²)∫(s²/24 + 2|W+|²) for every metric on any
// blow-up of X. X must have b+ >= 3 and be minimal of general type.
Rational sw_einstein_floor(const SurfaceInvariants& x);

// Historical blow-up thresholds: k >= t · c1^2(X) rules out Einstein metrics.
enum class Threshold { one_third, twenty_five_57ths, two_thirds };

Rational threshold_value(Threshold t);
// "1/3", "25/57", "2/3".
std::string to_string(Threshold t);
Threshold threshold_from_string(const std::string& text);

struct ObstructionVerdict {
  bool obstructed;
  // k equals threshold · c1^2(X) exactly.
  bool at_equality;
  long k;
  Rational bound;  // threshold · c1^2(X)
  Threshold threshold;
  std::string provenance;
};

ObstructionVerdict einstein_obstruction(const SurfaceInvariants& x, long k, Threshold threshold);

// 2χ + 3τ: the value an Einstein metric's normalized curvature integral would
// have to take.
BigInt einstein_budget_identity(const TopInvariants& t);

// Full report for X # k CP2bar.
ObstructionReport obstruction_report(const SurfaceInvariants& x, long k, Threshold threshold);

}  // namespace surfgeo
