#pragma once

#include <span>

#include "surfgeo/invariants.hpp"
#include "surfgeo/rational.hpp"

namespace surfgeo {

struct ChernNumbers {
  BigInt c1_squared;
  BigInt c2;
  // Coefficient of H in c(T_X) = (1+H)^(N+1) / prod(1 + a_i H).
  BigInt c1_hyperplane_multiple;
  friend bool operator==(const ChernNumbers&, const ChernNumbers&) = default;
};

// Smooth degree-d surface in CP^3 from the closed forms
// c1^2 = d(4-d)^2, c2 = d(d^2 - 4d + 6).
SurfaceInvariants hypersurface_p3(long d);

// Chern numbers of a complete-intersection surface by truncated series
// division of the total Chern class. `ambient_dim` must be len(degrees) + 2.
ChernNumbers complete_intersection_chern(std::span<const long> degrees, long ambient_dim);
SurfaceInvariants complete_intersection(std::span<const long> degrees, long ambient_dim);

// Base Y of a double cover: Euler number, signature, K_Y^2 and q(Y).
struct CoverBase {
  BigInt euler;
  BigInt signature;
  BigInt canonical_squared;
  BigInt irregularity = 0;
};

// Branch curve B = 2L, described through L^2, L·K_Y and e(B).
struct BranchData {
  BigInt half_class_self_int;
  BigInt half_class_dot_k;
  BigInt branch_euler;
};

// Facts about the cover the caller vouches for; the library does not check
// smoothness or genericity of the branch curve.
struct SurfaceFacts {
  bool minimal_general_type = false;
  bool ample_canonical = false;
  bool simply_connected = false;
  bool c1_even = false;
};

struct DoubleCoverChern {
  BigInt c1_squared;
  BigInt c2;
  BigInt signature_from_chern;  // (c1^2 - 2 c2) / 3
  BigInt signature_from_branch;  // 2 σ_Y - 2 L^2
};

// Chern numbers of the double cover, after checking that both signature
// formulas agree. Throws InconsistencyError otherwise.
DoubleCoverChern double_cover_chern(const CoverBase& base, const BranchData& branch);
SurfaceInvariants double_cover(const CoverBase& base, const BranchData& branch, const SurfaceFacts& facts);

CoverBase p1xp1_base();
CoverBase blown_up_plane_base();

// Double cover of CP1 x CP1 branched over a generic curve of bidegree (a, b); a, b even.
SurfaceInvariants horikawa_p1xp1(long a, long b);
BranchData p1xp1_branch(long a, long b);

// Double cover of CP2 # CP2bar branched over the proper transform of a
// degree-10 curve with a point of multiplicity 4 at the blown-up point.
SurfaceInvariants horikawa_plane10();

struct CurveClass {
  BigInt genus;
  BigInt self_intersection;  // D^2
  BigInt dot_canonical;      // D·K
};

// D = dH - mE on CP2 # CP2bar, genus by adjunction.
CurveClass proper_transform_genus(long d, long m);

struct KodairaData {
  long base_genus;   // p
  long cover_degree;  // n
};

struct KodairaFibration {
  TopInvariants top;
  BigInt c1_squared;
  BigInt cover_genus;             // genus of C, the n-fold cover of B
  BigInt fiber_genus_over_base;   // fiber of M -> B
  BigInt fiber_genus_over_cover;  // fiber of M -> C
  BigInt branch_self_intersection;  // Σ^2
  BigInt signature_from_branch;   // -Σ^2 / 2
  BigInt signature_from_chern;    // (c1^2 - 2 c2) / 3
};

// Double cover of B x C branched over the union of the graphs of f and ι∘f,
// where f: C -> B is an unbranched n-fold cover and ι a free involution of B.
// `branch_divisible_by_two` is the caller's assertion that [Σ] is 2-divisible.
KodairaFibration kodaira_fibration(const KodairaData& data, bool branch_divisible_by_two = true);

}  // namespace surfgeo
