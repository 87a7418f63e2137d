#include "surfgeo/constructors.hpp"

#include <string>

#include "surfgeo/errors.hpp"
#include "surfgeo/power_series.hpp"

namespace surfgeo {

namespace {

BigInt to_integer(const Rational& r) {
  if (!r.is_integer()) throw InconsistencyError("expected an integer, got " + r.str());
  return r.numerator();
}

PowerSeries<Rational> linear_factor(long a, std::size_t order) {
  return PowerSeries<Rational>::from_polynomial(RationalPoly(std::vector<Rational>{1, Rational(a)}), order);
}

}  // namespace

SurfaceInvariants hypersurface_p3(long d) {
  if (d < 1) throw DomainError("hypersurface degree must be at least 1, got " + std::to_string(d));
  BigInt deg = d;
  BigInt c1sq = deg * (4 - deg) * (4 - deg);
  BigInt c2 = deg * (deg * deg - 4 * deg + 6);
  SurfaceInvariants s = surface_from_chern(c1sq, c2, 0);
  s.minimal_general_type = d >= 5;
  s.ample_canonical = d >= 5;
  s.simply_connected = true;
  s.c1_even = d % 2 == 0;  // K = (d - 4) H
  validate(s);
  return s;
}

ChernNumbers complete_intersection_chern(std::span<const long> degrees, long ambient_dim) {
  if (ambient_dim != static_cast<long>(degrees.size()) + 2)
    throw DomainError("complete intersection in CP^" + std::to_string(ambient_dim) + " cut out by " +
                      std::to_string(degrees.size()) + " equations is not a surface");
  constexpr std::size_t order = 2;
  BigInt product = 1;
  auto total = PowerSeries<Rational>::from_polynomial(RationalPoly(1), order);
  for (long i = 0; i <= ambient_dim; ++i) total = total * linear_factor(1, order);
  for (long a : degrees) {
    if (a < 1) throw DomainError("complete intersection degrees must be positive");
    total = total * series_inverse(linear_factor(a, order));
    product *= a;
  }
  BigInt c1 = to_integer(total[1]);
  BigInt c2 = to_integer(total[2]);
  return ChernNumbers{c1 * c1 * product, c2 * product, c1};
}

SurfaceInvariants complete_intersection(std::span<const long> degrees, long ambient_dim) {
  ChernNumbers chern = complete_intersection_chern(degrees, ambient_dim);
  SurfaceInvariants s = surface_from_chern(chern.c1_squared, chern.c2, 0);
  // K = -c1 = (sum a_i - N - 1) H is ample exactly when that multiple is positive.
  s.ample_canonical = chern.c1_hyperplane_multiple.sign() < 0;
  s.minimal_general_type = s.ample_canonical;
  s.simply_connected = true;
  s.c1_even = chern.c1_hyperplane_multiple % 2 == 0;
  validate(s);
  return s;
}

DoubleCoverChern double_cover_chern(const CoverBase& base, const BranchData& branch) {
  const BigInt& l2 = branch.half_class_self_int;
  const BigInt& lk = branch.half_class_dot_k;
  DoubleCoverChern out;
  // K_X = π*(K_Y + L), so K_X^2 = 2 (K_Y + L)^2.
  out.c1_squared = 2 * (base.canonical_squared + 2 * lk + l2);
  out.c2 = 2 * base.euler - branch.branch_euler;
  out.signature_from_branch = 2 * base.signature - 2 * l2;
  BigInt numerator = out.c1_squared - 2 * out.c2;
  if (numerator % 3 != 0)
    throw InconsistencyError("branch data gives non-integral signature (c1^2 - 2 c2)/3 = " + numerator.str() + "/3");
  out.signature_from_chern = numerator / 3;
  if (out.signature_from_chern != out.signature_from_branch)
    throw InconsistencyError("double cover signature mismatch: Chern route gives " + out.signature_from_chern.str() +
                             ", branch route gives " + out.signature_from_branch.str());
  return out;
}

SurfaceInvariants double_cover(const CoverBase& base, const BranchData& branch, const SurfaceFacts& facts) {
  DoubleCoverChern chern = double_cover_chern(base, branch);
  // q(X) = q(Y) + h^1(Y, -L); the second term vanishes for the ample L used here.
  SurfaceInvariants s = surface_from_chern(chern.c1_squared, chern.c2, base.irregularity);
  s.minimal_general_type = facts.minimal_general_type;
  s.ample_canonical = facts.ample_canonical;
  s.simply_connected = facts.simply_connected;
  s.c1_even = facts.c1_even;
  validate(s);
  return s;
}

CoverBase p1xp1_base() { return CoverBase{4, 0, 8, 0}; }

CoverBase blown_up_plane_base() { return CoverBase{4, 0, 8, 0}; }

BranchData p1xp1_branch(long a, long b) {
  if (a < 2 || b < 2 || a % 2 != 0 || b % 2 != 0)
    throw DomainError("branch bidegree (" + std::to_string(a) + "," + std::to_string(b) +
                      ") must consist of even numbers >= 2");
  BigInt la = a / 2;
  BigInt lb = b / 2;
  // On CP1 x CP1, (x,y)·(u,v) = xv + yu and K = (-2,-2); a smooth (a,b) curve has genus (a-1)(b-1).
  BranchData data;
  data.half_class_self_int = 2 * la * lb;
  data.half_class_dot_k = -2 * (la + lb);
  data.branch_euler = 2 - 2 * BigInt(a - 1) * BigInt(b - 1);
  return data;
}

SurfaceInvariants horikawa_p1xp1(long a, long b) {
  BranchData branch = p1xp1_branch(a, b);
  // K_Y + L = (a/2 - 2, b/2 - 2).
  SurfaceFacts facts;
  facts.ample_canonical = a / 2 - 2 >= 1 && b / 2 - 2 >= 1;
  facts.minimal_general_type = facts.ample_canonical;
  facts.simply_connected = true;
  facts.c1_even = (a / 2) % 2 == 0 && (b / 2) % 2 == 0;
  return double_cover(p1xp1_base(), branch, facts);
}

CurveClass proper_transform_genus(long d, long m) {
  if (d < 1 || m < 0 || m >= d)
    throw DomainError("proper transform needs d >= 1 and 0 <= m < d, got d=" + std::to_string(d) +
                      ", m=" + std::to_string(m));
  CurveClass c;
  c.self_intersection = BigInt(d) * d - BigInt(m) * m;
  c.dot_canonical = -3 * BigInt(d) + m;
  BigInt twice = c.self_intersection + c.dot_canonical;
  c.genus = twice / 2 + 1;
  if (c.genus.sign() < 0) throw DomainError("negative genus: curve class is not smoothable");
  return c;
}

SurfaceInvariants horikawa_plane10() {
  CurveClass curve = proper_transform_genus(10, 4);
  BranchData branch;
  branch.half_class_self_int = curve.self_intersection / 4;
  branch.half_class_dot_k = curve.dot_canonical / 2;
  branch.branch_euler = 2 - 2 * curve.genus;
  // K_Y + L = 2H - E: ample on the blown-up plane, not 2-divisible.
  SurfaceFacts facts{true, true, true, false};
  return double_cover(blown_up_plane_base(), branch, facts);
}

KodairaFibration kodaira_fibration(const KodairaData& data, bool branch_divisible_by_two) {
  if (data.base_genus < 2) throw DomainError("Kodaira fibration needs base genus >= 2");
  if (data.cover_degree < 1) throw DomainError("cover degree must be positive");
  if (!branch_divisible_by_two) throw NotApplicable("branch class is not divisible by 2; no double cover exists");

  const BigInt p = data.base_genus;
  const BigInt n = data.cover_degree;
  KodairaFibration out;
  out.cover_genus = n * (p - 1) + 1;
  const BigInt chi_base = 2 - 2 * p;
  const BigInt chi_cover = 2 - 2 * out.cover_genus;

  // Y = B x C. Each graph is a copy of C with self-intersection n(2 - 2p); the
  // two graphs are disjoint because ι has no fixed points.
  CoverBase base{chi_base * chi_cover, 0, 2 * (2 * p - 2) * (2 * out.cover_genus - 2), 0};
  BigInt graph_self = n * chi_base;
  BigInt graph_dot_k = (2 * out.cover_genus - 2) - graph_self;  // adjunction
  out.branch_self_intersection = 2 * graph_self;
  BranchData branch;
  branch.half_class_self_int = out.branch_self_intersection / 4;
  branch.half_class_dot_k = graph_dot_k;  // (2 Γ)·K / 2
  branch.branch_euler = 2 * chi_cover;

  DoubleCoverChern chern = double_cover_chern(base, branch);
  out.c1_squared = chern.c1_squared;
  out.signature_from_branch = -out.branch_self_intersection / 2;
  out.signature_from_chern = chern.signature_from_chern;
  if (out.signature_from_branch != chern.signature_from_branch)
    throw InconsistencyError("branch signature bookkeeping disagrees");

  out.top.euler = chern.c2;
  out.top.signature = chern.signature_from_chern;
  out.top.simply_connected = false;
  out.top.spin = false;

  // Fiber over a point of B: double cover of C branched at the 2n points of Σ over it.
  BigInt fiber_b_euler = 2 * chi_cover - 2 * n;
  out.fiber_genus_over_base = (2 - fiber_b_euler) / 2;
  // Fiber over a point of C: double cover of B branched at 2 points.
  BigInt fiber_c_euler = 2 * chi_base - 2;
  out.fiber_genus_over_cover = (2 - fiber_c_euler) / 2;
  return out;
}

}  // namespace surfgeo
