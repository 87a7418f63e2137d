#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfgeo/rational.hpp"

namespace surfgeo {

// Homotopy-level data of a closed oriented 4-manifold.
//
// b1 is optional because some constructions (Kodaira fibrations) do not pin it
// down; b2 and b± are only available when it is known.
struct TopInvariants {
  BigInt euler;
  BigInt signature;
  std::optional<BigInt> b1;
  bool simply_connected = false;
  bool spin = false;

  std::optional<BigInt> b2() const;
  std::optional<BigInt> b_plus() const;
  std::optional<BigInt> b_minus() const;

  friend bool operator==(const TopInvariants&, const TopInvariants&) = default;
};

// Throws InconsistencyError when the Betti-number laws fail.
void validate(const TopInvariants& t);

// Chern numbers and Hodge data of a compact complex surface, together with the
// boolean facts the constructors assert about it.
struct SurfaceInvariants {
  BigInt c1_squared;
  BigInt c2;
  BigInt irregularity;     // q
  BigInt geometric_genus;  // p_g
  bool minimal_general_type = false;
  bool ample_canonical = false;
  bool simply_connected = false;
  // c1 is divisible by 2 in H^2(X; Z), i.e. the surface is spin.
  bool c1_even = false;

  BigInt holomorphic_euler() const { return 1 - irregularity + geometric_genus; }
  BigInt b_plus() const { return 1 + 2 * geometric_genus; }

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

// Noether identity, integral signature, b2 >= |τ|. Throws InconsistencyError.
void validate(const SurfaceInvariants& s);

// Fills p_g from the Noether identity and validates the result.
SurfaceInvariants surface_from_chern(BigInt c1_squared, BigInt c2, BigInt q);

TopInvariants derive_topology(const SurfaceInvariants& s);

// A manifold as the evaluator sees it: topology always, complex data when the
// construction is a complex surface, and c1^2 of an almost-complex structure
// when known without the full Hodge data.
struct FourManifold {
  TopInvariants top;
  std::optional<SurfaceInvariants> surface;
  std::optional<BigInt> c1_squared;

  static FourManifold from_surface(const SurfaceInvariants& s);
};

TopInvariants blow_up(const TopInvariants& t, long k);
SurfaceInvariants blow_up(const SurfaceInvariants& s, long k);
FourManifold blow_up(const FourManifold& m, long k);

TopInvariants connected_sum(const TopInvariants& a, const TopInvariants& b);
FourManifold connected_sum(const FourManifold& a, const FourManifold& b);

enum class StandardPiece { cp2, cp2_bar, k3, t4, s2xs2 };

FourManifold standard_piece(StandardPiece piece);
// "CP2", "CP2bar", "K3", "T4", "S2xS2".
std::string piece_name(StandardPiece piece);
std::optional<StandardPiece> piece_from_name(const std::string& name);

enum class HitchinThorpe { strict, equality, violated };
std::string to_string(HitchinThorpe h);

struct Verdict {
  std::string criterion;
  bool holds;
  std::string provenance;
};

struct ObstructionReport {
  HitchinThorpe hitchin_thorpe = HitchinThorpe::strict;
  std::optional<Rational> sw_blowup_threshold;
  std::vector<Verdict> verdicts;
};

}  // namespace surfgeo
