#include "surfgeo/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "surfgeo/errors.hpp"

namespace surfgeo {

namespace {

BigInt abs_value(const BigInt& v) { return v.sign() < 0 ? BigInt(-v) : v; }

bool is_even(const BigInt& v) { return (v % 2) == 0; }

void check_k(long k) {
  if (k < 1) throw DomainError("blow-up count must be positive, got " + std::to_string(k));
}

}  // namespace

std::optional<BigInt> TopInvariants::b2() const {
  if (!b1) return std::nullopt;
  return euler - 2 + 2 * *b1;
}

std::optional<BigInt> TopInvariants::b_plus() const {
  auto b = b2();
  if (!b) return std::nullopt;
  return (*b + signature) / 2;
}

std::optional<BigInt> TopInvariants::b_minus() const {
  auto b = b2();
  if (!b) return std::nullopt;
  return (*b - signature) / 2;
}

void validate(const TopInvariants& t) {
  if (t.simply_connected && t.b1 && *t.b1 != 0) throw InconsistencyError("simply connected manifold with b1 != 0");
  if (t.simply_connected && !t.b1) throw InconsistencyError("simply connected manifold must have b1 = 0");
  if (!t.b1) return;
  if (t.b1->sign() < 0) throw InconsistencyError("negative b1");
  BigInt b2 = *t.b2();
  if (b2 < abs_value(t.signature))
    throw InconsistencyError("b2 = " + b2.str() + " is smaller than |τ| = " + abs_value(t.signature).str());
  if (!is_even(b2 - t.signature)) throw InconsistencyError("b2 and τ have different parity");
}

void validate(const SurfaceInvariants& s) {
  if (s.irregularity.sign() < 0 || s.geometric_genus.sign() < 0)
    throw InconsistencyError("negative irregularity or geometric genus");
  if (s.c1_squared + s.c2 != 12 * s.holomorphic_euler())
    throw InconsistencyError("Noether identity fails: c1^2 + c2 = " + BigInt(s.c1_squared + s.c2).str() +
                             " but 12·χ_h = " + BigInt(12 * s.holomorphic_euler()).str());
  if ((s.c1_squared - 2 * s.c2) % 3 != 0) throw InconsistencyError("signature (c1^2 - 2 c2)/3 is not an integer");
  if (s.simply_connected && s.irregularity != 0) throw InconsistencyError("simply connected surface with q != 0");
  validate(TopInvariants{s.c2, (s.c1_squared - 2 * s.c2) / 3, BigInt(2 * s.irregularity), s.simply_connected,
                         s.c1_even});
}

SurfaceInvariants surface_from_chern(BigInt c1_squared, BigInt c2, BigInt q) {
  BigInt total = c1_squared + c2;
  if (total % 12 != 0)
    throw InconsistencyError("c1^2 + c2 = " + total.str() + " is not divisible by 12");
  SurfaceInvariants s;
  s.c1_squared = std::move(c1_squared);
  s.c2 = std::move(c2);
  s.irregularity = q;
  s.geometric_genus = total / 12 - 1 + q;
  validate(s);
  return s;
}

TopInvariants derive_topology(const SurfaceInvariants& s) {
  if ((s.c1_squared - 2 * s.c2) % 3 != 0) throw InconsistencyError("signature (c1^2 - 2 c2)/3 is not an integer");
  TopInvariants t{s.c2, (s.c1_squared - 2 * s.c2) / 3, BigInt(2 * s.irregularity), s.simply_connected, s.c1_even};
  validate(t);
  return t;
}

FourManifold FourManifold::from_surface(const SurfaceInvariants& s) {
  return FourManifold{derive_topology(s), s, s.c1_squared};
}

TopInvariants blow_up(const TopInvariants& t, long k) {
  check_k(k);
  TopInvariants r = t;
  r.euler += k;
  r.signature -= k;
  r.spin = false;
  return r;
}

SurfaceInvariants blow_up(const SurfaceInvariants& s, long k) {
  check_k(k);
  SurfaceInvariants r = s;
  r.c1_squared -= k;
  r.c2 += k;
  r.minimal_general_type = false;
  r.ample_canonical = false;
  r.c1_even = false;
  validate(r);
  return r;
}

FourManifold blow_up(const FourManifold& m, long k) {
  FourManifold r;
  r.top = blow_up(m.top, k);
  if (m.surface) r.surface = blow_up(*m.surface, k);
  if (m.c1_squared) r.c1_squared = *m.c1_squared - k;
  return r;
}

TopInvariants connected_sum(const TopInvariants& a, const TopInvariants& b) {
  TopInvariants r;
  r.euler = a.euler + b.euler - 2;
  r.signature = a.signature + b.signature;
  if (a.b1 && b.b1) r.b1 = *a.b1 + *b.b1;
  r.simply_connected = a.simply_connected && b.simply_connected;
  r.spin = a.spin && b.spin;
  return r;
}

FourManifold connected_sum(const FourManifold& a, const FourManifold& b) {
  return FourManifold{connected_sum(a.top, b.top), std::nullopt, std::nullopt};
}

FourManifold standard_piece(StandardPiece piece) {
  auto complex_piece = [](long c1sq, long c2, long q, bool sc, bool even) {
    SurfaceInvariants s = surface_from_chern(c1sq, c2, q);
    s.simply_connected = sc;
    s.c1_even = even;
    return FourManifold::from_surface(s);
  };
  switch (piece) {
    case StandardPiece::cp2:
      return complex_piece(9, 3, 0, true, false);
    case StandardPiece::cp2_bar:
      return FourManifold{TopInvariants{3, -1, BigInt(0), true, false}, std::nullopt, std::nullopt};
    case StandardPiece::k3:
      return complex_piece(0, 24, 0, true, true);
    case StandardPiece::t4:
      return complex_piece(0, 0, 2, false, true);
    case StandardPiece::s2xs2:
      return complex_piece(8, 4, 0, true, true);
  }
  throw DomainError("unknown standard piece");
}

std::string piece_name(StandardPiece piece) {
  switch (piece) {
    case StandardPiece::cp2:
      return "CP2";
    case StandardPiece::cp2_bar:
      return "CP2bar";
    case StandardPiece::k3:
      return "K3";
    case StandardPiece::t4:
      return "T4";
    case StandardPiece::s2xs2:
      return "S2xS2";
  }
  return "?";
}

std::optional<StandardPiece> piece_from_name(const std::string& name) {
  for (auto p : {StandardPiece::cp2, StandardPiece::cp2_bar, StandardPiece::k3, StandardPiece::t4,
                 StandardPiece::s2xs2})
    if (piece_name(p) == name) return p;
  return std::nullopt;
}

std::string to_string(HitchinThorpe h) {
  switch (h) {
    case HitchinThorpe::strict:
      return "strict";
    case HitchinThorpe::equality:
      return "equality";
    case HitchinThorpe::violated:
      return "violated";
  }
  return "?";
}

}  // namespace surfgeo
