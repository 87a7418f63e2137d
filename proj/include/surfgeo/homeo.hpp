#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfgeo/invariants.hpp"
#include "surfgeo/rational.hpp"

namespace surfgeo {

enum class Parity { odd, even };

// Homeomorphism type of a closed simply connected 4-manifold with indefinite
// or definite form of the given rank, signature and parity.
struct HomeoClass {
  BigInt b_plus;
  BigInt b_minus;
  Parity parity = Parity::odd;

  friend bool operator==(const HomeoClass&, const HomeoClass&) = default;
};

// Odd forms render as "11 CP² # 53 CP̄²"; even forms as "(3, 19, even)".
std::string render(const HomeoClass& c);

HomeoClass homeo_class(const TopInvariants& t);
bool homeomorphic(const TopInvariants& a, const TopInvariants& b);

// Known misprints for a homeomorphism class, keyed by the class they refer to.
std::optional<std::string> class_discrepancy_note(const HomeoClass& c);

// Parameter grid for the Einstein / non-Einstein pair search. Ranges are
// inclusive; an empty range is one with first > last.
struct PairSearchSpace {
  long d_first = 1, d_last = 0;
  std::vector<std::vector<long>> complete_intersections;
  long k_first = 1, k_last = 0;
  // Branch bidegrees (a, b) with a <= b, both even, taken from this range.
  long bidegree_first = 1, bidegree_last = 0;
  bool include_plane10 = false;
};

struct HomeoPair {
  // Obstructed side X # k CP2bar.
  std::string obstructed_label;  // "6" or "ci(3;3)" as in the CSV `d` column
  std::string obstructed_expr;   // DSL text of X
  std::optional<long> degree;
  std::vector<long> ci_degrees;
  long k;
  // Einstein side.
  std::string partner;  // DSL text of N
  std::optional<long> a, b;
  TopInvariants topology;
  HomeoClass cls;
};

// Pairs (X # k CP2bar, N) with the first obstructed at threshold 1/3, N with
// ample canonical class, and equal homeomorphism classes. Sorted by
// (hypersurfaces by d, then complete intersections in input order), k, then
// partner (bidegree pairs lexicographically, the plane preset last).
std::vector<HomeoPair> find_pairs(const PairSearchSpace& space, unsigned threads = 0);

}  // namespace surfgeo
