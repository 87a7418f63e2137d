#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "surfgeo/invariants.hpp"

namespace surfgeo::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Piece {
  StandardPiece piece;
  friend bool operator==(const Piece&, const Piece&) = default;
};
struct Hypersurface {
  long degree;
  friend bool operator==(const Hypersurface&, const Hypersurface&) = default;
};
struct CompleteIntersection {
  std::vector<long> degrees;
  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;
};
struct HorikawaP1xP1 {
  long a, b;
  friend bool operator==(const HorikawaP1xP1&, const HorikawaP1xP1&) = default;
};
struct HorikawaPlane10 {
  friend bool operator==(const HorikawaPlane10&, const HorikawaPlane10&) = default;
};
struct Kodaira {
  long base_genus, cover_degree;
  friend bool operator==(const Kodaira&, const Kodaira&) = default;
};
struct BlowUp {
  ExprPtr inner;
  long k;
};
struct ConnSum {
  ExprPtr left, right;
};

// Construction AST. Connected sums are kept left-associated: the right
// operand of a ConnSum is never itself a ConnSum.
struct Expr {
  std::variant<Piece, Hypersurface, CompleteIntersection, HorikawaP1xP1, HorikawaPlane10, Kodaira, BlowUp, ConnSum>
      node;
};

bool operator==(const Expr& a, const Expr& b);

ExprPtr make(Expr e);
ExprPtr piece(StandardPiece p);
ExprPtr hypersurface(long d);
ExprPtr complete_intersection(std::vector<long> degrees);
ExprPtr horikawa_p1xp1(long a, long b);
ExprPtr horikawa_plane10();
ExprPtr kodaira(long p, long n);
ExprPtr blowup(ExprPtr inner, long k);
// Re-associates to the left when `right` is itself a connected sum.
ExprPtr conn_sum(ExprPtr left, ExprPtr right);

// Largest integer literal the parser accepts, and the largest n in n*piece.
inline constexpr long kMaxLiteral = 1'000'000;
inline constexpr long kMaxMultiplicity = 10'000;

// Grammar:
//   expr  := term ( "#" term )*
//   term  := int "*" piece | piece | func
//   piece := CP2 | CP2bar | K3 | T4 | S2xS2
//   func  := hypersurface(int) | ci(int, ...) | horikawa_p1xp1(int,int)
//          | kodaira(int,int) | blowup(expr,int) | horikawa_plane10
// Throws ParseError with a 1-based column.
ExprPtr parse(const std::string& source);

// Canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

FourManifold evaluate(const Expr& e);

}  // namespace surfgeo::dsl
