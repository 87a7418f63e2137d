#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surfgeo/errors.hpp"
#include "surfgeo/rational.hpp"

namespace surfgeo {

// What the polynomial, series and rational-function templates need from a
// coefficient: a commutative ring with an embedding of Q and a way to invert
// units. Rational and Polynomial<Rational> both qualify.
template <class C>
concept Coefficient = requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { unit_inverse(a) } -> std::convertible_to<C>;
  C(Rational(1));
};

template <class C>
inline constexpr bool is_field_v = std::is_same_v<C, Rational>;

template <class C>
class Polynomial;
template <class C>
bool is_zero(const Polynomial<C>& p);
template <class C>
Polynomial<C> unit_inverse(const Polynomial<C>& p);

// Dense univariate polynomial, coefficients stored from the constant term up.
// Trailing zero coefficients are never stored, so the zero polynomial is empty.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;
  Polynomial(const C& constant) : coeffs_{constant} { trim(); }  // NOLINT
  Polynomial(int constant) : Polynomial(C(Rational(constant))) {}  // NOLINT
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const C& c, std::size_t power) {
    std::vector<C> v(power + 1, C(Rational(0)));
    v[power] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(C(Rational(1)), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<C>& coefficients() const noexcept { return coeffs_; }

  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(Rational(0)); }
  C leading() const { return is_zero() ? C(Rational(0)) : coeffs_.back(); }

  // Index of the lowest nonzero coefficient; -1 for zero.
  long valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!surfgeo::is_zero(coeffs_[i])) return static_cast<long>(i);
    return -1;
  }

  // Exact division by x^k. The k lowest coefficients must vanish.
  Polynomial shift_down(std::size_t k) const {
    for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i)
      if (!surfgeo::is_zero(coeffs_[i])) throw DomainError("polynomial not divisible by x^k");
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<C>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
  }

  Polynomial shift_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> v(k, C(Rational(0)));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  template <class X>
  X evaluate(const X& x) const {
    X acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<D> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return Polynomial<D>(std::move(v));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), C(Rational(0)));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(Rational(0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial scaled(const C& s) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && surfgeo::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

// Units of C[x] are the nonzero constants whose value is a unit of C.
template <class C>
Polynomial<C> unit_inverse(const Polynomial<C>& p) {
  if (p.degree() != 0) throw DomainError("polynomial is not a unit");
  return Polynomial<C>(unit_inverse(p.coeff(0)));
}

// Quotient and remainder over a field.
template <class C>
  requires is_field_v<C>
std::pair<Polynomial<C>, Polynomial<C>> divmod(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial<C> q;
  Polynomial<C> r = a;
  const C lead_inv = unit_inverse(b.leading());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    Polynomial<C> term = Polynomial<C>::monomial(r.leading() * lead_inv, shift);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

template <class C>
  requires is_field_v<C>
Polynomial<C> monic(const Polynomial<C>& p) {
  if (p.is_zero()) return p;
  return p.scaled(unit_inverse(p.leading()));
}

// Monic greatest common divisor (zero if both inputs are zero).
template <class C>
  requires is_field_v<C>
Polynomial<C> gcd(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

namespace detail {

inline std::string render_coefficient(const Rational& c, bool& is_compound) {
  is_compound = false;
  return c.str();
}

template <class C>
std::string render_coefficient(const Polynomial<C>& c, bool& is_compound);

inline bool is_negative_constant(const Rational& c) { return c.sign() < 0; }
template <class C>
bool is_negative_constant(const Polynomial<C>&) {
  return false;
}

}  // namespace detail

// Human-readable form, lowest power first: "3 + 9/2ϱ", "1 - ε^2".
template <class C>
std::string to_string(const Polynomial<C>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const C& c = p.coefficients()[i];
    if (surfgeo::is_zero(c)) continue;
    bool negative = detail::is_negative_constant(c);
    C mag = negative ? -c : c;
    bool compound = false;
    std::string body = detail::render_coefficient(mag, compound);
    if (compound && i > 0) body = "(" + body + ")";
    if (i > 0 && body == "1") body.clear();
    if (i == 1) body += var;
    if (i > 1) body += var + "^" + std::to_string(i);
    if (first) {
      out = (negative ? "-" : "") + body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

// Polynomial<Rational> coefficients are always rendered in ϱ.
inline std::string to_string(const RationalPoly& p) { return to_string(p, "ϱ"); }

template <class C>
std::string detail::render_coefficient(const Polynomial<C>& c, bool& is_compound) {
  auto nonzero = std::count_if(c.coefficients().begin(), c.coefficients().end(),
                               [](const C& x) { return !surfgeo::is_zero(x); });
  std::string s = to_string(c);
  is_compound = nonzero > 1 || s.front() == '-';
  return s;
}

}  // namespace surfgeo
