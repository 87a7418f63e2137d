#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "surfgeo/errors.hpp"
#include "surfgeo/polynomial.hpp"
#include "surfgeo/power_series.hpp"

namespace surfgeo {

// Ratio of two polynomials in ε.
//
// Over Q the pair is reduced by an exact polynomial GCD and the denominator
// made monic. Over Q[ϱ] (not a field) only common powers of ε are cancelled;
// equality is decided by cross-multiplication in both cases.
template <class C>
class RationalFunction {
 public:
  using poly_type = Polynomial<C>;

  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const C& constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFunction(int constant) : num_(constant), den_(1) {}       // NOLINT
  RationalFunction(poly_type p) : num_(std::move(p)), den_(1) {}   // NOLINT
  RationalFunction(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    reduce();
  }

  static RationalFunction epsilon() { return RationalFunction(poly_type::variable()); }

  const poly_type& numerator() const noexcept { return num_; }
  const poly_type& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    return RationalFunction<D>(num_.map(f), den_.map(f));
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = poly_type(1);
      return;
    }
    if constexpr (is_field_v<C>) {
      poly_type g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
      C lead_inv = unit_inverse(den_.leading());
      num_ = num_.scaled(lead_inv);
      den_ = den_.scaled(lead_inv);
    } else {
      auto common = std::min(num_.valuation(), den_.valuation());
      if (common > 0) {
        num_ = num_.shift_down(static_cast<std::size_t>(common));
        den_ = den_.shift_down(static_cast<std::size_t>(common));
      }
    }
  }

  poly_type num_;
  poly_type den_;
};

template <class C>
struct LaurentExpansion {
  // f = ε^leading_power · series
  long leading_power;
  PowerSeries<C> series;
};

// Expands f = num / (ε^k q) with q(0) a unit, as ε^(-k) times a series in ε
// exact through `order`. Long division over exact coefficients.
template <class C>
LaurentExpansion<C> rf_laurent_expand(const RationalFunction<C>& f, std::size_t pole_order, std::size_t order) {
  const auto& den = f.denominator();
  for (std::size_t i = 0; i < pole_order; ++i)
    if (!surfgeo::is_zero(den.coeff(i)))
      throw PoleOrderMismatch("denominator is not divisible by ε^" + std::to_string(pole_order));
  Polynomial<C> q = den.shift_down(pole_order);
  if (surfgeo::is_zero(q.coeff(0)))
    throw PoleOrderMismatch("denominator vanishes to order higher than " + std::to_string(pole_order) + " at ε = 0");
  C q0_inv;
  try {
    q0_inv = unit_inverse(q.coeff(0));
  } catch (const DomainError&) {
    throw PoleOrderMismatch("reduced denominator has a non-invertible constant term");
  }
  // s = num / q, solved term by term: s_n = (num_n - sum_{i>=1} q_i s_{n-i}) / q_0.
  std::vector<C> s(order + 1, C(Rational(0)));
  for (std::size_t n = 0; n <= order; ++n) {
    C acc = f.numerator().coeff(n);
    for (std::size_t i = 1; i <= n; ++i) acc = acc - q.coeff(i) * s[n - i];
    s[n] = acc * q0_inv;
  }
  return {-static_cast<long>(pole_order), PowerSeries<C>(std::move(s), order)};
}

template <class C>
std::string to_string(const RationalFunction<C>& f, const std::string& var = "ε") {
  std::string n = to_string(f.numerator(), var);
  if (f.denominator() == Polynomial<C>(1)) return n;
  return "(" + n + ") / (" + to_string(f.denominator(), var) + ")";
}

}  // namespace surfgeo
