#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "surfgeo/errors.hpp"
#include "surfgeo/polynomial.hpp"
#include "surfgeo/rational.hpp"

namespace surfgeo {

// Truncated Taylor series c_0 + c_1 ε + ... + c_N ε^N + O(ε^(N+1)).
// Coefficients above the truncation order are unknown, not zero, so every
// binary operation truncates to the smaller order of its operands.
template <class C>
class PowerSeries {
 public:
  using coefficient_type = C;

  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, C(Rational(0))) {}

  PowerSeries(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, C(Rational(0)));
  }

  // Expansion of a polynomial (exact up to `order`).
  static PowerSeries from_polynomial(const Polynomial<C>& p, std::size_t order) {
    PowerSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p.coeff(i);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<C>& coefficients() const noexcept { return coeffs_; }
  const C& operator[](std::size_t i) const { return coeffs_.at(i); }

  PowerSeries truncated(std::size_t order) const {
    if (order > this->order()) throw DomainError("cannot extend a series beyond its truncation order");
    return PowerSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1), order);
  }

  Polynomial<C> to_polynomial() const { return Polynomial<C>(coeffs_); }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<D> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(f(c));
    return PowerSeries<D>(std::move(v), order());
  }

  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i)
      for (std::size_t j = 0; j + i <= r.order(); ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return r;
  }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  PowerSeries scaled(const C& s) const {
    PowerSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
  }

 private:
  std::vector<C> coeffs_;
};

// 1/s; the constant term must be a unit of C.
template <class C>
PowerSeries<C> series_inverse(const PowerSeries<C>& s) {
  const C inv0 = unit_inverse(s[0]);
  std::vector<C> t(s.order() + 1, C(Rational(0)));
  t[0] = inv0;
  for (std::size_t n = 1; n <= s.order(); ++n) {
    C acc(Rational(0));
    for (std::size_t i = 1; i <= n; ++i) acc = acc + s[i] * t[n - i];
    t[n] = -(acc * inv0);
  }
  return PowerSeries<C>(std::move(t), s.order());
}

// Square root of a series with constant term 1, via the recursion
// 2 t_n = s_n - sum_{i=1}^{n-1} t_i t_{n-i}.
template <class C>
PowerSeries<C> series_sqrt(const PowerSeries<C>& s) {
  if (!(s[0] == C(Rational(1))))
    throw DomainError("series_sqrt needs constant term 1 (the expansion is not normalized)");
  const C half(Rational(1, 2));
  std::vector<C> t(s.order() + 1, C(Rational(0)));
  t[0] = C(Rational(1));
  for (std::size_t n = 1; n <= s.order(); ++n) {
    C acc = s[n];
    for (std::size_t i = 1; i < n; ++i) acc = acc - t[i] * t[n - i];
    t[n] = acc * half;
  }
  return PowerSeries<C>(std::move(t), s.order());
}

template <class C>
std::string to_string(const PowerSeries<C>& s, const std::string& var = "ε") {
  std::string body = to_string(s.to_polynomial(), var);
  std::string tail = "O(" + var + (s.order() + 1 == 1 ? "" : "^" + std::to_string(s.order() + 1)) + ")";
  return body + " + " + tail;
}

}  // namespace surfgeo
