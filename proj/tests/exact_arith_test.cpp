#include <gtest/gtest.h>

#include <random>

#include "surfgeo/errors.hpp"
#include "surfgeo/polynomial.hpp"
#include "surfgeo/power_series.hpp"
#include "surfgeo/rational.hpp"
#include "surfgeo/rational_function.hpp"

using namespace surfgeo;

namespace {

using RF = RationalFunction<Rational>;
using RhoRF = RationalFunction<RationalPoly>;

Rational random_rational(std::mt19937& rng, int span = 20) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(rng), den(rng));
}

PowerSeries<Rational> random_unit_series(std::mt19937& rng, std::size_t order) {
  std::vector<Rational> c{Rational(1)};
  for (std::size_t i = 1; i <= order; ++i) c.push_back(random_rational(rng));
  return PowerSeries<Rational>(c, order);
}

}  // namespace

TEST(Rational, NormalizesSignAndLowestTerms) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).denominator(), 1);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(5).str(), "5");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError); }

TEST(Rational, ReciprocalOfZeroThrows) { EXPECT_THROW(Rational(0).reciprocal(), DomainError); }

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("25/57"), Rational(25, 57));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), Error);
}

TEST(Rational, HugeValuesStayExact) {
  BigInt big = BigInt(1) << 200;
  Rational r(big + 1, big);
  EXPECT_EQ((r - Rational(1)) * Rational(big), Rational(1));
}

TEST(RationalProperty, ArithmeticLawsAndLowestTerms) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    for (const Rational& r : {a + b, a * b, a - c}) {
      EXPECT_GT(r.denominator(), 0);
      EXPECT_EQ(boost::multiprecision::gcd(r.numerator(), r.denominator()), 1);
    }
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Polynomial, DivmodAndGcd) {
  RationalPoly x = RationalPoly::variable();
  RationalPoly f = (x - RationalPoly(1)) * (x + RationalPoly(2));
  RationalPoly g = (x - RationalPoly(1)) * (x * x + RationalPoly(3));
  EXPECT_EQ(gcd(f, g), x - RationalPoly(1));
  auto [q, r] = divmod(g, f);
  EXPECT_EQ(q * f + r, g);
  EXPECT_LT(r.degree(), f.degree());
  EXPECT_EQ(RationalPoly().degree(), -1);
}

TEST(Polynomial, RendersLowestPowerFirst) {
  RationalPoly p(std::vector<Rational>{Rational(3), Rational(9, 2)});
  EXPECT_EQ(to_string(p), "3 + 9/2ϱ");
  RationalPoly q(std::vector<Rational>{Rational(3), Rational(-27, 2)});
  EXPECT_EQ(to_string(q), "3 - 27/2ϱ");
  EXPECT_EQ(to_string(RationalPoly()), "0");
}

TEST(PowerSeries, SqrtRequiresUnitConstant) {
  PowerSeries<Rational> s({Rational(4), Rational(1)}, 3);
  EXPECT_THROW(series_sqrt(s), DomainError);
}

TEST(PowerSeries, InverseRequiresUnit) {
  PowerSeries<Rational> s({Rational(0), Rational(1)}, 3);
  EXPECT_THROW(series_inverse(s), DomainError);
}

TEST(PowerSeries, SqrtOfOnePlusEps) {
  PowerSeries<Rational> s({Rational(1), Rational(1)}, 4);
  auto t = series_sqrt(s);
  // binomial series for (1+x)^(1/2)
  EXPECT_EQ(t[1], Rational(1, 2));
  EXPECT_EQ(t[2], Rational(-1, 8));
  EXPECT_EQ(t[3], Rational(1, 16));
  EXPECT_EQ(t[4], Rational(-5, 128));
}

TEST(PowerSeriesProperty, SqrtSquaredIsIdentity) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> ord(0, 6);
  for (int i = 0; i < 500; ++i) {
    auto s = random_unit_series(rng, ord(rng));
    auto t = series_sqrt(s);
    ASSERT_EQ(t * t, s) << to_string(s);
  }
}

TEST(PowerSeriesProperty, InverseTimesSeriesIsOne) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto s = random_unit_series(rng, 5).scaled(Rational(3, 7));
    auto one = s * series_inverse(s);
    EXPECT_EQ(one, PowerSeries<Rational>({Rational(1)}, 5));
  }
}

TEST(PowerSeries, SqrtOverRhoPolynomials) {
  RationalPoly rho = RationalPoly::variable();
  PowerSeries<RationalPoly> s({RationalPoly(1), RationalPoly(3) + rho.scaled(Rational(9, 2))}, 1);
  auto t = series_sqrt(s);
  EXPECT_EQ(t[1], RationalPoly(Rational(3, 2)) + rho.scaled(Rational(9, 4)));
}

TEST(RationalFunction, ReducesOverRationals) {
  RF x = RF::epsilon();
  RF f = (x * x - RF(1)) / (x - RF(1));
  EXPECT_EQ(f.denominator(), RationalPoly(1));
  EXPECT_EQ(f, x + RF(1));
  EXPECT_THROW(RF(1) / RF(0), DomainError);
}

TEST(RationalFunction, LaurentPoleOrderMismatch) {
  RF x = RF::epsilon();
  EXPECT_THROW(rf_laurent_expand(RF(1) / (x * x), 1, 3), PoleOrderMismatch);
  EXPECT_THROW(rf_laurent_expand(RF(1) / x, 2, 3), PoleOrderMismatch);
}

TEST(RationalFunction, LaurentOfSimplePole) {
  RF x = RF::epsilon();
  auto e = rf_laurent_expand((RF(1) + x) / (x * (RF(1) - x)), 1, 3);
  EXPECT_EQ(e.leading_power, -1);
  // (1+x)/(1-x) = 1 + 2x + 2x^2 + 2x^3 + ...
  EXPECT_EQ(e.series, PowerSeries<Rational>({Rational(1), Rational(2), Rational(2), Rational(2)}, 3));
}

TEST(RationalFunctionProperty, LaurentRecomposition) {
  // num / (ε^k q) with q(0) ≠ 0: ε^k · f · q recovers num up to the order.
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pole(0, 3);
  for (int i = 0; i < 200; ++i) {
    std::size_t k = pole(rng);
    std::vector<Rational> nc, qc;
    for (int j = 0; j < 4; ++j) nc.push_back(random_rational(rng));
    qc.push_back(Rational(1 + static_cast<int>(rng() % 5)));
    for (int j = 0; j < 3; ++j) qc.push_back(random_rational(rng));
    RationalPoly num(nc), q(qc);
    if (num.is_zero()) continue;
    RF f(num, q.shift_up(k));
    // reduction may cancel common factors, so compare against f's own pole order
    std::size_t actual = static_cast<std::size_t>(f.denominator().valuation());
    auto e = rf_laurent_expand(f, actual, 6);
    auto qs = PowerSeries<Rational>::from_polynomial(f.denominator().shift_down(actual), 6);
    auto ns = PowerSeries<Rational>::from_polynomial(f.numerator(), 6);
    EXPECT_EQ(e.series * qs, ns);
  }
}

TEST(RationalFunction, RhoCoefficientsCancelEpsilonPowers) {
  RhoRF x = RhoRF::epsilon();
  RhoRF f = (x * x) / (x * x * x);
  EXPECT_EQ(f, RhoRF(1) / x);
  EXPECT_EQ(f.denominator().degree(), 1);
}
