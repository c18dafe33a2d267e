/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/polynomial.hpp"
#include "koecher/quadrature.hpp"
#include "koecher/special.hpp"
#include "koecher/summation.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace testing;
namespace bmp = boost::multiprecision;

TEST_CASE("precision context") {
  const PrecisionContext c = digits(30);
  CHECK(c.guard_digits == 20);
  CHECK(c.working_digits() == 50);
  CHECK(digits(30, 10'000'000'000LL).guard_digits == 20);
  CHECK(digits(30, 100'000'000'000LL).guard_digits == 21);
  PrecisionContext bad = c;
  bad.guard_digits = 3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("nested precision scopes restore the default") {
  const unsigned before = Real::default_precision();
  {
    PrecisionScope a(60);
    CHECK(Real::default_precision() == 60);
    {
      PrecisionScope b(100);
      CHECK(Real::default_precision() == 100);
    }
    CHECK(Real::default_precision() == 60);
  }
  CHECK(Real::default_precision() == before);
}

TEST_CASE("BigReal error propagation") {
  PrecisionScope s(50);
  const BigReal a(Real(1), Real("1e-20"));
  const BigReal b(Real(2), Real("1e-20"));
  CHECK((a + b).err() >= Real("2e-20"));
  CHECK((a * b).err() >= Real("3e-20"));
  CHECK(consistent(a, BigReal(Real("1.000000000000000000005")), Real(0)));
  CHECK_FALSE(consistent(a, BigReal(Real("1.00000000000000000002")), Real(0)));
  const BigReal third = BigReal::from_rational(q(1, 3));
  CHECK(bmp::abs(third.value() * 3 - 1) <= third.err() * 3);
}

TEST_CASE("exact helpers") {
  CHECK(parse_decimal("0.25") == q(1, 4));
  CHECK(parse_decimal("-3.7") == q(-37, 10));
  CHECK(parse_decimal("1e-3") == q(1, 1000));
  CHECK_THROWS(parse_decimal("1.2.3"));
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(reciprocal_factorial(-1) == 0);
  CHECK(pow_int(q(2, 3), -2) == q(9, 4));
  CHECK(exact_power(q(9, 4), q(1, 2)) == q(3, 2));
  CHECK_FALSE(exact_power(q(2), q(1, 2)).has_value());
  CHECK(to_string(q(-6, 4)) == "-3/2");
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(4) == q(-1, 30));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), DomainError);
  // sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1
  for (long n = 2; n <= 40; ++n) {
    BigRational s = 0;
    for (long j = 0; j <= n; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      const BigRational b = j == 1 ? q(-1, 2) : bernoulli(j);
      s += BigRational(binomial(n + 1, j)) * b;
    }
    CHECK(s == 0);
  }
}

TEST_CASE("zeta_reference and pi_reference") {
  const PrecisionContext c = digits(40);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  check_close(zeta_reference(Real(3), c), oracle::kZeta3, tol);
  check_close(zeta_reference(Real(5), c), oracle::kZeta5, tol);
  check_close(pi_reference(c), oracle::kPi, tol);
  const BigReal pi = pi_reference(c);
  check_consistent(pi * pi / BigReal(6L), zeta_reference(Real(2), c));
  check_consistent(pi * pi * pi * pi / BigReal(90L), zeta_reference(Real(4), c));
  CHECK(pi_reference(digits(30)).str(29) == "3.14159265358979323846264338328e+00");
  for (long n = 1; n <= 5; ++n) check_consistent(zeta_even_closed_form(n, c), zeta_reference(Real(2 * n), c));
  const BigReal pi6 = pi * pi * pi * pi * pi * pi;
  check_consistent(zeta_even_closed_form(3, c), pi6 / BigReal(945L));
}

TEST_CASE("hurwitz zeta") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  // zeta(3, 2) = zeta(3) - 1
  check_close(hurwitz_zeta(Real(3), Real(2), c) + BigReal(1L), oracle::kZeta3, c.tolerance());
  // large s takes the direct path: zeta(60, 1) = 1 + 2^-60 + ...
  const BigReal big = hurwitz_zeta(Real(60), Real(1), c);
  CHECK(bmp::abs(big.value() - 1 - bmp::pow(Real(2), -60)) < Real("1e-28"));
  CHECK_THROWS_AS(hurwitz_zeta(Real(1), Real(1), c), DomainError);
}

TEST_CASE("digamma") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  const BigReal g(Real(oracle::kEulerGamma));
  check_close(digamma(Real(1), c), -g, tol);
  check_close(digamma(Real(2), c), BigReal(1L) - g, tol);
  // duplication at y = 3/2
  const BigReal lhs = digamma(Real(3), c);
  const BigReal rhs = (digamma(Real(1.5), c) + digamma(Real(2), c)) / BigReal(2L) + BigReal(Real(bmp::log(Real(2))));
  check_close(lhs, rhs, tol);

  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int i = 0; i < 20; ++i) {
    const Real z(dist(rng));
    const BigReal step = digamma(Real(z + 1), c) - digamma(z, c) - BigReal(Real(1 / z));
    CHECK(bmp::abs(step.value()) <= 10 * step.err() + tol);
  }
}

TEST_CASE("recomputing at higher precision stays inside the reported error") {
  const PrecisionContext lo = digits(30);
  const PrecisionContext hi = digits(50);
  PrecisionScope s(hi);
  auto check_refine = [](const BigReal& a, const BigReal& b) {
    INFO("lo = " << a << ", hi = " << b);
    CHECK(bmp::abs(a.value() - b.value()) <= a.err());
  };
  check_refine(zeta_reference(Real(3), lo), zeta_reference(Real(3), hi));
  check_refine(digamma(Real("3.7"), lo), digamma(Real("3.7"), hi));
  check_refine(pi_reference(lo), pi_reference(hi));
  check_refine(hurwitz_zeta(Real(2.5), Real(0.75), lo), hurwitz_zeta(Real(2.5), Real(0.75), hi));
}

TEST_CASE("double exponential quadrature") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  check_close(de_quadrature([](const Real&) { return Real(1); }, Real(0), Real(1), c).value, BigReal(1L), tol);
  const BigReal pi = pi_reference(c);
  check_close(de_quadrature([](const Real& x) { return Real(bmp::log1p(x) / x); }, Real(0), Real(1), c).value,
              pi * pi / BigReal(12L), tol);
  check_close(de_quadrature([](const Real& x) { return Real(bmp::log1p(x)); }, Real(0), Real(1), c).value,
              BigReal(Real(2 * bmp::log(Real(2)) - 1)), tol);
  // exp-sinh on [0, inf): int t^2 e^-t = 2
  check_close(
      de_quadrature([](const Real& t) { return Real(t * t * bmp::exp(-t)); }, Real(0), infinity(), c).value,
      BigReal(2L), tol);
}

TEST_CASE("series accumulator") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const SeriesValue geo = sum_series([](std::int64_t n) { return BigReal(Real(bmp::pow(Real(2), -n))); }, 1, c);
  check_close(geo.value, BigReal(1L), c.tolerance());
  CHECK(geo.terms_used < 120);
  CHECK_FALSE(geo.tail_rule.empty());

  const SeriesValue e_inv = sum_series(
      [](std::int64_t n) {
        Real f(1);
        for (std::int64_t i = 2; i <= n; ++i) f *= i;
        return BigReal(Real((n % 2 ? -1 : 1) / f));
      },
      0, c);
  check_close(e_inv.value, BigReal(Real(bmp::exp(Real(-1)))), c.tolerance());

  const PrecisionContext small = digits(30, 2000);
  CHECK_THROWS_AS(sum_series([](std::int64_t n) { return BigReal(Real(Real(1) / n)); }, 1, small), AccuracyError);
}

TEST_CASE("polynomials") {
  const RationalPolynomial p = RationalPolynomial::linear_factor(q(1)) * RationalPolynomial::linear_factor(q(-2));
  CHECK(p.coefficients() == std::vector<BigRational>{q(-2), q(1), q(1)});
  CHECK(p(q(3)) == 10);
  const RationalPolynomial fit = interpolate({q(0), q(1), q(2)}, {q(-2), q(0), q(4)});
  CHECK(fit == p);
  const auto ip = IntPolynomial::from_rational(p);
  REQUIRE(ip.has_value());
  CHECK(ip->to_csv() == "-2,1,1");
  CHECK_FALSE(IntPolynomial::from_rational(p * q(1, 2)).has_value());
  CHECK(p.truncated(1).degree() == 1);
}
