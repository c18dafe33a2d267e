/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/special.hpp"
#include "koecher/transform.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing;
namespace bmp = boost::multiprecision;

namespace {

TransformInstance inst(ZSequence seq, BigRational alpha, BigRational x) {
  return TransformInstance{std::move(seq), std::move(alpha), std::move(x)};
}

std::vector<TransformInstance> sample_kinds(const BigRational& x) {
  return {inst(ZSequence::shifted_square(0), q(1, 2), x), inst(ZSequence::shifted_square(2), q(1, 2), x),
          inst(ZSequence::half_square(), q(0), x), inst(ZSequence::power_shift(q(1, 2), q(1), q(5, 2)), q(1, 3), x)};
}

// prod_{l <= n} (x - z_l)
BigReal x_product(const TransformInstance& t, long n, const PrecisionContext& c) {
  BigReal p(1L);
  const BigReal x = BigReal::from_rational(t.x);
  for (long l = 1; l <= n; ++l) p *= x - z_value(t.seq, l, c);
  return p;
}

}  // namespace

TEST_CASE("telescoping tails") {
  CHECK(telescoping_tail(0, 1) == q(1, 4));
  CHECK(telescoping_tail(0, 2) == q(1, 96));
  CHECK(telescoping_tail(2, 1) == q(1, 24));
  CHECK(telescoping_partial(0, 1, 2) == q(1, 6));
  CHECK(telescoping_partial(0, 1, 5) == q(7, 30));
  CHECK(telescoping_partial(1, 1, 3) == q(7, 120));
  bool ok = true;
  for (long r = 0; r <= 4; ++r)
    for (long k = 1; k <= 5; ++k)
      for (long N = k + 1; N <= k + 50; ++N)
        if (telescoping_partial(r, k, N) != telescoping_partial_closed(r, k, N)) ok = false;
  CHECK(ok);
}

TEST_CASE("series tails") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  CHECK(series_tail_exact(ZSequence::shifted_square(0), q(1, 2), 1) == q(1, 4));
  CHECK(series_tail_exact(ZSequence::linear(q(0)), q(1), 3) == q(1, 18));
  CHECK(series_tail_exact(ZSequence::half_square(), q(0), 1) == q(11, 18));
  CHECK(series_tail_exact(ZSequence::shifted_square(1), q(1, 2), 1) == q(11, 96));
  CHECK_FALSE(series_tail_exact(ZSequence::power_shift(q(1, 2), q(1), q(5, 2)), q(1, 3), 1).has_value());
  const SeriesValue exact = series_tail(ZSequence::shifted_square(3), q(1, 2), 2, c);
  CHECK(exact.tail_rule == "closed-form");
  check_close(exact.value, oracle::kTailK2C3, c.tolerance());
  // the numeric route agrees with the closed form
  const ZSequence sq1 = ZSequence::shifted_square(1);
  check_close(shifted_product_sum(sq1, Real(0.5), {Real(4)}, 2, c), oracle::kTailK1C1, c.tolerance());
  CHECK(series_tail(ZSequence::power_shift(q(1, 2), q(1), q(5, 2)), q(1, 3), 2, c).tail_rule ==
        "hurwitz-expansion");
}

TEST_CASE("gamma_k values") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  check_close(gamma_k(inst(ZSequence::shifted_square(0), q(1, 2), q(0)), 1, c), BigReal(Real(1.25)), tol);
  check_close(gamma_k(inst(ZSequence::linear(q(0)), q(1), q(0)), 2, c), BigReal(Real(0.5)), tol);
  check_close(gamma_k(inst(ZSequence::half_square(), q(0), q(0)), 1, c), BigReal::from_rational(q(19, 18)), tol);
  // z_n = n^2, alpha = 1/2: gamma_k(x) = (5k^2 - x) / (2k (2k)! (k^2 - x))
  for (long k = 1; k <= 6; ++k) {
    const BigRational x = q(1, 7);
    const BigRational expect = (5 * k * k - x) / (2 * k * BigRational(factorial(2 * k)) * (k * k - x));
    check_close(gamma_k(inst(ZSequence::shifted_square(0), q(1, 2), x), k, c), BigReal::from_rational(expect), tol);
  }
  // z_n = (n+1/2)^2, alpha = 0: the x^0 part plus the geometric series in 4x/(2k+1)^2
  for (long k = 1; k <= 6; ++k) {
    const BigRational x = q(1, 5);
    const BigRational f = BigRational(factorial(2 * k + 1));
    const BigRational r = 4 * x / ((2 * k + 1) * (2 * k + 1));
    const BigRational expect = BigRational(10 * k * k * k + 9 * k * k - k + 1) / ((2 * k - 1) * (2 * k + 1) * f) +
                               BigRational(4 * k * (k + 1)) / ((2 * k + 1) * f) * r / (1 - r);
    check_close(gamma_k(inst(ZSequence::half_square(), q(0), x), k, c), BigReal::from_rational(expect), tol);
  }
  CHECK_THROWS_AS(gamma_k(inst(ZSequence::shifted_square(0), q(1, 2), q(4)), 2, c), ConditioningError);
}

TEST_CASE("instance validation") {
  CHECK_NOTHROW(inst(ZSequence::shifted_square(0), q(1, 2), q(1, 2)).validate());
  CHECK_THROWS_AS(inst(ZSequence::shifted_square(0), q(1, 2), q(1)).validate(), DomainError);
  CHECK_THROWS_AS(inst(ZSequence::shifted_square(0), q(-1), q(0)).validate(), DomainError);
  CHECK_THROWS_AS(inst(ZSequence::linear(q(0)), q(1), q(3, 4)).validate(), DomainError);
  CHECK_THROWS_AS(inst(ZSequence::custom({q(1), q(2)}, q(1)), q(1), q(0)).validate(), UnsupportedError);
}

TEST_CASE("accelerated and direct sums") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  const SeriesValue z3 = accelerated_sum(inst(ZSequence::shifted_square(0), q(1, 2), q(0)), c);
  check_close(z3.value, oracle::kZeta3, tol);
  CHECK(z3.terms_used <= 80);
  check_consistent(z3.value, markov_zeta3_series(c).value);
  check_close(lhs_sum(inst(ZSequence::shifted_square(0), q(1, 2), q(0)), c).value, oracle::kZeta3, tol);
  check_close(lhs_sum(inst(ZSequence::linear(q(0)), q(2), q(0)), c).value, oracle::kZeta3, tol);
  check_close(lhs_sum(inst(ZSequence::half_square(), q(0), q(0)), c).value,
              BigReal(3L) * zeta_reference(Real(2), c) - BigReal(4L), tol);

  const char* oracles[] = {oracle::kDirectSumAt0_1, oracle::kDirectSumAt0_25, oracle::kDirectSumAt0_5};
  const BigRational xs[] = {q(1, 10), q(1, 4), q(1, 2)};
  for (int i = 0; i < 3; ++i) {
    const TransformInstance t = inst(ZSequence::shifted_square(0), q(1, 2), xs[i] * xs[i]);
    const SeriesValue acc = accelerated_sum(t, c);
    check_close(acc.value, oracles[i], tol);
    check_close(lhs_sum(t, c).value, oracles[i], tol);
    check_close(koecher_series(xs[i], c).value, acc.value, tol);
  }
  const TransformInstance ps = inst(ZSequence::power_shift(q(1, 2), q(1), q(5, 2)), q(1, 3), q(1, 5));
  check_close(accelerated_sum(ps, c).value, oracle::kPowerShiftLhs, tol);
  check_close(lhs_sum(ps, c).value, oracle::kPowerShiftLhs, tol);
}

TEST_CASE("linear kind at low precision") {
  const PrecisionContext c = digits(6);
  PrecisionScope s(c);
  const SeriesValue z2 = accelerated_sum(inst(ZSequence::linear(q(0)), q(1), q(0)), c);
  check_close(z2.value, zeta_reference(Real(2), digits(30)), c.tolerance());
  // 30 digits is out of reach for terms of size 1/k^2
  CHECK_THROWS_AS(accelerated_sum(inst(ZSequence::linear(q(0)), q(1), q(0)), digits(30)), AccuracyError);
}

TEST_CASE("both sides agree across sampled x") {
  const PrecisionContext c = digits(20);
  PrecisionScope s(c);
  for (int i = 0; i < 10; ++i) {
    const BigRational x = q(2 * i - 9, 20);  // -0.45 .. 0.45
    for (const auto& t : sample_kinds(x)) {
      INFO(t.seq.spec() << " x=" << to_string(x));
      check_consistent(accelerated_sum(t, c).value, lhs_sum(t, c).value, c.tolerance());
    }
  }
}

TEST_CASE("phi_k recurrence and telescoping") {
  const PrecisionContext c = digits(25);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  for (const BigRational& x : {q(0), q(1, 3), q(-2, 5)})
    for (const auto& t : sample_kinds(x)) {
      INFO(t.seq.spec() << " x=" << to_string(x));
      const BigReal xr = BigReal::from_rational(x);
      std::vector<BigReal> phi;
      for (long k = 0; k <= 8; ++k) phi.push_back(phi_k(t, k, c));
      check_close(phi[0], lhs_sum(t, c).value, tol);
      for (long k = 1; k <= 8; ++k) {
        const BigReal lhs = phi[k - 1] - (xr - z_value(t.seq, k, c)) * phi[k];
        const BigReal g = gamma_k(t, k, c);
        CHECK(abs_diff(lhs, g) <= 10 * (lhs.err() + g.err()) + tol);
      }
      const std::vector<BigReal> terms = accelerated_terms(t, 6, c);
      BigReal partial(0L);
      for (long N = 1; N <= 6; ++N) {
        partial += terms[N - 1];
        const BigReal lhs = phi[0] - x_product(t, N, c) * phi[N];
        CHECK(abs_diff(lhs, partial) <= 10 * (lhs.err() + partial.err()) + tol);
      }
    }
}

TEST_CASE("geometric decay of the x = 0 series") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const std::vector<BigReal> t = accelerated_terms(inst(ZSequence::shifted_square(0), q(1, 2), q(0)), 61, c);
  for (long k = 20; k <= 60; ++k) {
    const Real ratio = bmp::abs(t[k].value() / t[k - 1].value());
    CHECK(ratio > Real(0.2));
    CHECK(ratio < Real(0.3));
  }
}

TEST_CASE("expansion coefficients") {
  const PrecisionContext c = digits(30);
  PrecisionScope s(c);
  const Real tol = c.tolerance();
  const std::vector<SeriesValue> sq = expand_coefficients(ZSequence::shifted_square(0), q(1, 2), 3, c);
  REQUIRE(sq.size() == 4);
  check_close(sq[0].value, oracle::kZeta3, tol);
  check_close(sq[1].value, oracle::kZeta5, tol);
  check_close(sq[2].value, oracle::kZeta7, tol);
  check_close(sq[3].value, zeta_reference(Real(9), c), tol);
  check_close(sq[1].value, koecher_zeta5_series(c).value, tol);

  for (const auto& [seq, alpha] : std::vector<std::pair<ZSequence, BigRational>>{
           {ZSequence::half_square(), q(0)},
           {ZSequence::shifted_square(2), q(1, 2)},
           {ZSequence::power_shift(q(1, 2), q(1), q(5, 2)), q(1, 3)}}) {
    INFO(seq.spec());
    const std::vector<SeriesValue> e = expand_coefficients(seq, alpha, 2, c);
    for (long m = 0; m <= 2; ++m) check_close(e[m].value, zeta_z(seq, Real(m + 1 + to_real(alpha)), c), tol);
    check_close(e[0].value, accelerated_sum(inst(seq, alpha, q(0)), c).value, tol);
  }
  CHECK_THROWS_AS(expand_coefficients(ZSequence::custom({q(1), q(2)}, q(1)), q(1), 1, c), UnsupportedError);
}

TEST_CASE("linear expansion at low precision") {
  const PrecisionContext c = digits(6);
  PrecisionScope s(c);
  const std::vector<SeriesValue> e = expand_coefficients(ZSequence::linear(q(0)), q(1), 1, c);
  check_close(e[0].value, zeta_reference(Real(2), c), c.tolerance());
  check_close(e[1].value, zeta_reference(Real(3), c), c.tolerance());
}
