/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/markov_apery.hpp"

#include "koecher/exact.hpp"
#include "koecher/special.hpp"

#include <chrono>

namespace koecher {

namespace {

BigRational fact(long n) { return BigRational(factorial(n)); }

BigRational sign(long e) { return e % 2 == 0 ? BigRational(1) : BigRational(-1); }

void check_kc(long k, long c) {
  if (k < 1) throw DomainError("requires k >= 1");
  if (c < 0) throw DomainError("requires c >= 0");
}

}  // namespace

BigReal hurwitz_zeta_c(long c, const Real& s, const PrecisionContext& ctx) {
  if (c < 0) throw DomainError("hurwitz_zeta_c: requires c >= 0");
  PrecisionScope scope(ctx);
  BigReal z = zeta_reference(s, ctx);
  Real head(0);
  for (long j = 1; j <= c; ++j) head += boost::multiprecision::pow(Real(j), -s);
  return z - BigReal(head, Real(head * unit_roundoff() * (c + 2)));
}

BigRational regularized_pole_factor(long k, long c, long nu) {
  if (nu <= k - 1) return BigRational(1) / (BigRational(k + c - nu) * fact(k - 1 - nu));
  if (nu == k + c) return sign(c) * fact(c);
  return BigRational(0);
}

std::vector<BigRational> b_coefficients(long k, long c) {
  check_kc(k, c);
  std::vector<BigRational> B;
  B.reserve(static_cast<std::size_t>(2 * c + 1));
  for (long j = 0; j <= 2 * c; ++j)
    B.push_back(regularized_pole_factor(k, c, j) * fact(k + 2 * c - j) * fact(2 * k) /
                (fact(2 * k + 2 * c - j) * fact(j)));
  return B;
}

PartialFractionSolution solve_partial_fraction(long k, long c) {
  check_kc(k, c);
  PartialFractionSolution s;
  s.k = k;
  s.c = c;
  s.B = b_coefficients(k, c);
  const std::size_t size = static_cast<std::size_t>(2 * c + 1);
  s.M.assign(size, std::vector<BigRational>(size, BigRational(0)));
  s.M_inverse.assign(size, std::vector<BigRational>(size, BigRational(0)));
  for (long j = 0; j <= 2 * c; ++j)
    for (long i = 0; i <= j; ++i) {
      s.M[j][i] = sign(i) * BigRational(binomial(2 * k, j - i));
      s.M_inverse[j][i] = sign(i) * BigRational(binomial(2 * k - 1 + j - i, j - i));
    }
  s.A.assign(size, BigRational(0));
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t nu = 0; nu <= j; ++nu) s.A[j] += s.M_inverse[j][nu] * s.B[nu];
  return s;
}

BigRational q_term(long k, long c, long n) {
  check_kc(k, c);
  if (n < 1) throw DomainError("q_term: requires n >= 1");
  BigRational num(1);
  for (long i = n + k; i <= n + k + 2 * c; ++i) num *= i;
  BigRational den(n + k + c);
  for (long i = n; i <= n + 2 * k + 2 * c; ++i) den *= i;
  return num / den;
}

BigRational partial_fraction_value(const PartialFractionSolution& s, long n) {
  BigRational total(0);
  for (long j = 0; j <= 2 * s.c; ++j) {
    BigRational den(1);
    for (long i = n + 2 * s.c - j; i <= n + 2 * s.k + 2 * s.c - j; ++i) den *= i;
    total += s.A[static_cast<std::size_t>(j)] / den;
  }
  return total;
}

BigRational tail_sum_shifted_square(long k, long c) {
  const auto s = solve_partial_fraction(k, c);
  BigRational total(0);
  for (long j = 0; j <= 2 * c; ++j)
    total += s.A[static_cast<std::size_t>(j)] * fact(2 * c - j) / (BigRational(2 * k) * fact(2 * k + 2 * c - j));
  return total;
}

BigRational tail_sum_double_sum(long k, long c) {
  check_kc(k, c);
  BigRational total(0);
  for (long j = 0; j <= 2 * c; ++j) {
    BigRational inner(0);
    for (long nu = 0; nu <= j; ++nu)
      inner += sign(nu) * regularized_pole_factor(k, c, nu) * fact(2 * k + j - 1 - nu) * fact(k + 2 * c - nu) /
               (fact(j - nu) * fact(2 * k + 2 * c - nu) * fact(nu));
    total += fact(2 * c - j) / fact(2 * k + 2 * c - j) * inner;
  }
  return total;
}

RationalBracket tail_sum_bracket(long k, long c, long N) {
  check_kc(k, c);
  if (N <= k) throw DomainError("tail_sum_bracket: requires N > k");
  const auto zc = [c](long n) { return BigRational((n + c) * (n + c)); };
  BigRational partial(0);
  for (long n = k + 1; n <= N; ++n) {
    BigRational p(n + c);
    for (long i = 1; i <= k; ++i) p *= zc(n) - zc(i);
    partial += 1 / p;
  }
  // (n;k) >= (n - k)^(2k+1), so the rest is at most the integral of u^-(2k+1) from N - k.
  const BigRational rest = 1 / (BigRational(2 * k) * pow_int(BigRational(N - k), 2 * k));
  return {partial, partial + rest};
}

BigRational pc_value(long c, long k) {
  check_kc(k, c);
  const BigRational head = 4 * fact(k + 2 * c) * fact(k + c - 1) / (BigRational(k + c) * fact(k - 1) * fact(k - 1));
  const BigRational scale = 2 * fact(k + c) * fact(2 * k + 2 * c) / fact(k - 1);
  return head + scale * tail_sum_double_sum(k, c);
}

PcPolynomial pc_polynomial(long c) {
  if (c < 0 || c > 12) throw DomainError("pc_polynomial: requires 0 <= c <= 12");
  std::vector<BigRational> ks;
  std::vector<BigRational> values;
  for (long k = 1; k <= 3 * c + 1; ++k) {
    const BigRational head =
        4 * fact(k + 2 * c) * fact(k + c - 1) / (BigRational(k + c) * fact(k - 1) * fact(k - 1));
    const BigRational tilde = 2 * fact(k + c) * fact(2 * k + 2 * c) / fact(k - 1) * tail_sum_shifted_square(k, c);
    ks.emplace_back(k);
    values.push_back(head + tilde);
  }
  const RationalPolynomial p = interpolate(ks, values);
  auto integral = IntPolynomial::from_rational(p);
  if (!integral)
    throw ConsistencyError("pc_polynomial: non-integer coefficient for c = " + std::to_string(c));
  PcPolynomial out;
  out.c = c;
  out.poly = *integral;
  out.audit.integer_coefficients = true;
  out.audit.degree_is_3c = out.poly.degree() == 3 * c;
  out.audit.leading_is_5 = out.poly.leading() == 5;
  out.audit.constant_is_c_fact_2c_fact = c == 0 || out.poly.constant_term() == factorial(c) * factorial(2 * c);
  return out;
}

SeriesValue theorem51_rhs(long c, const PrecisionContext& ctx) {
  if (c < 0) throw DomainError("theorem51_rhs: requires c >= 0");
  const IntPolynomial P = pc_polynomial(c).poly;
  const BigRational prefactor = 1 / (2 * fact(c) * fact(c));
  PrecisionScope scope(ctx);
  return sum_series(
      [&](std::int64_t k) {
        BigRational den = BigRational(binomial(2 * k + 2 * c, k + c)) * BigRational((k + c) * (k + c));
        for (long i = 0; i <= c; ++i) den *= k + i;
        const BigRational t = sign(k - 1) * prefactor * P(BigRational(k)) / den;
        return BigReal::from_rational(t);
      },
      1, ctx);
}

SeriesValue zeta3_shift1_series(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue s = sum_series(
      [](std::int64_t k) {
        const BigRational num = BigRational(5 * k * k * k + 12 * k * k + 4 * k + 2);
        const BigRational den = BigRational(binomial(2 * k, k)) * k * (k + 1) * (k + 1) * (2 * k + 1);
        return BigReal::from_rational(sign(k - 1) * num / (4 * den));
      },
      1, ctx);
  s.value += BigReal(1L);
  return s;
}

SeriesValue zeta3_shift2_series(const PrecisionContext& ctx) {
  const IntPolynomial P2 = pc_polynomial(2).poly;
  PrecisionScope scope(ctx);
  SeriesValue s = sum_series(
      [&](std::int64_t k) {
        const BigRational den =
            BigRational(binomial(2 * k + 2, k + 1)) * k * (k + 1) * (k + 2) * (k + 2) * (2 * k + 3);
        return BigReal::from_rational(sign(k - 1) * P2(BigRational(k)) / (16 * den));
      },
      1, ctx);
  s.value += BigReal::from_rational(BigRational(9, 8));
  return s;
}

IdentityReport verify_theorem51(long c, const PrecisionContext& ctx) {
  if (c < 0 || c > 8) throw DomainError("verify_theorem51: requires 0 <= c <= 8");
  const auto start = std::chrono::steady_clock::now();
  PrecisionScope scope(ctx);
  const BigReal lhs = hurwitz_zeta_c(c, Real(3), ctx);
  const SeriesValue rhs = theorem51_rhs(c, ctx);
  IdentityReport r = make_report("thm51", {{"c", std::to_string(c)}}, lhs, rhs.value, ctx.tolerance(),
                                 rhs.terms_used, rhs.tail_rule, ctx.target_digits);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace koecher
