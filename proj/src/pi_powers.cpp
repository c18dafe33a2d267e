/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/pi_powers.hpp"

#include "koecher/exact.hpp"
#include "koecher/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <chrono>

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

BigRational fact(long n) { return BigRational(factorial(n)); }

BigRational sign(long e) { return e % 2 == 0 ? BigRational(1) : BigRational(-1); }

BigRational odd_square(long k) { return BigRational((2 * k + 1) * (2 * k + 1)); }

// binom(2k,k) / (16^k (2k+1)^2)
BigRational central_weight(long k) {
  return BigRational(binomial(2 * k, k)) / (pow_int(BigRational(16), k) * odd_square(k));
}

bool is_gamma_pole(const BigRational& x) { return is_integer(x) && x <= 0; }

std::optional<long> small_nonneg_integer(const BigRational& x) {
  if (!is_integer(x) || x < 0 || x > 100000) return std::nullopt;
  return numerator(x).convert_to<long>();
}

BigReal pi_power(long e, const PrecisionContext& ctx) {
  const BigReal pi = pi_reference(ctx);
  BigReal out(1L);
  for (long i = 0; i < e; ++i) out *= pi;
  return out;
}

}  // namespace

BigRational odd_harmonic(long K, long nu) {
  if (K < 0 || nu < 0) throw DomainError("odd_harmonic: requires K >= 0 and nu >= 0");
  OddHarmonicTable t(K, nu);
  return t.at(K, nu);
}

OddHarmonicTable::OddHarmonicTable(long K_max, long depth_max) : depth_(depth_max) {
  if (K_max < 0 || depth_max < 0) throw DomainError("OddHarmonicTable: negative bound");
  std::vector<BigRational> row0(static_cast<std::size_t>(depth_ + 1), BigRational(0));
  row0[0] = 1;
  rows_.push_back(std::move(row0));
  grow(K_max);
}

void OddHarmonicTable::grow(long K) {
  while (static_cast<long>(rows_.size()) <= K) {
    const long k = static_cast<long>(rows_.size());
    const auto& prev = rows_.back();
    std::vector<BigRational> row(prev.size(), BigRational(0));
    row[0] = 1;
    const BigRational w = 1 / odd_square(k);
    for (std::size_t nu = 1; nu < row.size(); ++nu) row[nu] = prev[nu] + prev[nu - 1] * w;
    rows_.push_back(std::move(row));
  }
}

const BigRational& OddHarmonicTable::at(long K, long nu) {
  if (K < 0 || nu < 0 || nu > depth_) throw DomainError("OddHarmonicTable: index out of range");
  grow(K);
  return rows_[static_cast<std::size_t>(K)][static_cast<std::size_t>(nu)];
}

std::optional<BigRational> gauss_2f1_unit_exact(const BigRational& a, const BigRational& b, const BigRational& c) {
  if (c - a - b <= 0) throw DomainError("gauss_2f1_unit: requires c - a - b > 0");
  if (is_gamma_pole(c)) throw DomainError("gauss_2f1_unit: c is a pole of the gamma function");
  auto n = small_nonneg_integer(a);
  BigRational other = b;
  if (!n) {
    n = small_nonneg_integer(b);
    other = a;
  }
  if (!n) return std::nullopt;
  // Gamma(c)/Gamma(c-n) = prod_{i=1..n} (c-i); Gamma(c-n-o)/Gamma(c-o) = 1/prod_{i=1..n} (c-o-i).
  BigRational value(1);
  for (long i = 1; i <= *n; ++i) value *= (c - i) / (c - other - i);
  return value;
}

BigReal gauss_2f1_unit(const BigRational& a, const BigRational& b, const BigRational& c, const PrecisionContext& ctx) {
  if (auto q = gauss_2f1_unit_exact(a, b, c)) {
    PrecisionScope scope(ctx);
    return BigReal::from_rational(*q);
  }
  PrecisionScope scope(ctx);
  const Real ra = to_real(a), rb = to_real(b), rc = to_real(c);
  int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
  const Real lg = boost::math::lgamma(rc, &s1) + boost::math::lgamma(Real(rc - ra - rb), &s2) -
                  boost::math::lgamma(Real(rc - ra), &s3) - boost::math::lgamma(Real(rc - rb), &s4);
  Real v = bmp::exp(lg);
  if (s1 * s2 * s3 * s4 < 0) v = -v;
  return {v, Real(bmp::abs(v) * unit_roundoff() * 1000)};
}

BigRational lemma63_sum(long k) {
  if (k < 1) throw DomainError("lemma63_sum: requires k >= 1");
  return BigRational(2 * k * k * k + 5 * k * k + 3 * k + 1) / (BigRational((2 * k - 1) * (2 * k + 1)) * fact(2 * k + 1));
}

Lemma63Parts lemma63_parts(long k) {
  if (k < 1) throw DomainError("lemma63_parts: requires k >= 1");
  const BigRational c(2 * k + 3);
  const BigRational lead = 1 / fact(2 * k + 2);
  Lemma63Parts p;
  p.S0 = lead * *gauss_2f1_unit_exact(1, 1, c);
  const BigRational shifted1 = lead * *gauss_2f1_unit_exact(1, 2, c);      // sum (n+1)!/(n+2k+2)!
  const BigRational shifted2 = 2 * lead * *gauss_2f1_unit_exact(1, 3, c);  // sum (n+2)!/(n+2k+2)!
  p.S1 = shifted1 - p.S0;
  p.S2 = p.S0 - 3 * (p.S0 + p.S1) + shifted2;
  p.total = p.S2 + BigRational(2 * k + 3) * p.S1 + BigRational((k + 1) * (k + 2)) * p.S0;
  return p;
}

OddBracket lemma63_bracket(long k, long N) {
  if (k < 1 || N <= k) throw DomainError("lemma63_bracket: requires k >= 1 and N > k");
  BigRational partial(0);
  // term(n) = n (n+1) / prod_{i=n-k..n+k+1} i, advanced by the ratio term(n+1)/term(n).
  BigRational term(0);
  for (long n = k + 1; n <= N; ++n) {
    if (n == k + 1) {
      term = BigRational(n * (n + 1)) * fact(n - k - 1) / fact(n + k + 1);
    } else {
      term *= BigRational((n + 1) * (n - k - 1)) / BigRational((n - 1) * (n + k + 1));
    }
    partial += term;
  }
  // term(n) <= (n-k)^(-2k); sum over n > N is at most the integral from N - k.
  const BigRational rest = k == 1 ? BigRational(1, N - k)
                                  : 1 / (BigRational(2 * k - 1) * pow_int(BigRational(N - k), 2 * k - 1));
  return {partial, partial + rest};
}

SeriesValue theorem61_rhs(long mu, const PrecisionContext& ctx, CrossFactor factor) {
  if (mu < 0 || mu > 8) throw DomainError("theorem61_rhs: requires 0 <= mu <= 8");
  OddHarmonicTable H(64, mu);
  PrecisionScope scope(ctx);
  SeriesValue s = sum_series(
      [&](std::int64_t k) {
        const BigRational cubic(10 * k * k * k + 9 * k * k - k + 1);
        BigRational bracket = cubic / BigRational(2 * k - 1) * H.at(k - 1, mu);
        BigRational inner(0);
        BigRational odd_power(1);
        for (long j = 1; j <= mu; ++j) {
          odd_power /= odd_square(k);
          inner += sign(j) * H.at(k - 1, mu - j) * odd_power;
        }
        const BigRational cross = factor == CrossFactor::KPlusOne ? BigRational(4 * k * (k + 1))
                                                                  : BigRational(4 * k * (k - 1));
        bracket += cross * inner;
        return BigReal::from_rational(sign(k + mu - 1) * central_weight(k) * bracket);
      },
      1, ctx);
  s.value += BigReal(1L);
  return s;
}

BigReal theorem61_lhs(long mu, const PrecisionContext& ctx) {
  if (mu < 0) throw DomainError("theorem61_lhs: requires mu >= 0");
  PrecisionScope scope(ctx);
  const BigReal z = zeta_even_closed_form(mu + 1, ctx);
  return BigReal::from_rational(1 - pow_int(BigRational(4), -(mu + 1))) * z;
}

SeriesValue pi2_over_8_series(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  SeriesValue s = sum_series(
      [](std::int64_t k) {
        const BigRational t = BigRational(binomial(2 * k, k)) / pow_int(BigRational(16), k) *
                              BigRational(10 * k * k * k + 9 * k * k - k + 1) /
                              (BigRational(2 * k - 1) * odd_square(k));
        return BigReal::from_rational(sign(k - 1) * t);
      },
      1, ctx);
  s.value += BigReal(1L);
  return s;
}

SeriesValue pi4_over_96_series(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  BigRational harmonic(0);  // sum_{j=1..k-1} 1/(2j+1)^2
  SeriesValue s = sum_series(
      [&](std::int64_t k) {
        if (k >= 2) harmonic += 1 / odd_square(k - 1);
        const BigRational cubic(10 * k * k * k + 9 * k * k - k + 1);
        const BigRational bracket = BigRational(4 * k * (k + 1)) / odd_square(k) - cubic / BigRational(2 * k - 1) * harmonic;
        return BigReal::from_rational(sign(k - 1) * central_weight(k) * bracket);
      },
      1, ctx);
  s.value += BigReal(1L);
  return s;
}

SeriesValue leshchiner_series(long mu, const PrecisionContext& ctx) {
  if (mu != 0 && mu != 1) throw DomainError("leshchiner_series: only mu = 0 and mu = 1 are available");
  PrecisionScope scope(ctx);
  BigRational harmonic(0);  // sum_{j=0..k-1} 1/(2j+1)^2
  SeriesValue s = sum_series(
      [&](std::int64_t k) {
        harmonic += 1 / odd_square(k - 1);
        BigRational t = sign(k) * central_weight(k);
        if (mu == 1) t *= 1 / odd_square(k) - BigRational(5, 4) * harmonic;
        return BigReal::from_rational(t);
      },
      1, ctx);
  s.value += BigReal(1L);
  return s;
}

IdentityReport leshchiner_check(long mu, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const SeriesValue rhs = leshchiner_series(mu, ctx);
  PrecisionScope scope(ctx);
  const BigReal lhs = mu == 0 ? pi_power(2, ctx) / BigReal(10L) : pi_power(4, ctx) / BigReal(96L);
  IdentityReport r = make_report("leshchiner", {{"mu", std::to_string(mu)}}, lhs, rhs.value, ctx.tolerance(),
                                 rhs.terms_used, rhs.tail_rule, ctx.target_digits);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace koecher
