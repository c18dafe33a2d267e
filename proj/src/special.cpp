/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/special.hpp"

#include "koecher/exact.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

// B_0..B_n via sum_{k<=m} C(m+1,k) B_k = 0, cached across calls.
const BigRational& bernoulli_cached(long n) {
  static std::mutex m;
  static std::vector<BigRational> table{BigRational(1)};
  std::lock_guard<std::mutex> lock(m);
  while (static_cast<long>(table.size()) <= n) {
    const long mm = static_cast<long>(table.size());
    BigRational acc(0);
    if (mm == 1 || mm % 2 == 0) {
      BigInt c(1);  // C(mm+1, 0)
      for (long k = 0; k < mm; ++k) {
        if (k == 1 || k % 2 == 0) acc += BigRational(c) * table[static_cast<std::size_t>(k)];
        c = c * (mm + 1 - k) / (k + 1);
      }
      acc = -acc / BigRational(mm + 1);
    }
    table.push_back(acc);
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace

BigRational bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  if (n > 1 && n % 2 == 1) throw DomainError("bernoulli: odd index above 1 is not supported");
  return bernoulli_cached(n);
}

BigReal hurwitz_zeta(const Real& s_in, const Real& a_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real s(s_in);
  const Real a(a_in);
  if (s <= 1) throw DomainError("hurwitz_zeta: requires s > 1");
  if (a <= 0) throw DomainError("hurwitz_zeta: requires a > 0");

  const int digits = ctx.working_digits();
  const Real eps = pow10_neg(digits + 2);

  // Shift so that (s + 2j) / (2 pi A) stays below ~1/3 for the corrections we need.
  const double s_d = s.convert_to<double>();
  const double a_d = a.convert_to<double>();
  const double wanted = digits + 0.5 * s_d + 5.0;
  const long shift = a_d >= wanted ? 0 : static_cast<long>(std::ceil(wanted - a_d));

  // Large s: the terms fall off so fast that plain summation wins. The rest
  // after n0 terms is at most (a+n0)^-s + (a+n0)^(1-s)/(s-1).
  if (shift > 0) {
    const Real lead = bmp::pow(a, -s);
    for (long n0 = 1; n0 < shift; ++n0) {
      const Real an = a + n0;
      const Real rest = bmp::pow(an, -s) * (1 + an / (s - 1));
      if (rest <= eps * lead) {
        Real sum(0);
        for (long n = n0 - 1; n >= 0; --n) sum += bmp::pow(a + n, -s);
        return {sum, Real(rest + sum * unit_roundoff() * (n0 + 4))};
      }
      if (n0 > 64 && rest > lead) break;
    }
  }

  Real direct(0);
  for (long n = shift - 1; n >= 0; --n) direct += bmp::pow(a + n, -s);

  const Real A = a + shift;
  const Real a_pow = bmp::pow(A, -s);
  Real total = direct + A * a_pow / (s - 1) + a_pow / 2;

  // T_j = B_2j / (2j)! * s (s+1) ... (s+2j-2) * A^(-s-2j+1)
  Real rising = s;
  Real a_power = a_pow / A;
  const Real inv_a2 = 1 / (A * A);
  Real remainder(0);
  const long max_j = 4L * digits + 50;
  Real previous_abs(-1);
  long j = 1;
  for (;; ++j) {
    if (j > max_j) throw AccuracyError("hurwitz_zeta: correction series did not settle", BigReal(total));
    const BigRational coef = bernoulli(2 * j) / BigRational(factorial(2 * j));
    const Real term = to_real(coef) * rising * a_power;
    const Real term_abs = bmp::abs(term);
    if (term_abs <= eps * bmp::abs(total)) {
      remainder = 2 * term_abs;
      break;
    }
    if (previous_abs >= 0 && term_abs > previous_abs)
      throw AccuracyError("hurwitz_zeta: asymptotic corrections diverged", BigReal(total));
    previous_abs = term_abs;
    total += term;
    rising *= (s + (2 * j - 1)) * (s + 2 * j);
    a_power *= inv_a2;
  }
  const Real rounding = bmp::abs(total) * unit_roundoff() * (shift + j + 4);
  return {total, remainder + rounding};
}

BigReal zeta_reference(const Real& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (s <= 1) throw DomainError("zeta_reference: requires s > 1");
  return hurwitz_zeta(s, Real(1), ctx);
}

namespace {

// arctan(1/q) = sum (-1)^n / ((2n+1) q^(2n+1)); alternating with decreasing terms.
BigReal arctan_reciprocal(long q, const PrecisionContext& ctx) {
  const Real eps = pow10_neg(ctx.working_digits() + 2);
  const Real q2 = Real(q) * q;
  Real power = 1 / Real(q);
  Real sum(0);
  long n = 0;
  for (;; ++n) {
    Real term = power / (2 * n + 1);
    if (term < eps) {
      const Real rounding = bmp::abs(sum) * unit_roundoff() * (n + 2);
      return {sum, term + rounding};
    }
    sum += (n % 2 == 0) ? term : Real(-term);
    power /= q2;
  }
}

}  // namespace

BigReal pi_reference(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  // pi = 16 arctan(1/5) - 4 arctan(1/239)
  BigReal a = arctan_reciprocal(5, ctx);
  BigReal b = arctan_reciprocal(239, ctx);
  return BigReal(16) * a - BigReal(4) * b;
}

BigReal zeta_even_closed_form(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("zeta_even_closed_form: requires n >= 1");
  PrecisionScope scope(ctx);
  BigRational coef = bernoulli(2 * n) * pow_int(BigRational(2), 2 * n - 1) / BigRational(factorial(2 * n));
  if (n % 2 == 0) coef = -coef;
  const BigReal pi = pi_reference(ctx);
  BigReal pi2 = pi * pi;
  BigReal power(1);
  for (long i = 0; i < n; ++i) power *= pi2;
  return BigReal::from_rational(coef) * power;
}

BigReal digamma(const Real& z_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real z(z_in);
  if (z <= 0) throw DomainError("digamma: requires z > 0");
  const int digits = ctx.working_digits();
  const double threshold = std::max(20.0, digits / 2.0);
  const double z_d = z.convert_to<double>();
  const long shift = z_d >= threshold ? 0 : static_cast<long>(std::ceil(threshold - z_d));

  Real shift_sum(0);
  for (long i = shift - 1; i >= 0; --i) shift_sum += 1 / (z + i);

  const Real y = z + shift;
  const Real inv_y2 = 1 / (y * y);
  Real series = bmp::log(y) - 1 / (2 * y);
  const Real eps = pow10_neg(digits + 2);
  Real y_power = inv_y2;
  Real remainder(0);
  long j = 1;
  for (;; ++j) {
    const Real term = to_real(bernoulli(2 * j) / BigRational(2 * j)) * y_power;
    if (bmp::abs(term) <= eps) {
      remainder = bmp::abs(term);
      break;
    }
    if (j > 4L * digits + 50) throw AccuracyError("digamma: asymptotic series did not settle", BigReal(series));
    series -= term;
    y_power *= inv_y2;
  }
  Real value = series - shift_sum;
  const Real magnitude = bmp::abs(series) + bmp::abs(shift_sum);
  return {value, remainder + magnitude * unit_roundoff() * (shift + j + 4)};
}

}  // namespace koecher
