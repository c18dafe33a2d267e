/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"

namespace koecher {

/// Bernoulli number B_n, exact. Even n >= 0, plus B_1 = -1/2; odd n > 1 is rejected.
BigRational bernoulli(long n);

/// Hurwitz zeta  sum_{n>=0} (n + a)^-s  for real s > 1, a > 0.
///
/// Euler-Maclaurin summation: a shifted block of direct terms, the integral,
/// the half-term and Bernoulli corrections. The remainder after the last
/// correction is bounded by twice the first omitted correction (the summand
/// is completely monotone), and that bound goes into err.
BigReal hurwitz_zeta(const Real& s, const Real& a, const PrecisionContext& ctx);

/// Riemann zeta for real s > 1 with err <= 10^-target_digits.
BigReal zeta_reference(const Real& s, const PrecisionContext& ctx);

/// pi from Machin's formula; the alternating arctangent tails give err.
BigReal pi_reference(const PrecisionContext& ctx);

/// zeta(2n) = (-1)^(n-1) 2^(2n-1) B_2n / (2n)! * pi^(2n), n >= 1.
BigReal zeta_even_closed_form(long n, const PrecisionContext& ctx);

/// Digamma for real z > 0.
///
/// Recurs upward to y >= max(20, working_digits / 2), then applies the
/// asymptotic expansion log y - 1/(2y) - sum B_2j / (2j y^2j); the first
/// omitted term bounds the remainder.
BigReal digamma(const Real& z, const PrecisionContext& ctx);

}  // namespace koecher
