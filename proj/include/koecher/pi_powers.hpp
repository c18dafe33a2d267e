/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/identity_report.hpp"
#include "koecher/summation.hpp"

#include <optional>
#include <vector>

namespace koecher {

// z_n = (n + 1/2)^2 with alpha = 0, and the series for even powers of pi.

/// H~_K(nu) = sum over K >= k_1 > ... > k_nu >= 1 of prod 1/(2k_i + 1)^2.
/// H~_K(0) = 1 for every K >= 0, and H~_0(nu) = 0 for nu >= 1 (empty range).
BigRational odd_harmonic(long K, long nu);

/// Table of H~_K(nu) for K <= K_max, nu <= depth_max, filled by
/// H~_K(nu) = H~_(K-1)(nu) + H~_(K-1)(nu-1) / (2K+1)^2.
class OddHarmonicTable {
 public:
  OddHarmonicTable(long K_max, long depth_max);
  /// Extends the table as needed.
  const BigRational& at(long K, long nu);
  long depth_max() const { return depth_; }

 private:
  void grow(long K);
  long depth_;
  std::vector<std::vector<BigRational>> rows_;
};

/// 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), exact
/// when a or b is a nonnegative integer (then it is a finite product).
std::optional<BigRational> gauss_2f1_unit_exact(const BigRational& a, const BigRational& b, const BigRational& c);
/// Same value at working precision; non-integer parameters go through log-gamma.
/// Throws DomainError unless c - a - b > 0 and c is not a gamma pole.
BigReal gauss_2f1_unit(const BigRational& a, const BigRational& b, const BigRational& c, const PrecisionContext& ctx);

/// (2k^3 + 5k^2 + 3k + 1) / ((2k-1)(2k+1)(2k+1)!) = sum_{n>k} 1/(n;k) for this sequence.
BigRational lemma63_sum(long k);

struct Lemma63Parts {
  BigRational S0;  // sum n!/(n+2k+2)!
  BigRational S1;  // sum n n!/(n+2k+2)!
  BigRational S2;  // sum n^2 n!/(n+2k+2)!
  BigRational total;  // S2 + (2k+3) S1 + (k+1)(k+2) S0
};
/// The three hypergeometric pieces, each from gauss_2f1_unit_exact.
Lemma63Parts lemma63_parts(long k);

/// sum_{n=k+1..N} n(n+1)(n-k-1)!/(n+k+1)! plus the bound (N-k)^(1-2k)/(2k-1)
/// (or 1/(N-k) for k = 1) on the rest.
struct OddBracket {
  BigRational lower;
  BigRational upper;
};
OddBracket lemma63_bracket(long k, long N);

/// Coefficient multiplying the inner j-sum in the even-power series.
/// KPlusOne is 4k(k+1), the factor in the theorem statement; KMinusOne is
/// 4k(k-1), kept only to show that it does not reproduce the zeta values.
enum class CrossFactor { KPlusOne, KMinusOne };

/// 1 + sum_k (-1)^(k+mu-1) binom(2k,k) / (16^k (2k+1)^2)
///   * [ (10k^3+9k^2-k+1)/(2k-1) H~_(k-1)(mu)
///       + 4k(k+1) sum_{j=1..mu} (-1)^j H~_(k-1)(mu-j) / (2k+1)^(2j) ]
/// which should equal (1 - 4^(-mu-1)) zeta(2mu+2). mu <= 8.
SeriesValue theorem61_rhs(long mu, const PrecisionContext& ctx, CrossFactor factor = CrossFactor::KPlusOne);

/// (1 - 4^(-mu-1)) zeta(2mu+2) from Bernoulli numbers and pi_reference.
BigReal theorem61_lhs(long mu, const PrecisionContext& ctx);

/// pi^2/8 = 1 + sum (-1)^(k-1) binom(2k,k)/16^k (10k^3+9k^2-k+1)/((2k-1)(2k+1)^2).
SeriesValue pi2_over_8_series(const PrecisionContext& ctx);
/// pi^4/96 with the inner harmonic sum over j = 1..k-1.
SeriesValue pi4_over_96_series(const PrecisionContext& ctx);

/// The two smallest cases of the earlier similar family: pi^2/10 (mu = 0)
/// and pi^4/96 (mu = 1, inner sum from j = 0). Returns the RHS series.
SeriesValue leshchiner_series(long mu, const PrecisionContext& ctx);
IdentityReport leshchiner_check(long mu, const PrecisionContext& ctx);

}  // namespace koecher
