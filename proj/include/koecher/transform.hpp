/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/sequence.hpp"
#include "koecher/summation.hpp"

#include <optional>
#include <vector>

namespace koecher {

/// One instance of sum_n 1/((z_n - x) z_n^alpha) = sum_k gamma_k(x) prod_{l<k} (x - z_l).
struct TransformInstance {
  ZSequence seq;
  BigRational alpha;
  BigRational x;

  /// Checks the disk where the expansion is known to hold:
  ///   PowerShift, ShiftedSquare, HalfSquare: alpha >= 0, |x| < min(1, z_1)
  ///   Linear: alpha > max(0, c), |x| <= (alpha - max(0, c)) / 2 and |x| < z_1
  /// Custom sequences are not supported. Throws DomainError / UnsupportedError.
  void validate() const;
};

/// r! / (2k (2k+r)!)
BigRational telescoping_tail(long r, long k);
/// sum_{n=k+1..N} 1 / ((n+r+k)(n+r+k-1)...(n+r-k)), term by term.
BigRational telescoping_partial(long r, long k, long N);
/// r!/(2k(2k+r)!) - (1/2k) / ((N+r+k)...(N+r-k+1)).
BigRational telescoping_partial_closed(long r, long k, long N);

/// sum_{n>k} 1/(n;k) exactly, when a closed form is known:
///   z_n = (n+c)^2, integer c >= 0, alpha = 1/2  (c = 0 is the telescoping case)
///   z_n = (n+1/2)^2, alpha = 0
///   z_n = n, alpha = 1                          1/(k k!)
std::optional<BigRational> series_tail_exact(const ZSequence& seq, const BigRational& alpha, long k);

/// The closed form when there is one, otherwise the Hurwitz expansion of
/// shifted_product_sum with roots z_1..z_k. Divergent input throws DomainError.
SeriesValue series_tail(const ZSequence& seq, const BigRational& alpha, long k, const PrecisionContext& ctx);

/// 1/((z_k - x)(k;k-1)) + series_tail(k). Throws ConditioningError when x
/// is within 10^-guard_digits (relative) of z_k.
BigReal gamma_k(const TransformInstance& inst, long k, const PrecisionContext& ctx);

/// The first `count` terms gamma_k(x) prod_{l<k} (x - z_l), k = 1..count.
std::vector<BigReal> accelerated_terms(const TransformInstance& inst, long count, const PrecisionContext& ctx);

/// sum_k gamma_k(x) prod_{l<k} (x - z_l), truncated by SeriesAccumulator.
/// Terms are exact rationals whenever z, alpha and x allow it.
SeriesValue accelerated_sum(const TransformInstance& inst, const PrecisionContext& ctx);

/// sum_n 1/((z_n - x) z_n^alpha), the direct side.
SeriesValue lhs_sum(const TransformInstance& inst, const PrecisionContext& ctx);

/// phi_k(x) = sum_{n>k} 1/((z_n - x)(n;k)); phi_0 is the direct side.
BigReal phi_k(const TransformInstance& inst, long k, const PrecisionContext& ctx);

/// Coefficients of x^0..x^order of the accelerated side, each summed over k
/// with its own accumulator. Coefficient m should equal zeta_z(m + alpha + 1).
/// order <= 10. Custom sequences throw UnsupportedError.
std::vector<SeriesValue> expand_coefficients(const ZSequence& seq, const BigRational& alpha, long order,
                                             const PrecisionContext& ctx);

// The classical series for z_n = n^2, alpha = 1/2, written out.

/// (5/2) sum (-1)^(k-1) / (binom(2k,k) k^3)
SeriesValue markov_zeta3_series(const PrecisionContext& ctx);
/// (1/2) sum (-1)^(k-1) / (binom(2k,k) k^3) (5k^2-x^2)/(k^2-x^2) prod_{m<k} (1 - x^2/m^2)
SeriesValue koecher_series(const BigRational& x, const PrecisionContext& ctx);
/// 2 sum (-1)^(k-1) / (binom(2k,k) k^5) - (5/2) sum (-1)^(k-1) H^(2)_(k-1) / (binom(2k,k) k^3)
SeriesValue koecher_zeta5_series(const PrecisionContext& ctx);

}  // namespace koecher
