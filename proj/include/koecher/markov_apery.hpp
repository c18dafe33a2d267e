/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/identity_report.hpp"
#include "koecher/polynomial.hpp"
#include "koecher/summation.hpp"

#include <vector>

namespace koecher {

// Shifted-square machinery: z_n = (n + c)^2, alpha = 1/2, x = 0.

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// zeta(s) - sum_{j=1..c} j^-s.
BigReal hurwitz_zeta_c(long c, const Real& s, const PrecisionContext& ctx);

/// 1 / ((k + c - nu) (k - 1 - nu)!) extended continuously in nu.
///
/// For nu <= k - 1 this is the literal value. At nu = k + c both factors are
/// singular and the limit is (-1)^c c!. Every other nu gives 0 because the
/// reciprocal factorial vanishes at a gamma pole.
BigRational regularized_pole_factor(long k, long c, long nu);

/// B_j for j = 0..2c: the right-hand sides of the triangular system.
std::vector<BigRational> b_coefficients(long k, long c);

struct PartialFractionSolution {
  long k = 0;
  long c = 0;
  std::vector<BigRational> A;  // A_0..A_2c
  std::vector<BigRational> B;  // B_0..B_2c
  RationalMatrix M;            // row j: (-1)^i binom(2k, j - i) in column i
  RationalMatrix M_inverse;    // column l: (-1)^l binom(2k - 1 + i - l, i - l) in row i
};

/// Solves M A = B through the closed-form inverse, exactly.
PartialFractionSolution solve_partial_fraction(long k, long c);

/// Q_n = (n+k+2c)...(n+k) / ((n+k+c) (n+2k+2c)...(n+1) n), the summand after
/// shifting the tail to start at n = 1.
BigRational q_term(long k, long c, long n);

/// sum_j A_j / ((n+2k+2c-j)...(n+2c-j)): the partial fraction form of q_term.
BigRational partial_fraction_value(const PartialFractionSolution& s, long n);

/// sum_{n>k} 1/(n;k) for z_n = (n+c)^2, alpha = 1/2, via the partial
/// fractions and the telescoping tails: sum_j A_j (2c-j)! / (2k (2k+2c-j)!).
BigRational tail_sum_shifted_square(long k, long c);

/// The same tail from the closed double sum over (j, nu), evaluated
/// independently of the linear system.
BigRational tail_sum_double_sum(long k, long c);

struct RationalBracket {
  BigRational lower;
  BigRational upper;
};

/// Partial sum of 1/(n;k) for n = k+1..N and the bound
/// (N - k)^(-2k) / (2k) on the rest; the exact tail lies in [lower, upper].
RationalBracket tail_sum_bracket(long k, long c, long N);

/// P_c(k) evaluated at one integer k >= 1 from the closed double-sum form.
BigRational pc_value(long c, long k);

struct ConjectureAudit {
  bool integer_coefficients = false;
  bool degree_is_3c = false;
  bool leading_is_5 = false;
  /// Always true for c = 0, where the claim does not apply.
  bool constant_is_c_fact_2c_fact = false;
  bool confirmed() const { return integer_coefficients && degree_is_3c && leading_is_5 && constant_is_c_fact_2c_fact; }
};

struct PcPolynomial {
  long c = 0;
  IntPolynomial poly;
  ConjectureAudit audit;
};

/// P_c as an integer polynomial in k, interpolated exactly through
/// k = 1..3c+1 from the partial-fraction tail. Throws ConsistencyError if an
/// interpolated coefficient is not an integer. c <= 12.
PcPolynomial pc_polynomial(long c);

/// (1 / (2 c!^2)) sum_k (-1)^(k-1) P_c(k) / (binom(2k+2c, k+c) (k+c)^2 k (k+1)...(k+c)).
SeriesValue theorem51_rhs(long c, const PrecisionContext& ctx);

/// 1 + (1/4) sum (-1)^(k-1) (5k^3+12k^2+4k+2) / (binom(2k,k) k (k+1)^2 (2k+1)).
SeriesValue zeta3_shift1_series(const PrecisionContext& ctx);

/// 1 + 1/8 + (1/16) sum (-1)^(k-1) P_2(k) / (binom(2k+2,k+1) k (k+1) (k+2)^2 (2k+3)).
SeriesValue zeta3_shift2_series(const PrecisionContext& ctx);

/// LHS hurwitz_zeta_c(c, 3) against theorem51_rhs(c); tolerance 10^-target_digits. c <= 8.
IdentityReport verify_theorem51(long c, const PrecisionContext& ctx);

}  // namespace koecher
