/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koecher {

enum class SequenceKind { PowerShift, Linear, ShiftedSquare, HalfSquare, Custom };

/// An increasing positive sequence z_1 < z_2 < ...
///
/// Every parametric kind is z_n = (n + c)^beta + d:
///   PowerShift(c, d, beta)   c > -1, d >= 0, beta > 1
///   Linear(c)                beta = 1, d = 0, c > -1
///   ShiftedSquare(c)         beta = 2, d = 0, integer c >= 0
///   HalfSquare               beta = 2, d = 0, c = 1/2
/// Custom holds a finite strictly increasing list of exact values and a
/// declared growth constant; it is only usable where a finite prefix suffices.
class ZSequence {
 public:
  static ZSequence power_shift(const BigRational& c, const BigRational& d, const BigRational& beta);
  static ZSequence linear(const BigRational& c);
  static ZSequence shifted_square(long c);
  static ZSequence half_square();
  static ZSequence custom(std::vector<BigRational> values, const BigRational& growth_epsilon);

  /// "power:c=<r>,d=<r>,beta=<r>", "linear:c=<r>", "sqshift:c=<int>", "halfsq".
  /// Parameters are parsed exactly. Throws std::invalid_argument on bad
  /// syntax and DomainError on out-of-range parameters.
  static ZSequence parse(std::string_view spec);

  SequenceKind kind() const { return kind_; }
  const BigRational& c() const { return c_; }
  const BigRational& d() const { return d_; }
  const BigRational& beta() const { return beta_; }
  /// Canonical spec string; parse(spec()) reproduces the sequence.
  std::string spec() const;

  /// True when every z_n is rational (integer beta, or Custom).
  bool rational_valued() const;
  /// True for z_n = n^2 exactly (PowerShift(0,0,2) or ShiftedSquare(0)).
  bool is_plain_square() const;
  /// Number of stored values for Custom, 0 (unbounded) otherwise.
  std::size_t length() const { return values_.size(); }

  std::optional<BigRational> exact_value(long n) const;
  /// z_n at the current default precision.
  Real real_value(long n) const;
  BigReal value(long n, const PrecisionContext& ctx) const;

  /// Growth constant eps with z_n >= eps n: (1+c)^(beta-1) min(1, 1+c) for
  /// the parametric kinds, the declared value for Custom.
  Real growth_epsilon() const;
  /// True when sum z_n^-s converges, i.e. s beta > 1.
  bool zeta_converges(const Real& s) const;

 private:
  ZSequence() = default;
  void check_index(long n) const;

  SequenceKind kind_ = SequenceKind::PowerShift;
  BigRational c_{0};
  BigRational d_{0};
  BigRational beta_{2};
  std::vector<BigRational> values_;
  BigRational epsilon_{0};
};

/// z_n at working precision (exact when rational). Custom out of range throws DomainError.
BigReal z_value(const ZSequence& seq, long n, const PrecisionContext& ctx);

/// (n;k) = z_n^alpha prod_{i=1..k} (z_n - z_i), exactly when it is rational.
std::optional<BigRational> pochhammer_exact(const ZSequence& seq, const BigRational& alpha, long n, long k);
BigReal pochhammer_product(const ZSequence& seq, const BigRational& alpha, long n, long k, const PrecisionContext& ctx);

/// sum_{n > N} z_n^-s for parametric kinds with s beta > 1.
///
/// d = 0 reduces to a Hurwitz zeta value. For d > 0 the first few terms are
/// added directly until (n + c)^beta >= 4d, and the rest uses the binomial
/// series (1 + d u)^-s in u = (n + c)^-beta with a geometric remainder bound.
BigReal power_tail(const ZSequence& seq, const Real& s, long N, const PrecisionContext& ctx);

/// zeta_z(s) = sum_{n >= 1} z_n^-s. Divergent s throws DomainError, Custom
/// throws UnsupportedError.
BigReal zeta_z(const ZSequence& seq, const Real& s, const PrecisionContext& ctx);

/// sum_{n >= from} z_n^-alpha prod_r (z_n - r)^-1.
///
/// Direct terms until z_(N+1) >= 4 max|r|, then the product is expanded as
/// sum_j h_j(r) z^-(m+j) with complete homogeneous symmetric polynomials h_j,
/// each power handled by power_tail. The expansion remainder is bounded by
/// comparison with z_(N+1), so the result carries a rigorous err.
/// terms_used, if given, receives the direct terms plus expansion terms.
BigReal shifted_product_sum(const ZSequence& seq, const Real& alpha, const std::vector<Real>& roots, long from,
                            const PrecisionContext& ctx, std::int64_t* terms_used = nullptr);

struct PnDiagnostic {
  std::vector<std::pair<long, Real>> values;  // (N, P_N)
  /// "bounded-looking" when P_N is non-increasing over the last half of the
  /// range, "suspect" otherwise.
  std::string verdict;
};

/// P_N = prod_{j=1..N} (z_1 + z_j) / (z_(N+1) - z_j) for N = 1..N_max.
/// Advisory only.
PnDiagnostic pn_bound_diagnostic(const ZSequence& seq, long N_max, const PrecisionContext& ctx);

}  // namespace koecher
