/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koecher {

struct MzvSlot {
  long exponent = 1;
  bool alternating = false;
};

/// zeta(s_1, ..., s_d) = sum_{k_1 > ... > k_d >= 1} prod sgn_j(k_j) / k_j^(s_j),
/// where an alternating slot uses sgn(k) = (-1)^k and the others sgn = 1.
class MzvIndex {
 public:
  explicit MzvIndex(std::vector<MzvSlot> entries);

  /// "z(-2,1,1)"; a minus sign marks an alternating slot. Throws
  /// std::invalid_argument on bad syntax and DomainError on a divergent index.
  static MzvIndex parse(std::string_view text);
  /// zeta(bar(k+2), {1}^(m-1)).
  static MzvIndex alternating_head(long k, long m);

  const std::vector<MzvSlot>& entries() const { return entries_; }
  std::string str() const;
  /// (k, m) when the index is bar(k+2) followed by m-1 plain ones.
  std::optional<std::pair<long, long>> integral_shape() const;

 private:
  std::vector<MzvSlot> entries_;
};

/// H_K(m) = sum_{K >= k_1 > ... > k_m >= 1} 1/(k_1 ... k_m), H_K(0) = 1.
BigRational hyperharmonic(long K, long m);

/// H_K(m) for K <= K_max (grown on demand), m <= depth_max, filled by
/// H_K(m) = H_(K-1)(m) + H_(K-1)(m-1) / K.
class HyperharmonicTable {
 public:
  HyperharmonicTable(long K_max, long depth_max);
  const BigRational& at(long K, long m);
  long depth_max() const { return depth_; }

 private:
  void grow(long K);
  long depth_;
  std::vector<std::vector<BigRational>> rows_;
};

/// zeta(bar(k+2), {1}^(m-1)) = ((-1)^m / (m! k!)) int_0^inf t^k log(1+e^-t)^m dt,
/// the logarithmic integral over (0,1) after x = e^-t. k >= 0, m >= 1.
BigReal euler_sum_integral(long k, long m, const PrecisionContext& ctx);

/// Nested partial sum with outer index k_1 <= K, in working precision.
///
/// An alternating outer slot returns the mean of the last two partial sums
/// with err = 10 |correction|. A plain outer slot with s_1 >= 2 adds no tail
/// and sets err = 10 |f(K)| K / (s_1 - 1), the size of the integral tail of
/// the outer terms. Oracle grade only.
BigReal euler_sum_direct(const MzvIndex& index, long K, const PrecisionContext& ctx);

/// (-2)^(n-1) (2 zeta(bar 2, {1}^(n-2)) + sum_{j=3..n-1} (-1)^j zeta(bar j, {1}^(n-j))),
/// each Euler sum from euler_sum_integral. Requires n >= 3; n = 2 throws
/// UnsupportedError (see theorem41_n2_diagnostic).
BigReal theorem41_rhs(long n, const PrecisionContext& ctx);

/// Both sides of the n = 2 case as literally written: zeta(2) against
/// -4 zeta(bar 2) = 2 zeta(2). They differ, so n = 2 is reported, not verified.
struct Theorem41Diagnostic {
  BigReal zeta2;
  BigReal literal_rhs;
  std::string message;
};
Theorem41Diagnostic theorem41_n2_diagnostic(const PrecisionContext& ctx);

enum class SnMethod { EulerSums, Integral };

/// S_n = 2 zeta(bar 2, {1}^(n-2)) + sum_{j=3..n-1} (-1)^j zeta(bar j, {1}^(n-j)),
/// or the single combined integral
///   (1/(n-1)!) int_0^inf [(-l)^(n-1) + sum_{i=2..n-1} binom(n-1,i) (-t)^(n-1-i) (-l)^i] dt,
/// l = log(1 + e^-t). The two agree for n >= 3; at n = 2 the Euler sum form
/// gives -zeta(2) and the integral gives -zeta(2)/2.
BigReal s_n(long n, SnMethod method, const PrecisionContext& ctx);

struct GenfunValue {
  BigReal value;
  long n_max = 0;
  /// 2 (|z|/2)^n_max / (1 - |z|/2), from |S_n| <= 2^(2-n). Not in value.err.
  Real tail_estimate;
};

/// Absolute accuracy the generating-function check is held to.
Real genfun_tolerance();

/// sum_{n=2..n_max} S_n z^(n-1) with the integral form of S_n. n_max <= 0
/// picks the smallest n_max with 2^(2-n_max) |z|^(n_max-1) <= genfun_tolerance()/10.
/// Requires 0 < |z| <= 1.
GenfunValue theorem42_genfun(const Real& z, long n_max, const PrecisionContext& ctx);

/// psi(1) - psi(1 + z/2)
BigReal genfun_reference(const Real& z, const PrecisionContext& ctx);

/// int_0^1 ((1 + x^z)/(1 + x)^z - 1) dx/x, z > 0.
BigReal lemma43_integral(const Real& z, const PrecisionContext& ctx);

/// psi(1) - psi(z)
BigReal lemma43_reference(const Real& z, const PrecisionContext& ctx);

}  // namespace koecher
