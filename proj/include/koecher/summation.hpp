/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <string>

namespace koecher {

/// A truncated infinite sum. tail_bound is already folded into value.err().
struct SeriesValue {
  BigReal value;
  std::int64_t terms_used = 0;
  Real tail_bound;
  /// Which rule certified the truncation ("geometric", "alternating",
  /// "closed-form", "euler-maclaurin", ...).
  std::string tail_rule;
};

/// Adds the terms of a series one at a time and decides when to stop.
///
/// A term counts as small once |t| <= 10^-(target_digits + 2). The tail
/// after a small term is certified by one of two rules over the last ten
/// ratios |t_i / t_(i-1)|:
///   geometric:   max ratio rho < 0.9, tail <= |t| rho / (1 - rho)
///   alternating: strictly alternating signs with non-increasing magnitudes,
///                tail <= |t|
/// and the sum stops when the tail is at most a tenth of 10^-target_digits.
///
/// Throws AccuracyError when max_terms is reached, when the ratio stays at or
/// above 0.9 without alternation, or when a power-law fit of the alternating
/// magnitudes predicts that max_terms will not suffice.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const PrecisionContext& ctx);

  /// Returns true once the tail is certified.
  bool add(const BigReal& term);
  bool certified() const { return certified_; }
  std::int64_t terms() const { return count_; }
  /// Partial sum with the certified tail added to err. Throws
  /// AccuracyError if called before certification.
  SeriesValue result() const;
  /// Partial sum with no tail claim, for error reporting.
  const BigReal& partial() const { return sum_; }

 private:
  void update_certificate();
  void check_hopeless();

  PrecisionContext ctx_;
  Real small_;
  Real target_tail_;
  BigReal sum_;
  std::int64_t count_ = 0;
  std::deque<Real> window_;  // last eleven signed term values
  Real magnitude_at_half_;   // |t| at the last power-of-two checkpoint
  std::int64_t checkpoint_ = 0;
  bool certified_ = false;
  Real tail_;
  std::string rule_;
};

/// Sums term(first), term(first + 1), ... with SeriesAccumulator's contract.
SeriesValue sum_series(const std::function<BigReal(std::int64_t)>& term, std::int64_t first,
                       const PrecisionContext& ctx);

}  // namespace koecher
