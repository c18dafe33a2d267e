/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>

namespace koecher {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

/// Requested accuracy and truncation limits for one evaluation.
///
/// Every operation runs at working_digits() = target_digits + guard_digits
/// decimal digits and aims for an absolute error of at most 10^-target_digits.
struct PrecisionContext {
  int target_digits = 50;
  int guard_digits = 20;
  std::int64_t max_terms = 1'000'000;

  /// Context for a target accuracy, with guard digits derived from max_terms:
  /// max(20, 10 + ceil(log10(max_terms))).
  static PrecisionContext for_digits(int target_digits, std::int64_t max_terms = 1'000'000);

  int working_digits() const { return target_digits + guard_digits; }

  /// 10^-target_digits
  Real tolerance() const;

  /// Throws std::invalid_argument when the fields violate their invariants.
  void validate() const;
};

/// Sets the process-wide MPFR default precision for its lifetime.
///
/// MPFR's default precision is global state, so scopes serialize on a shared
/// recursive mutex. Nested scopes on one thread are fine; concurrent callers
/// queue behind each other instead of corrupting each other's precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  explicit PrecisionScope(int digits10);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
};

/// Relative rounding unit of the current default precision (generous by one digit).
const Real& unit_roundoff();

/// 10^-digits at the current precision.
Real pow10_neg(int digits);

}  // namespace koecher
