/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/precision.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace koecher {

/// Multiprecision value with an attached absolute error bound.
///
/// The arithmetic operators propagate the bound first-order-rigorously and add
/// one rounding unit of the result for the operation itself.
class BigReal {
 public:
  BigReal();
  BigReal(Real value, Real err);
  explicit BigReal(Real value);
  explicit BigReal(long v);

  /// Rounded conversion of an exact rational; err covers the single rounding.
  static BigReal from_rational(const BigRational& q);

  const Real& value() const { return value_; }
  const Real& err() const { return err_; }

  BigReal& widen(const Real& extra);
  BigReal abs() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal operator-() const;

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

  /// Decimal text with the requested number of significant digits.
  std::string str(int digits) const;

 private:
  Real value_;
  Real err_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

/// True when the enclosures [v - err, v + err] of a and b, widened by slack,
/// intersect.
bool consistent(const BigReal& a, const BigReal& b, const Real& slack = Real(0));

/// |a - b| as a plain value.
Real abs_diff(const BigReal& a, const BigReal& b);

Real to_real(const BigRational& q);
Real to_real(const BigInt& z);

// Failure modes shared by every module.

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a truncated computation cannot certify the requested accuracy.
/// Carries the best available estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, BigReal best, std::int64_t terms = 0)
      : std::runtime_error(what), best_(std::move(best)), terms_(terms) {}

  const BigReal& best_estimate() const { return best_; }
  std::int64_t terms_used() const { return terms_; }

 private:
  BigReal best_;
  std::int64_t terms_;
};

}  // namespace koecher
