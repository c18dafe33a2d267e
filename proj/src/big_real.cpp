/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/big_real.hpp"

#include <ostream>
#include <sstream>

namespace koecher {

namespace {

Real rounding_of(const Real& v) { return boost::multiprecision::abs(v) * unit_roundoff(); }

}  // namespace

BigReal::BigReal() : value_(0), err_(0) {}

BigReal::BigReal(Real value, Real err) : value_(std::move(value)), err_(std::move(err)) {
  if (err_ < 0) throw std::invalid_argument("BigReal error bound must be nonnegative");
}

BigReal::BigReal(Real value) : value_(std::move(value)), err_(0) {}

BigReal::BigReal(long v) : value_(v), err_(0) {}

BigReal BigReal::from_rational(const BigRational& q) {
  Real v = to_real(q);
  Real e = rounding_of(v);
  return {std::move(v), std::move(e)};
}

BigReal& BigReal::widen(const Real& extra) {
  err_ += boost::multiprecision::abs(extra);
  return *this;
}

BigReal BigReal::abs() const { return {boost::multiprecision::abs(value_), err_}; }

BigReal& BigReal::operator+=(const BigReal& o) {
  value_ += o.value_;
  err_ += o.err_ + rounding_of(value_);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  value_ -= o.value_;
  err_ += o.err_ + rounding_of(value_);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  Real e = boost::multiprecision::abs(value_) * o.err_ + boost::multiprecision::abs(o.value_) * err_ +
           err_ * o.err_;
  value_ *= o.value_;
  err_ = e + rounding_of(value_);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  const Real denom = boost::multiprecision::abs(o.value_);
  if (denom <= o.err_) throw ConditioningError("division by a quantity not bounded away from zero");
  // |a/b - A/B| <= (|a| eB + |b| eA) / (|b| (|b| - eB))
  Real e = (boost::multiprecision::abs(value_) * o.err_ + denom * err_) / (denom * (denom - o.err_));
  value_ /= o.value_;
  err_ = e + rounding_of(value_);
  return *this;
}

BigReal BigReal::operator-() const { return {-value_, err_}; }

std::string BigReal::str(int digits) const {
  return value_.str(digits, std::ios_base::scientific);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << x.value().str(30, std::ios_base::scientific) << " +/- "
            << x.err().str(3, std::ios_base::scientific);
}

bool consistent(const BigReal& a, const BigReal& b, const Real& slack) {
  return boost::multiprecision::abs(a.value() - b.value()) <= a.err() + b.err() + slack;
}

Real abs_diff(const BigReal& a, const BigReal& b) {
  return boost::multiprecision::abs(a.value() - b.value());
}

Real to_real(const BigRational& q) {
  Real r;
  r = q;
  return r;
}

Real to_real(const BigInt& z) {
  Real r;
  r = z;
  return r;
}

}  // namespace koecher
