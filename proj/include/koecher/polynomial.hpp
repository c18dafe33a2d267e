/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/precision.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koecher {

/// Polynomial in one variable with exact rational coefficients, index = power.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coefficients);

  static RationalPolynomial constant(const BigRational& c);
  /// x - root
  static RationalPolynomial linear_factor(const BigRational& root);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coefficient(std::size_t power) const;

  BigRational operator()(const BigRational& x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const BigRational& s);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) { return a *= s; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Drop every coefficient above max_power.
  RationalPolynomial truncated(std::size_t max_power) const;

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

/// Polynomial in k with integer coefficients, index = power of k.
/// Invariant: the highest stored coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt leading() const;
  BigInt constant_term() const;

  BigInt operator()(const BigInt& k) const;
  BigRational operator()(const BigRational& k) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Coefficients low-to-high joined by commas, e.g. "2,4,12,5".
  std::string to_csv() const;

  /// Integer-coefficient view of p, or nullopt when some coefficient is not an integer.
  static std::optional<IntPolynomial> from_rational(const RationalPolynomial& p);

 private:
  std::vector<BigInt> coeffs_;
};

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// Newton divided differences in exact arithmetic; xs must be distinct.
RationalPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

}  // namespace koecher
