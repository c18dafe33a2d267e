/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/polynomial.hpp"

#include "koecher/exact.hpp"

#include <stdexcept>

namespace koecher {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear_factor(const BigRational& root) {
  return RationalPolynomial({-root, BigRational(1)});
}

BigRational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

RationalPolynomial RationalPolynomial::truncated(std::size_t max_power) const {
  std::vector<BigRational> out(coeffs_.begin(),
                               coeffs_.begin() + static_cast<long>(std::min(coeffs_.size(), max_power + 1)));
  return RationalPolynomial(std::move(out));
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

BigInt IntPolynomial::constant_term() const { return coeffs_.empty() ? BigInt(0) : coeffs_.front(); }

BigInt IntPolynomial::operator()(const BigInt& k) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

BigRational IntPolynomial::operator()(const BigRational& k) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + BigRational(*it);
  return acc;
}

std::string IntPolynomial::to_csv() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

std::optional<IntPolynomial> IntPolynomial::from_rational(const RationalPolynomial& p) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!is_integer(c)) return std::nullopt;
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

RationalPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<BigRational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const BigRational span = xs[i] - xs[i - level];
      if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / span;
    }
  // Horner on the Newton form: p = dd0 + (x - x0)(dd1 + (x - x1)(dd2 + ...)).
  RationalPolynomial p;
  for (std::size_t i = n; i-- > 0;) {
    p *= RationalPolynomial::linear_factor(xs[i]);
    p += RationalPolynomial::constant(dd[i]);
  }
  return p;
}

}  // namespace koecher
