/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/exact.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace koecher {

namespace {

BigInt parse_integer(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty integer");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed number: " + std::string(digits));
  // A leading zero would make GMP read the string as octal.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return BigRational(num, den);
}

BigRational parse_decimal(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigRational num = parse_decimal(s.substr(0, slash));
    BigRational den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
    return num / den;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    BigInt mag = parse_integer(exp_text);
    if (mag > 100000) throw std::invalid_argument("exponent out of range: " + std::string(text));
    exponent = mag.convert_to<long>();
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("malformed number: " + std::string(text));
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = std::string(s);
  }
  BigInt mantissa = parse_integer(digits);
  if (negative) mantissa = -mantissa;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? BigRational(mantissa, scale) : BigRational(mantissa * scale);
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  static std::mutex m;
  static std::vector<BigInt> cache{BigInt(1)};
  std::lock_guard<std::mutex> lock(m);
  while (static_cast<long>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<long>(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigRational reciprocal_factorial(long n) {
  if (n < 0) return BigRational(0);
  return BigRational(BigInt(1), factorial(n));
}

bool is_integer(const BigRational& q) { return denominator(q) == 1; }

BigRational pow_int(const BigRational& q, long e) {
  if (e == 0) return BigRational(1);
  if (e < 0) {
    if (q == 0) throw std::domain_error("zero to a negative power");
    BigRational inv = BigRational(denominator(q), numerator(q));
    return pow_int(inv, -e);
  }
  BigInt num = boost::multiprecision::pow(numerator(q), static_cast<unsigned>(e));
  BigInt den = boost::multiprecision::pow(denominator(q), static_cast<unsigned>(e));
  return BigRational(num, den);
}

std::optional<BigRational> exact_power(const BigRational& q, const BigRational& alpha) {
  if (is_integer(alpha)) return pow_int(q, numerator(alpha).convert_to<long>());
  if (denominator(alpha) != 2 || q < 0) return std::nullopt;
  BigInt rn = boost::multiprecision::sqrt(numerator(q));
  BigInt rd = boost::multiprecision::sqrt(denominator(q));
  if (rn * rn != numerator(q) || rd * rd != denominator(q)) return std::nullopt;
  return pow_int(BigRational(rn, rd), numerator(alpha).convert_to<long>());
}

std::string to_string(const BigRational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace koecher
