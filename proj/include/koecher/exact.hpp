/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/precision.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace koecher {

/// Exact value of a decimal literal such as "-0.25", "3", "1.5e-2" or "7/3".
/// Throws std::invalid_argument on malformed input.
BigRational parse_decimal(std::string_view text);

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(long n);
BigInt binomial(long n, long k);

/// 1/n! for n >= 0 and 0 for negative n (reciprocal of a gamma pole).
BigRational reciprocal_factorial(long n);

bool is_integer(const BigRational& q);

/// q^e for integer e (q != 0 when e < 0).
BigRational pow_int(const BigRational& q, long e);

/// Exact q^alpha when it is rational: integer alpha, or half-integer alpha on
/// a perfect-square q >= 0.
std::optional<BigRational> exact_power(const BigRational& q, const BigRational& alpha);

std::string to_string(const BigRational& q);

}  // namespace koecher
