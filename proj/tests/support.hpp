/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"
#include "koecher/exact.hpp"

#include <doctest.h>

namespace testing {

using namespace koecher;

inline PrecisionContext digits(int d, std::int64_t max_terms = 1'000'000) {
  return PrecisionContext::for_digits(d, max_terms);
}

// |a - b| <= tol, with the values printed on failure.
inline void check_close(const BigReal& a, const BigReal& b, const Real& tol) {
  const Real d = abs_diff(a, b);
  INFO("a = " << a << ", b = " << b << ", |a-b| = " << d.str(5, std::ios_base::scientific));
  CHECK(d <= tol);
}

inline void check_close(const BigReal& a, const char* b, const Real& tol) { check_close(a, BigReal(Real(b)), tol); }

inline void check_consistent(const BigReal& a, const BigReal& b, const Real& slack = Real(0)) {
  INFO("a = " << a << ", b = " << b);
  CHECK(consistent(a, b, slack));
}

inline BigRational q(long n, long d = 1) { return BigRational(n) / BigRational(d); }

}  // namespace testing
