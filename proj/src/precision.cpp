/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/precision.hpp"

#include <cmath>

namespace koecher {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

PrecisionContext PrecisionContext::for_digits(int target_digits, std::int64_t max_terms) {
  PrecisionContext ctx;
  ctx.target_digits = target_digits;
  ctx.max_terms = max_terms;
  const int derived =
      10 + static_cast<int>(std::ceil(std::log10(static_cast<double>(std::max<std::int64_t>(max_terms, 1)))));
  ctx.guard_digits = std::max(20, derived);
  ctx.validate();
  return ctx;
}

Real PrecisionContext::tolerance() const { return pow10_neg(target_digits); }

void PrecisionContext::validate() const {
  if (target_digits < 1) throw std::invalid_argument("target_digits must be positive");
  if (guard_digits < 10) throw std::invalid_argument("guard_digits must be at least 10");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be positive");
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : PrecisionScope(ctx.working_digits()) {}

PrecisionScope::PrecisionScope(int digits10)
    : lock_(precision_mutex()), previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits10));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

const Real& unit_roundoff() {
  thread_local unsigned cached_digits = 0;
  thread_local Real cached;
  const unsigned digits = Real::default_precision();
  if (digits != cached_digits) {
    cached = pow10_neg(static_cast<int>(digits) - 1);
    cached_digits = digits;
  }
  return cached;
}

Real pow10_neg(int digits) {
  Real ten(10);
  return pow(ten, Real(-digits));
}

}  // namespace koecher
