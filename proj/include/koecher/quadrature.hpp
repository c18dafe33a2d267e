/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"

#include <functional>

namespace koecher {

using Integrand = std::function<Real(const Real&)>;

struct QuadratureResult {
  BigReal value;
  int levels = 0;
  long evaluations = 0;
};

/// Double-exponential quadrature of f over (a, b).
///
/// Finite b uses tanh-sinh, b = +inf uses exp-sinh. Endpoints are never
/// evaluated, so f may have integrable power or logarithmic singularities
/// there. Step halving continues until ten times the change between
/// consecutive levels is at most 10^-target_digits; that product is the
/// reported err. Throws AccuracyError (with the last estimate) when the
/// refinement cap is reached first.
QuadratureResult de_quadrature(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx);

/// +infinity at the current precision, for the upper limit.
Real infinity();

}  // namespace koecher
