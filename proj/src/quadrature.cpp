/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <optional>

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

struct Node {
  Real x;
  Real w;
};

// Maps the DE parameter t to an abscissa/weight pair; nullopt once the
// abscissa is no longer distinguishable from a finite endpoint.
class DeMap {
 public:
  DeMap(Real a, Real b) : a_(std::move(a)), b_(std::move(b)), infinite_(bmp::isinf(b_)) {
    half_pi_ = boost::math::constants::half_pi<Real>();
  }

  bool infinite() const { return infinite_; }

  std::optional<Node> at(const Real& t) const {
    const Real u = half_pi_ * bmp::sinh(t);
    if (infinite_) {
      const Real e = bmp::exp(u);
      Node n{a_ + e, half_pi_ * bmp::cosh(t) * e};
      if (n.x == a_ || bmp::isinf(n.x)) return std::nullopt;
      return n;
    }
    const Real width = b_ - a_;
    const Real e = bmp::exp(-2 * bmp::abs(u));
    const Real one_e = 1 + e;
    const Real delta = width * e / one_e;
    Node n{t >= 0 ? Real(b_ - delta) : Real(a_ + delta), 2 * width * half_pi_ * bmp::cosh(t) * e / (one_e * one_e)};
    if (delta == 0 || n.x <= a_ || n.x >= b_) return std::nullopt;
    return n;
  }

 private:
  Real a_;
  Real b_;
  bool infinite_;
  Real half_pi_;
};

struct Evaluator {
  const Integrand& f;
  const DeMap& map;
  long evaluations = 0;

  // w(t) f(x(t)), or nullopt outside the representable range.
  std::optional<Real> weighted(const Real& t) {
    auto node = map.at(t);
    if (!node) return std::nullopt;
    ++evaluations;
    Real v = f(node->x);
    if (bmp::isnan(v) || bmp::isinf(v)) return std::nullopt;
    return Real(node->w * v);
  }
};

// Largest |t| on one side worth sampling: beyond it the weighted integrand
// stays below `negligible` or the map runs out of representable abscissae.
Real find_extent(Evaluator& ev, int direction, const Real& negligible, const Real& cap) {
  const Real step("0.125");
  int quiet = 0;
  Real t = step;
  Real last_useful = step;
  for (; t <= cap; t += step) {
    auto v = ev.weighted(direction * t);
    if (!v) break;
    if (bmp::abs(*v) <= negligible) {
      if (++quiet >= 4) break;
    } else {
      quiet = 0;
      last_useful = t;
    }
  }
  return Real(last_useful + 4 * step);
}

}  // namespace

Real infinity() { return std::numeric_limits<Real>::infinity(); }

QuadratureResult de_quadrature(const Integrand& f, const Real& a_in, const Real& b_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real a(a_in);
  const Real b(b_in);
  if (bmp::isinf(a)) throw DomainError("de_quadrature: lower limit must be finite");
  if (!(b > a)) throw DomainError("de_quadrature: requires b > a");

  const int digits = ctx.working_digits();
  DeMap map(a, b);
  Evaluator ev{f, map};

  const Real negligible = pow10_neg(digits + 5);
  // Finite intervals: a node at distance 10^-(2D+20) from an endpoint is as
  // close as any integrable power singularity needs.
  const Real cap = map.infinite() ? Real(8) : Real(bmp::asinh(Real(std::log(10.0) * (2 * digits + 20)) / boost::math::constants::pi<Real>()) + 1);
  const Real t_pos = find_extent(ev, +1, negligible, cap);
  const Real t_neg = find_extent(ev, -1, negligible, cap);

  auto sum_nodes = [&](const Real& h, long first, long stride) {
    Real s(0);
    for (long j = first;; j += stride) {
      const Real t = h * j;
      if (t > t_pos) break;
      if (auto v = ev.weighted(t)) s += *v;
    }
    for (long j = first;; j += stride) {
      const Real t = h * j;
      if (t > t_neg) break;
      if (j == 0) continue;
      if (auto v = ev.weighted(-t)) s += *v;
    }
    return s;
  };

  const Real tol = ctx.tolerance();
  Real h(1);
  Real estimate = h * sum_nodes(h, 0, 1);
  Real previous = estimate;
  constexpr int kMaxLevel = 14;
  Real diff(0);
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    estimate = estimate / 2 + h * sum_nodes(h, 1, 2);
    diff = bmp::abs(estimate - previous);
    previous = estimate;
    if (level >= 3 && 10 * diff <= tol) {
      const Real rounding = bmp::abs(estimate) * unit_roundoff() * 10;
      return {BigReal(estimate, 10 * diff + rounding), level, ev.evaluations};
    }
  }
  throw AccuracyError("de_quadrature: no convergence within the refinement cap",
                      BigReal(estimate, 10 * diff), ev.evaluations);
}

}  // namespace koecher
