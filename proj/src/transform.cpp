/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/transform.hpp"

#include "koecher/exact.hpp"
#include "koecher/markov_apery.hpp"
#include "koecher/pi_powers.hpp"

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

BigRational fact(long n) { return BigRational(factorial(n)); }

BigRational sign(long e) { return e % 2 == 0 ? BigRational(1) : BigRational(-1); }

BigRational abs_q(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

// Everything about index k that the accelerated side needs.
//
// For z_n = n + c the factorial (k-1)! is divided out of (k;k-1) and
// multiplied into the tail, and the running product is divided by the same
// factorial one step at a time, so nothing grows with k.
struct KData {
  std::optional<BigRational> z, D, T;  // z_k, (k;k-1), sum_{n>k} 1/(n;k)
  BigReal zr, Dr, Tr;
  bool scaled = false;
  bool exact() const { return z && D && T; }
};

KData k_data(const ZSequence& seq, const BigRational& alpha, long k, bool want_exact, const PrecisionContext& ctx) {
  KData d;
  if (seq.kind() == SequenceKind::Linear) {
    d.scaled = true;
    PrecisionScope scope(ctx);
    d.zr = z_value(seq, k, ctx);
    const Real p = bmp::pow(d.zr.value(), to_real(alpha));
    d.Dr = BigReal(p, Real(p * unit_roundoff() * 8));
    if (seq.c() == 0 && alpha == 1) {
      d.Tr = BigReal::from_rational(BigRational(1, k * k));
    } else {
      const SeriesValue t = series_tail(seq, alpha, k, ctx);
      Real f(1);
      for (long i = 2; i < k; ++i) f *= i;
      d.Tr = t.value * BigReal(f, Real(f * unit_roundoff() * k));
    }
    return d;
  }
  if (want_exact) {
    d.z = seq.exact_value(k);
    d.D = pochhammer_exact(seq, alpha, k, k - 1);
    d.T = series_tail_exact(seq, alpha, k);
  }
  PrecisionScope scope(ctx);
  d.zr = d.z ? BigReal::from_rational(*d.z) : z_value(seq, k, ctx);
  d.Dr = d.D ? BigReal::from_rational(*d.D) : pochhammer_product(seq, alpha, k, k - 1, ctx);
  d.Tr = d.T ? BigReal::from_rational(*d.T) : series_tail(seq, alpha, k, ctx).value;
  return d;
}

void check_conditioning(const BigReal& z, const Real& x, const PrecisionContext& ctx) {
  const Real gap = bmp::abs(Real(z.value() - x));
  if (gap <= bmp::abs(z.value()) * pow10_neg(ctx.guard_digits))
    throw ConditioningError("gamma_k: x is too close to z_k");
}

// Successive terms gamma_k(x) prod_{l<k} (x - z_l).
class TermGenerator {
 public:
  TermGenerator(const TransformInstance& inst, const PrecisionContext& ctx)
      : inst_(inst), ctx_(ctx), exact_(inst.seq.kind() != SequenceKind::Linear && inst.seq.rational_valued()) {
    PrecisionScope scope(ctx_);
    prod_r_ = BigReal(1L);
    x_ = to_real(inst_.x);
  }

  BigReal next() {
    ++k_;
    const KData d = k_data(inst_.seq, inst_.alpha, k_, exact_, ctx_);
    PrecisionScope scope(ctx_);
    check_conditioning(d.zr, x_, ctx_);
    if (exact_ && d.exact()) {
      const BigRational gamma = *d.T + 1 / ((*d.z - inst_.x) * *d.D);
      const BigRational term = gamma * prod_q_;
      prod_q_ *= inst_.x - *d.z;
      return BigReal::from_rational(term);
    }
    if (exact_) {
      exact_ = false;
      prod_r_ = BigReal::from_rational(prod_q_);
    }
    const BigReal xr = BigReal::from_rational(inst_.x);
    const BigReal gamma = d.Tr + BigReal(1L) / ((d.zr - xr) * d.Dr);
    const BigReal term = gamma * prod_r_;
    prod_r_ *= xr - d.zr;
    if (d.scaled) prod_r_ /= BigReal(k_);
    return term;
  }

 private:
  const TransformInstance& inst_;
  PrecisionContext ctx_;
  bool exact_;
  long k_ = 0;
  BigRational prod_q_{1};
  BigReal prod_r_;
  Real x_;
};

std::vector<Real> first_values(const ZSequence& seq, long k) {
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(k));
  for (long i = 1; i <= k; ++i) out.push_back(seq.real_value(i));
  return out;
}

}  // namespace

void TransformInstance::validate() const {
  if (seq.kind() == SequenceKind::Custom) throw UnsupportedError("transform: custom sequences are not supported");
  const BigRational ax = abs_q(x);
  if (seq.kind() == SequenceKind::Linear) {
    const BigRational floor = seq.c() > 0 ? seq.c() : BigRational(0);
    if (alpha <= floor) throw DomainError("transform: linear sequences need alpha > max(0, c)");
    if (ax > (alpha - floor) / 2) throw DomainError("transform: |x| exceeds (alpha - max(0, c))/2");
    if (ax >= 1 + seq.c()) throw DomainError("transform: |x| must be below z_1");
    return;
  }
  if (alpha < 0) throw DomainError("transform: alpha must be >= 0");
  if (ax >= 1) throw DomainError("transform: |x| must be below min(1, z_1)");
  PrecisionScope scope(PrecisionContext::for_digits(30));
  if (to_real(ax) >= seq.real_value(1)) throw DomainError("transform: |x| must be below min(1, z_1)");
}

BigRational telescoping_tail(long r, long k) {
  if (r < 0 || k < 1) throw DomainError("telescoping_tail: requires r >= 0 and k >= 1");
  return fact(r) / (BigRational(2 * k) * fact(2 * k + r));
}

BigRational telescoping_partial(long r, long k, long N) {
  if (r < 0 || k < 1 || N <= k) throw DomainError("telescoping_partial: requires r >= 0, k >= 1, N > k");
  BigRational total(0);
  for (long n = k + 1; n <= N; ++n) {
    BigInt p(1);
    for (long i = n + r - k; i <= n + r + k; ++i) p *= i;
    total += BigRational(1) / BigRational(p);
  }
  return total;
}

BigRational telescoping_partial_closed(long r, long k, long N) {
  if (r < 0 || k < 1 || N <= k) throw DomainError("telescoping_partial_closed: requires r >= 0, k >= 1, N > k");
  BigInt p(1);
  for (long i = N + r - k + 1; i <= N + r + k; ++i) p *= i;
  return telescoping_tail(r, k) - 1 / (BigRational(2 * k) * BigRational(p));
}

std::optional<BigRational> series_tail_exact(const ZSequence& seq, const BigRational& alpha, long k) {
  if (k < 1) throw DomainError("series_tail: requires k >= 1");
  const bool square_family = seq.kind() != SequenceKind::Custom && seq.beta() == 2 && seq.d() == 0;
  if (square_family && alpha == BigRational(1, 2) && is_integer(seq.c()) && seq.c() >= 0) {
    const long c = numerator(seq.c()).convert_to<long>();
    return c == 0 ? telescoping_tail(0, k) : tail_sum_shifted_square(k, c);
  }
  if (square_family && alpha == 0 && seq.c() == BigRational(1, 2)) return lemma63_sum(k);
  if (seq.kind() == SequenceKind::Linear && seq.c() == 0 && alpha == 1) return 1 / (BigRational(k) * fact(k));
  return std::nullopt;
}

SeriesValue series_tail(const ZSequence& seq, const BigRational& alpha, long k, const PrecisionContext& ctx) {
  if (seq.kind() == SequenceKind::Custom) throw UnsupportedError("series_tail: custom sequences are not supported");
  PrecisionScope scope(ctx);
  SeriesValue out;
  if (auto q = series_tail_exact(seq, alpha, k)) {
    out.value = BigReal::from_rational(*q);
    out.tail_bound = 0;
    out.tail_rule = "closed-form";
    return out;
  }
  out.value = shifted_product_sum(seq, to_real(alpha), first_values(seq, k), k + 1, ctx, &out.terms_used);
  out.tail_bound = out.value.err();
  out.tail_rule = "hurwitz-expansion";
  return out;
}

BigReal gamma_k(const TransformInstance& inst, long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("gamma_k: requires k >= 1");
  const KData d = k_data(inst.seq, inst.alpha, k, inst.seq.kind() != SequenceKind::Linear, ctx);
  PrecisionScope scope(ctx);
  check_conditioning(d.zr, to_real(inst.x), ctx);
  if (d.exact()) return BigReal::from_rational(*d.T + 1 / ((*d.z - inst.x) * *d.D));
  BigReal g = d.Tr + BigReal(1L) / ((d.zr - BigReal::from_rational(inst.x)) * d.Dr);
  if (d.scaled)
    for (long i = 2; i < k; ++i) g /= BigReal(i);
  return g;
}

std::vector<BigReal> accelerated_terms(const TransformInstance& inst, long count, const PrecisionContext& ctx) {
  inst.validate();
  TermGenerator gen(inst, ctx);
  std::vector<BigReal> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long k = 1; k <= count; ++k) out.push_back(gen.next());
  return out;
}

SeriesValue accelerated_sum(const TransformInstance& inst, const PrecisionContext& ctx) {
  inst.validate();
  TermGenerator gen(inst, ctx);
  return sum_series([&gen](std::int64_t) { return gen.next(); }, 1, ctx);
}

SeriesValue lhs_sum(const TransformInstance& inst, const PrecisionContext& ctx) {
  inst.validate();
  PrecisionScope scope(ctx);
  SeriesValue out;
  out.value = shifted_product_sum(inst.seq, to_real(inst.alpha), {to_real(inst.x)}, 1, ctx, &out.terms_used);
  out.tail_bound = out.value.err();
  out.tail_rule = "hurwitz-expansion";
  return out;
}

BigReal phi_k(const TransformInstance& inst, long k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("phi_k: requires k >= 0");
  inst.validate();
  PrecisionScope scope(ctx);
  std::vector<Real> roots = first_values(inst.seq, k);
  roots.push_back(to_real(inst.x));
  return shifted_product_sum(inst.seq, to_real(inst.alpha), roots, k + 1, ctx);
}

std::vector<SeriesValue> expand_coefficients(const ZSequence& seq, const BigRational& alpha, long order,
                                             const PrecisionContext& ctx) {
  if (order < 0 || order > 10) throw DomainError("expand_coefficients: requires 0 <= order <= 10");
  if (seq.kind() == SequenceKind::Custom) throw UnsupportedError("expand_coefficients: custom sequences are not supported");
  TransformInstance{seq, alpha, BigRational(0)}.validate();

  const std::size_t width = static_cast<std::size_t>(order + 1);
  std::vector<SeriesAccumulator> acc(width, SeriesAccumulator(ctx));
  bool exact = seq.kind() != SequenceKind::Linear && seq.rational_valued();
  // Coefficients of prod_{l<k} (x - z_l), truncated at x^order.
  std::vector<BigRational> pq(width, BigRational(0));
  pq[0] = 1;
  std::vector<Real> pr;

  for (long k = 1;; ++k) {
    const KData d = k_data(seq, alpha, k, exact, ctx);
    PrecisionScope scope(ctx);
    if (exact && !d.exact()) {
      exact = false;
      for (const auto& q : pq) pr.push_back(to_real(q));
    }
    if (!exact && pr.empty()) {
      pr.assign(width, Real(0));
      pr[0] = 1;
    }
    bool done = true;
    if (exact) {
      // g_0 = T + 1/(z D), g_j = 1/(z^(j+1) D)
      std::vector<BigRational> g(width);
      BigRational zp = *d.z * *d.D;
      g[0] = *d.T + 1 / zp;
      for (std::size_t j = 1; j < width; ++j) {
        zp *= *d.z;
        g[j] = 1 / zp;
      }
      for (std::size_t m = 0; m < width; ++m) {
        if (acc[m].certified()) continue;
        BigRational c(0);
        for (std::size_t nu = 0; nu <= m; ++nu) c += pq[nu] * g[m - nu];
        if (!acc[m].add(BigReal::from_rational(c))) done = false;
      }
      for (std::size_t nu = width - 1; nu > 0; --nu) pq[nu] = pq[nu - 1] - *d.z * pq[nu];
      pq[0] *= -*d.z;
    } else {
      const Real z = d.zr.value();
      const Real Dv = d.Dr.value();
      std::vector<Real> g(width);
      Real zp = z * Dv;
      g[0] = d.Tr.value() + 1 / zp;
      for (std::size_t j = 1; j < width; ++j) {
        zp *= z;
        g[j] = 1 / zp;
      }
      for (std::size_t m = 0; m < width; ++m) {
        if (acc[m].certified()) continue;
        Real c(0), mag(0);
        for (std::size_t nu = 0; nu <= m; ++nu) {
          const Real t = pr[nu] * g[m - nu];
          c += t;
          mag += bmp::abs(t);
        }
        // Relative error of the inputs (tail, z, D) carried through, plus rounding.
        const Real rel = d.Tr.err() / bmp::abs(g[0]) + d.Dr.err() / bmp::abs(Dv) + unit_roundoff() * (4 * k + 16);
        if (!acc[m].add(BigReal(c, Real(mag * rel)))) done = false;
      }
      for (std::size_t nu = width - 1; nu > 0; --nu) pr[nu] = pr[nu - 1] - z * pr[nu];
      pr[0] *= -z;
      if (d.scaled)
        for (auto& v : pr) v /= k;
    }
    if (done) break;
  }

  std::vector<SeriesValue> out;
  out.reserve(width);
  for (auto& a : acc) out.push_back(a.result());
  return out;
}

SeriesValue markov_zeta3_series(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return sum_series(
      [](std::int64_t k) {
        const BigRational t = BigRational(5, 2) * sign(k - 1) / (BigRational(binomial(2 * k, k)) * pow_int(BigRational(k), 3));
        return BigReal::from_rational(t);
      },
      1, ctx);
}

SeriesValue koecher_series(const BigRational& x, const PrecisionContext& ctx) {
  if (abs_q(x) >= 1) throw DomainError("koecher_series: requires |x| < 1");
  const BigRational x2 = x * x;
  BigRational prod(1);  // prod_{m<k} (1 - x^2/m^2)
  PrecisionScope scope(ctx);
  return sum_series(
      [&](std::int64_t k) {
        if (k >= 2) prod *= 1 - x2 / BigRational((k - 1) * (k - 1));
        const BigRational kk(k * k);
        const BigRational t = sign(k - 1) / (2 * BigRational(binomial(2 * k, k)) * kk * k) * (5 * kk - x2) / (kk - x2) * prod;
        return BigReal::from_rational(t);
      },
      1, ctx);
}

SeriesValue koecher_zeta5_series(const PrecisionContext& ctx) {
  BigRational h2(0);  // H^(2)_(k-1)
  PrecisionScope scope(ctx);
  return sum_series(
      [&](std::int64_t k) {
        if (k >= 2) h2 += BigRational(1, (k - 1) * (k - 1));
        const BigRational k3 = pow_int(BigRational(k), 3);
        const BigRational t = sign(k - 1) / BigRational(binomial(2 * k, k)) *
                              (2 / (k3 * k * k) - BigRational(5, 2) * h2 / k3);
        return BigReal::from_rational(t);
      },
      1, ctx);
}

}  // namespace koecher
