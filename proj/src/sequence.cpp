/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/sequence.hpp"

#include "koecher/exact.hpp"
#include "koecher/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

std::map<std::string, BigRational> parse_params(std::string_view body, std::string_view spec) {
  std::map<std::string, BigRational> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw std::invalid_argument("sequence spec: expected key=value in '" + std::string(spec) + "'");
    std::string key(item.substr(0, eq));
    if (out.count(key)) throw std::invalid_argument("sequence spec: repeated key '" + key + "'");
    out.emplace(key, parse_decimal(item.substr(eq + 1)));
  }
  return out;
}

void require_keys(const std::map<std::string, BigRational>& params, std::initializer_list<const char*> allowed,
                  std::string_view spec) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw std::invalid_argument("sequence spec: unknown key '" + key + "' in '" + std::string(spec) + "'");
  }
}

BigRational get(const std::map<std::string, BigRational>& params, const std::string& key, const BigRational& dflt) {
  auto it = params.find(key);
  return it == params.end() ? dflt : it->second;
}

}  // namespace

ZSequence ZSequence::power_shift(const BigRational& c, const BigRational& d, const BigRational& beta) {
  if (c <= -1) throw DomainError("power sequence: requires c > -1");
  if (d < 0) throw DomainError("power sequence: requires d >= 0");
  if (beta <= 1) throw DomainError("power sequence: requires beta > 1");
  ZSequence s;
  s.kind_ = SequenceKind::PowerShift;
  s.c_ = c;
  s.d_ = d;
  s.beta_ = beta;
  return s;
}

ZSequence ZSequence::linear(const BigRational& c) {
  if (c <= -1) throw DomainError("linear sequence: requires c > -1");
  ZSequence s;
  s.kind_ = SequenceKind::Linear;
  s.c_ = c;
  s.beta_ = 1;
  return s;
}

ZSequence ZSequence::shifted_square(long c) {
  if (c < 0) throw DomainError("shifted square sequence: requires integer c >= 0");
  ZSequence s;
  s.kind_ = SequenceKind::ShiftedSquare;
  s.c_ = c;
  s.beta_ = 2;
  return s;
}

ZSequence ZSequence::half_square() {
  ZSequence s;
  s.kind_ = SequenceKind::HalfSquare;
  s.c_ = BigRational(1, 2);
  s.beta_ = 2;
  return s;
}

ZSequence ZSequence::custom(std::vector<BigRational> values, const BigRational& growth_epsilon) {
  if (values.empty()) throw DomainError("custom sequence: no values");
  if (growth_epsilon <= 0) throw DomainError("custom sequence: growth epsilon must be positive");
  if (values.front() <= 0) throw DomainError("custom sequence: values must be positive");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] <= values[i - 1]) throw DomainError("custom sequence: values must be strictly increasing");
    if (values[i] < growth_epsilon * static_cast<long>(i + 1))
      throw DomainError("custom sequence: z_n >= eps n fails at n = " + std::to_string(i + 1));
  }
  ZSequence s;
  s.kind_ = SequenceKind::Custom;
  s.values_ = std::move(values);
  s.epsilon_ = growth_epsilon;
  s.beta_ = 1;
  return s;
}

ZSequence ZSequence::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto params = parse_params(body, spec);
  if (name == "power") {
    require_keys(params, {"c", "d", "beta"}, spec);
    if (!params.count("beta")) throw std::invalid_argument("sequence spec: power needs beta=");
    return power_shift(get(params, "c", 0), get(params, "d", 0), params.at("beta"));
  }
  if (name == "linear") {
    require_keys(params, {"c"}, spec);
    return linear(get(params, "c", 0));
  }
  if (name == "sqshift") {
    require_keys(params, {"c"}, spec);
    const BigRational c = get(params, "c", 0);
    if (!is_integer(c)) throw DomainError("sqshift: c must be an integer");
    return shifted_square(numerator(c).convert_to<long>());
  }
  if (name == "halfsq") {
    if (!params.empty()) throw std::invalid_argument("sequence spec: halfsq takes no parameters");
    return half_square();
  }
  throw std::invalid_argument("unknown sequence kind '" + std::string(name) + "'");
}

std::string ZSequence::spec() const {
  switch (kind_) {
    case SequenceKind::PowerShift:
      return "power:c=" + to_string(c_) + ",d=" + to_string(d_) + ",beta=" + to_string(beta_);
    case SequenceKind::Linear:
      return "linear:c=" + to_string(c_);
    case SequenceKind::ShiftedSquare:
      return "sqshift:c=" + to_string(c_);
    case SequenceKind::HalfSquare:
      return "halfsq";
    case SequenceKind::Custom:
      return "custom:n=" + std::to_string(values_.size());
  }
  return {};
}

bool ZSequence::rational_valued() const { return kind_ == SequenceKind::Custom || is_integer(beta_); }

bool ZSequence::is_plain_square() const {
  return kind_ != SequenceKind::Custom && kind_ != SequenceKind::Linear && c_ == 0 && d_ == 0 && beta_ == 2;
}

void ZSequence::check_index(long n) const {
  if (n < 1) throw DomainError("sequence index must be >= 1");
  if (kind_ == SequenceKind::Custom && static_cast<std::size_t>(n) > values_.size())
    throw DomainError("custom sequence: index " + std::to_string(n) + " beyond stored length");
}

std::optional<BigRational> ZSequence::exact_value(long n) const {
  check_index(n);
  if (kind_ == SequenceKind::Custom) return values_[static_cast<std::size_t>(n - 1)];
  if (!is_integer(beta_)) return std::nullopt;
  return pow_int(BigRational(n) + c_, numerator(beta_).convert_to<long>()) + d_;
}

Real ZSequence::real_value(long n) const {
  if (auto q = exact_value(n)) return to_real(*q);
  const Real base = Real(n) + to_real(c_);
  return Real(bmp::exp(to_real(beta_) * bmp::log(base)) + to_real(d_));
}

BigReal ZSequence::value(long n, const PrecisionContext& ctx) const {
  PrecisionScope scope(ctx);
  if (auto q = exact_value(n)) return BigReal::from_rational(*q);
  Real v = real_value(n);
  return {v, Real(bmp::abs(v) * unit_roundoff() * 8)};
}

Real ZSequence::growth_epsilon() const {
  if (kind_ == SequenceKind::Custom) return to_real(epsilon_);
  const Real one_c = 1 + to_real(c_);
  return Real(bmp::pow(one_c, to_real(beta_) - 1) * (one_c < 1 ? one_c : Real(1)));
}

bool ZSequence::zeta_converges(const Real& s) const { return s * to_real(beta_) > 1; }

BigReal z_value(const ZSequence& seq, long n, const PrecisionContext& ctx) { return seq.value(n, ctx); }

std::optional<BigRational> pochhammer_exact(const ZSequence& seq, const BigRational& alpha, long n, long k) {
  if (k < 0) throw DomainError("pochhammer_product: k must be >= 0");
  auto zn = seq.exact_value(n);
  if (!zn) return std::nullopt;
  auto head = exact_power(*zn, alpha);
  if (!head) return std::nullopt;
  BigRational p = *head;
  for (long i = 1; i <= k; ++i) p *= *zn - *seq.exact_value(i);
  return p;
}

BigReal pochhammer_product(const ZSequence& seq, const BigRational& alpha, long n, long k,
                           const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (auto q = pochhammer_exact(seq, alpha, n, k)) return BigReal::from_rational(*q);
  const Real zn = seq.real_value(n);
  Real p = bmp::pow(zn, to_real(alpha));
  for (long i = 1; i <= k; ++i) p *= zn - seq.real_value(i);
  return {p, Real(bmp::abs(p) * unit_roundoff() * (8 * k + 16))};
}

BigReal power_tail(const ZSequence& seq, const Real& s_in, long N, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real s(s_in);
  if (seq.kind() == SequenceKind::Custom) throw UnsupportedError("custom sequences cannot bound an infinite tail");
  if (!seq.zeta_converges(s)) throw DomainError("power_tail: sum z_n^-s diverges (requires s beta > 1)");
  if (N < 0) throw DomainError("power_tail: N must be >= 0");
  const Real beta = to_real(seq.beta());
  const Real c = to_real(seq.c());
  if (seq.d() == 0) return hurwitz_zeta(Real(s * beta), Real(N + 1 + c), ctx);

  const Real d = to_real(seq.d());
  long n0 = N;
  while (bmp::pow(Real(n0 + 1 + c), beta) < 4 * d) ++n0;
  BigReal total(0L);
  for (long n = N + 1; n <= n0; ++n) {
    const Real zn = seq.real_value(n);
    total += BigReal(Real(bmp::pow(zn, -s)), Real(0));
  }
  const Real a = n0 + 1 + c;
  const Real q = d / bmp::pow(a, beta);  // <= 1/4
  const BigReal base = hurwitz_zeta(Real(s * beta), a, ctx);
  const Real eps = bmp::abs(base.value()) * pow10_neg(ctx.working_digits() + 2);
  // sum_j binom(-s, j) d^j zeta_H(beta (s + j), a); |term_j| <= |binom(-s, j)| q^j zeta_H(beta s, a)
  Real coef(1);
  Real d_power(1);
  BigReal series(0L);
  for (long j = 0;; ++j) {
    const Real bound = bmp::abs(coef) * bmp::pow(q, j) * base.value();
    if (j > s && bound <= eps) {
      series.widen(Real(2 * bound));
      break;
    }
    if (j > 100000) throw AccuracyError("power_tail: binomial series did not settle", series);
    BigReal h = j == 0 ? base : hurwitz_zeta(Real(beta * (s + j)), a, ctx);
    series += BigReal(Real(coef * d_power), Real(0)) * h;
    coef *= -(s + j) / (j + 1);
    d_power *= d;
  }
  total += series;
  return total;
}

BigReal zeta_z(const ZSequence& seq, const Real& s, const PrecisionContext& ctx) {
  if (seq.kind() == SequenceKind::Custom) throw UnsupportedError("zeta_z: custom sequences are verification-only");
  return power_tail(seq, s, 0, ctx);
}

BigReal shifted_product_sum(const ZSequence& seq, const Real& alpha_in, const std::vector<Real>& roots_in, long from,
                            const PrecisionContext& ctx, std::int64_t* terms_used) {
  PrecisionScope scope(ctx);
  if (seq.kind() == SequenceKind::Custom) throw UnsupportedError("custom sequences cannot bound an infinite tail");
  const Real alpha(alpha_in);
  std::vector<Real> roots;
  roots.reserve(roots_in.size());
  for (const auto& r : roots_in) roots.emplace_back(r);
  const long m = static_cast<long>(roots.size());
  if (from < 1) throw DomainError("shifted_product_sum: from must be >= 1");
  if (alpha < 0) throw DomainError("shifted_product_sum: alpha must be >= 0");
  if (!seq.zeta_converges(Real(alpha + m)))
    throw DomainError("shifted_product_sum: series diverges for this alpha and sequence");

  const Real beta = to_real(seq.beta());
  const Real c = to_real(seq.c());
  const Real d = to_real(seq.d());
  // With w = (n+c)^beta, z_n - r = w - (r - d).
  std::vector<Real> shifted;
  Real radius = d;
  for (const auto& r : roots) {
    shifted.emplace_back(r - d);
    if (bmp::abs(shifted.back()) > radius) radius = bmp::abs(shifted.back());
  }

  auto term_at = [&](long n) {
    const Real zn = seq.real_value(n);
    Real t = alpha == 0 ? Real(1) : Real(bmp::pow(zn, -alpha));
    for (const auto& r : roots) {
      const Real gap = zn - r;
      if (gap == 0) throw ConditioningError("shifted_product_sum: z_n coincides with a root");
      t /= gap;
    }
    return t;
  };
  long N = from - 1;
  Real direct(0);
  Real direct_abs(0);
  while (bmp::pow(Real(N + 1 + c), beta) < 4 * radius) {
    ++N;
    const Real t = term_at(N);
    direct += t;
    direct_abs += bmp::abs(t);
  }
  BigReal total(direct, Real(direct_abs * unit_roundoff() * (2 * m + 8)));
  std::int64_t count = N - from + 1;

  // z^-alpha prod (z - r_i)^-1 = w^-(alpha+m) (1 + d/w)^-alpha prod (1 - rho_i/w)^-1
  //                            = sum_e C_e w^-(alpha+m+e),
  // C = binomial coefficients of (1 + d/w)^-alpha convolved with h_j(rho).
  // Majorant: |C_e| <= binom(e + M - 1, e) radius^e with M = m + ceil(alpha),
  // and zeta_H(beta(alpha+m+e), a) <= w^-e zeta_H(beta(alpha+m), a).
  const Real a = N + 1 + c;
  const Real q = radius / bmp::pow(a, beta);  // <= 1/4
  const BigReal base = hurwitz_zeta(Real(beta * (alpha + m)), a, ctx);
  const Real eps = bmp::abs(base.value()) * pow10_neg(ctx.working_digits());
  const long M = m + static_cast<long>(bmp::ceil(alpha).convert_to<long>());

  // H[i][j] = h_j(rho_1..rho_i), grown one column at a time:
  // H[i][j] = H[i-1][j] + rho_i H[i][j-1].
  std::vector<std::vector<Real>> H(shifted.size() + 1, std::vector<Real>{Real(1)});
  std::vector<Real> b{Real(1)};  // binom(-alpha, i) d^i
  Real majorant(1);              // binom(e + M - 1, e) q^e
  BigReal expansion(0L);
  for (long e = 0;; ++e) {
    if (e > 0) {
      H[0].push_back(Real(0));
      for (std::size_t i = 1; i <= shifted.size(); ++i)
        H[i].push_back(Real(H[i - 1][e] + shifted[i - 1] * H[i][e - 1]));
      b.push_back(Real(b.back() * -(alpha + e - 1) / e * d));
      majorant = majorant * (e + M - 1) / e * q;
    }
    const Real bound = majorant * base.value();
    const bool shrinking = 2 * q * (e + M) <= e + 1;
    if (e > 0 && shrinking && bound <= eps) {
      expansion.widen(Real(2 * bound));
      break;
    }
    if (e > 100000) throw AccuracyError("shifted_product_sum: expansion did not settle", expansion);
    Real coef(0);
    for (long i = 0; i <= e; ++i) coef += b[static_cast<std::size_t>(i)] * H[shifted.size()][static_cast<std::size_t>(e - i)];
    if (coef == 0) continue;
    const BigReal p = e == 0 ? base : hurwitz_zeta(Real(beta * (alpha + m + e)), a, ctx);
    ++count;
    expansion += BigReal(coef, Real(bmp::abs(coef) * unit_roundoff() * (e + m + 4))) * p;
  }
  total += expansion;
  if (terms_used) *terms_used = count;
  return total;
}

PnDiagnostic pn_bound_diagnostic(const ZSequence& seq, long N_max, const PrecisionContext& ctx) {
  if (N_max < 2) throw DomainError("pn_bound_diagnostic: N_max must be >= 2");
  PrecisionScope scope(ctx);
  PnDiagnostic out;
  const Real z1 = seq.real_value(1);
  for (long N = 1; N <= N_max; ++N) {
    const Real z_next = seq.real_value(N + 1);
    Real p(1);
    for (long j = 1; j <= N; ++j) {
      const Real zj = seq.real_value(j);
      p *= (z1 + zj) / (z_next - zj);
    }
    out.values.emplace_back(N, p);
  }
  bool non_increasing = true;
  for (std::size_t i = out.values.size() / 2 + 1; i < out.values.size(); ++i)
    if (out.values[i].second > out.values[i - 1].second) non_increasing = false;
  out.verdict = non_increasing ? "bounded-looking" : "suspect";
  return out;
}

}  // namespace koecher
