/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/euler_sums.hpp"

#include "koecher/exact.hpp"
#include "koecher/quadrature.hpp"
#include "koecher/special.hpp"

#include <cctype>
#include <stdexcept>

namespace koecher {

namespace bmp = boost::multiprecision;

namespace {

Real real_factorial(long n) {
  Real f(1);
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Real ipow(const Real& x, long e) {
  Real out(1);
  for (long i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

MzvIndex::MzvIndex(std::vector<MzvSlot> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("MzvIndex: empty index");
  for (const auto& e : entries_)
    if (e.exponent < 1) throw DomainError("MzvIndex: exponents must be >= 1");
  if (entries_.front().exponent < 2 && !entries_.front().alternating)
    throw DomainError("MzvIndex: the first slot needs exponent >= 2 or an alternating sign");
}

MzvIndex MzvIndex::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("MzvIndex: expected z(e1,e2,...), got '" + std::string(text) + "'"); };
  if (text.size() < 4 || text.substr(0, 2) != "z(" || text.back() != ')') fail();
  std::string_view body = text.substr(2, text.size() - 3);
  std::vector<MzvSlot> slots;
  while (true) {
    const std::size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    MzvSlot slot;
    if (!item.empty() && item.front() == '-') {
      slot.alternating = true;
      item.remove_prefix(1);
    }
    if (item.empty() || item.size() > 6) fail();
    for (char ch : item)
      if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    slot.exponent = std::stol(std::string(item));
    slots.push_back(slot);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return MzvIndex(std::move(slots));
}

MzvIndex MzvIndex::alternating_head(long k, long m) {
  if (k < 0 || m < 1) throw DomainError("MzvIndex: requires k >= 0 and m >= 1");
  std::vector<MzvSlot> slots{{k + 2, true}};
  for (long i = 1; i < m; ++i) slots.push_back({1, false});
  return MzvIndex(std::move(slots));
}

std::string MzvIndex::str() const {
  std::string out = "z(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    if (entries_[i].alternating) out += '-';
    out += std::to_string(entries_[i].exponent);
  }
  return out + ")";
}

std::optional<std::pair<long, long>> MzvIndex::integral_shape() const {
  const auto& head = entries_.front();
  if (!head.alternating || head.exponent < 2) return std::nullopt;
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].alternating || entries_[i].exponent != 1) return std::nullopt;
  return std::make_pair(head.exponent - 2, static_cast<long>(entries_.size()));
}

BigRational hyperharmonic(long K, long m) {
  if (K < 0 || m < 0) throw DomainError("hyperharmonic: requires K >= 0 and m >= 0");
  HyperharmonicTable t(K, m);
  return t.at(K, m);
}

HyperharmonicTable::HyperharmonicTable(long K_max, long depth_max) : depth_(depth_max) {
  if (K_max < 0 || depth_max < 0) throw DomainError("HyperharmonicTable: negative bound");
  std::vector<BigRational> row0(static_cast<std::size_t>(depth_ + 1), BigRational(0));
  row0[0] = 1;
  rows_.push_back(std::move(row0));
  grow(K_max);
}

void HyperharmonicTable::grow(long K) {
  while (static_cast<long>(rows_.size()) <= K) {
    const long k = static_cast<long>(rows_.size());
    const auto& prev = rows_.back();
    std::vector<BigRational> row(prev.size(), BigRational(0));
    row[0] = 1;
    const BigRational w(1, k);
    for (std::size_t m = 1; m < row.size(); ++m) row[m] = prev[m] + prev[m - 1] * w;
    rows_.push_back(std::move(row));
  }
}

const BigRational& HyperharmonicTable::at(long K, long m) {
  if (K < 0 || m < 0 || m > depth_) throw DomainError("HyperharmonicTable: index out of range");
  grow(K);
  return rows_[static_cast<std::size_t>(K)][static_cast<std::size_t>(m)];
}

BigReal euler_sum_integral(long k, long m, const PrecisionContext& ctx) {
  if (k < 0 || m < 1) throw DomainError("euler_sum_integral: requires k >= 0 and m >= 1");
  PrecisionScope scope(ctx);
  const auto f = [k, m](const Real& t) {
    const Real l = bmp::log1p(Real(bmp::exp(-t)));
    return Real(ipow(t, k) * ipow(l, m));
  };
  const QuadratureResult q = de_quadrature(f, Real(0), infinity(), ctx);
  const Real scale = real_factorial(m) * real_factorial(k);
  BigReal v = q.value / BigReal(scale, Real(scale * unit_roundoff()));
  return m % 2 == 0 ? v : -v;
}

BigReal euler_sum_direct(const MzvIndex& index, long K, const PrecisionContext& ctx) {
  if (K < 2) throw DomainError("euler_sum_direct: requires K >= 2");
  if (K > ctx.max_terms) throw DomainError("euler_sum_direct: K exceeds max_terms");
  PrecisionScope scope(ctx);
  const auto& slots = index.entries();
  const std::size_t depth = slots.size();
  auto f = [&](std::size_t j, long k) {
    Real v = bmp::pow(Real(k), -static_cast<long>(slots[j].exponent));
    if (slots[j].alternating && k % 2 == 1) v = -v;
    return v;
  };
  // inner[j] = sum over k_j < current k of the depth-(d-j) tail of the index.
  std::vector<Real> inner(depth + 1, Real(0));
  inner[depth] = 1;
  Real partial(0), previous(0), last_term(0);
  for (long k = 1; k <= K; ++k) {
    // contribution of k as k_j uses inner[j+1] accumulated over smaller k
    std::vector<Real> add(depth);
    for (std::size_t j = 0; j < depth; ++j) add[j] = f(j, k) * inner[j + 1];
    for (std::size_t j = 1; j < depth; ++j) inner[j] += add[j];
    previous = partial;
    last_term = add[0];
    partial += add[0];
  }
  const Real rounding = bmp::abs(partial) * unit_roundoff() * Real(K) * Real(depth + 1);
  if (slots.front().alternating) {
    const Real mean = (partial + previous) / 2;
    return {mean, Real(10 * bmp::abs(Real(mean - partial)) + rounding)};
  }
  const Real s1 = slots.front().exponent;
  return {partial, Real(10 * bmp::abs(last_term) * K / (s1 - 1) + rounding)};
}

BigReal theorem41_rhs(long n, const PrecisionContext& ctx) {
  if (n == 2)
    throw UnsupportedError(
        "thm41: n = 2 is not verified; the literal right-hand side is -4 zeta(bar 2) = 2 zeta(2)");
  if (n < 3) throw DomainError("theorem41_rhs: requires n >= 3");
  PrecisionScope scope(ctx);
  BigReal s = s_n(n, SnMethod::EulerSums, ctx);
  Real scale(1);
  for (long i = 1; i < n; ++i) scale *= -2;
  return s * BigReal(scale, Real(0));
}

Theorem41Diagnostic theorem41_n2_diagnostic(const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Theorem41Diagnostic d;
  d.zeta2 = zeta_reference(Real(2), ctx);
  d.literal_rhs = BigReal(-4L) * euler_sum_integral(0, 1, ctx);
  d.message = "n = 2: zeta(2) = " + d.zeta2.str(20) + " but (-2)^1 * 2 zeta(bar 2) = " + d.literal_rhs.str(20) +
              "; the case is excluded from verification";
  return d;
}

BigReal s_n(long n, SnMethod method, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("s_n: requires n >= 2");
  PrecisionScope scope(ctx);
  if (method == SnMethod::EulerSums) {
    BigReal total = BigReal(2L) * euler_sum_integral(0, n - 1, ctx);
    for (long j = 3; j <= n - 1; ++j) {
      const BigReal e = euler_sum_integral(j - 2, n - j + 1, ctx);
      total += j % 2 == 0 ? e : -e;
    }
    return total;
  }
  std::vector<Real> binom(static_cast<std::size_t>(n), Real(0));  // binom(n-1, i)
  binom[0] = 1;
  for (long i = 1; i < n; ++i) binom[static_cast<std::size_t>(i)] = binom[static_cast<std::size_t>(i - 1)] * (n - i) / i;
  const auto g = [n, &binom](const Real& t) {
    const Real nl = -bmp::log1p(Real(bmp::exp(-t)));
    const Real nt = -t;
    Real v = ipow(nl, n - 1);
    for (long i = 2; i <= n - 1; ++i) v += binom[static_cast<std::size_t>(i)] * ipow(nt, n - 1 - i) * ipow(nl, i);
    return v;
  };
  const QuadratureResult q = de_quadrature(g, Real(0), infinity(), ctx);
  const Real scale = real_factorial(n - 1);
  return q.value / BigReal(scale, Real(scale * unit_roundoff()));
}

Real genfun_tolerance() { return pow10_neg(8); }

GenfunValue theorem42_genfun(const Real& z_in, long n_max, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real z(z_in);
  const Real az = bmp::abs(z);
  if (az == 0 || az > 1) throw DomainError("theorem42_genfun: requires 0 < |z| <= 1");
  if (n_max <= 0) {
    const Real target = genfun_tolerance() / 10;
    n_max = 2;
    while (bmp::pow(Real(2), 2 - n_max) * bmp::pow(az, n_max - 1) > target) ++n_max;
  }
  if (n_max < 2) throw DomainError("theorem42_genfun: requires n_max >= 2");
  GenfunValue out;
  out.n_max = n_max;
  out.value = BigReal(0L);
  Real zp = z;
  for (long n = 2; n <= n_max; ++n) {
    out.value += s_n(n, SnMethod::Integral, ctx) * BigReal(zp, Real(bmp::abs(zp) * unit_roundoff() * n));
    zp *= z;
  }
  const Real half = az / 2;
  out.tail_estimate = 2 * bmp::pow(half, n_max) / (1 - half);
  return out;
}

BigReal genfun_reference(const Real& z, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return digamma(Real(1), ctx) - digamma(Real(1 + z / 2), ctx);
}

BigReal lemma43_integral(const Real& z_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real z(z_in);
  if (z <= 0) throw DomainError("lemma43_integral: requires z > 0");
  // (1 + x^z)(1+x)^-z - 1 = x^z E + expm1(-z log1p x), E = (1+x)^-z
  const auto f = [&z](const Real& x) {
    const Real lp = -z * bmp::log1p(x);
    const Real e = bmp::exp(lp);
    return Real((bmp::pow(x, z) * e + bmp::expm1(lp)) / x);
  };
  return de_quadrature(f, Real(0), Real(1), ctx).value;
}

BigReal lemma43_reference(const Real& z, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return digamma(Real(1), ctx) - digamma(z, ctx);
}

}  // namespace koecher
