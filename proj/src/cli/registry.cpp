/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/cli/registry.hpp"

#include "koecher/euler_sums.hpp"
#include "koecher/exact.hpp"
#include "koecher/markov_apery.hpp"
#include "koecher/pi_powers.hpp"
#include "koecher/special.hpp"
#include "koecher/transform.hpp"

#include <chrono>

namespace koecher::cli {

namespace {

long as_long(const ParamMap& p, const std::string& name) { return numerator(p.at(name)).convert_to<long>(); }

ParamSpec integer_param(std::string name, long def, long lo, long hi, std::string description) {
  return {std::move(name), ParamKind::Integer, std::to_string(def), std::move(description), BigRational(lo),
          BigRational(hi)};
}

ParamSpec rational_param(std::string name, std::string def, BigRational lo, BigRational hi, std::string description) {
  return {std::move(name), ParamKind::Rational, std::move(def), std::move(description), std::move(lo), std::move(hi)};
}

// Runs body and stamps the wall time into the report.
IdentityReport timed(const std::function<IdentityReport()>& body) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r = body();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

using Params = std::vector<std::pair<std::string, std::string>>;

IdentityReport series_report(const std::string& id, Params params, const BigReal& lhs, const SeriesValue& rhs,
                             const PrecisionContext& ctx) {
  return make_report(id, std::move(params), lhs, rhs.value, ctx.tolerance(), rhs.terms_used, rhs.tail_rule,
                     ctx.target_digits);
}

BigReal pi_power(long e, const PrecisionContext& ctx) {
  const BigReal pi = pi_reference(ctx);
  BigReal out(1L);
  for (long i = 0; i < e; ++i) out *= pi;
  return out;
}

std::string fixed_string(const BigRational& q) { return to_string(q); }

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r;

  r.push_back({"eq1.1", "zeta(3) = (5/2) sum (-1)^(k-1) / (binom(2k,k) k^3)", {},
               [](const ParamMap&, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   return series_report("eq1.1", {}, zeta_reference(Real(3), ctx), markov_zeta3_series(ctx), ctx);
                 });
               },
               std::nullopt, [](const ParamMap&) { return DirectSeries{1, 0, 3, "sum n^-3"}; }});

  r.push_back({"eq1.3",
               "sum 1/(n(n^2-x^2)) directly against the accelerated sum with z_n = n^2, alpha = 1/2, x^2 in place of x",
               {rational_param("x", "1/4", BigRational(-99, 100), BigRational(99, 100), "real, |x| < 1")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const BigRational x = p.at("x");
                   const TransformInstance inst{ZSequence::shifted_square(0), BigRational(1, 2), x * x};
                   const SeriesValue lhs = lhs_sum(inst, ctx);
                   const SeriesValue rhs = accelerated_sum(inst, ctx);
                   return series_report("eq1.3", {{"x", fixed_string(x)}}, lhs.value, rhs, ctx);
                 });
               },
               std::nullopt, std::nullopt});

  r.push_back({"eq1.4", "zeta(5) from the two central-binomial series with H^(2)_(k-1)", {},
               [](const ParamMap&, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   return series_report("eq1.4", {}, zeta_reference(Real(5), ctx), koecher_zeta5_series(ctx), ctx);
                 });
               },
               std::nullopt, [](const ParamMap&) { return DirectSeries{1, 0, 5, "sum n^-5"}; }});

  r.push_back({"thm41", "zeta(n) = (-2)^(n-1) (2 zeta(bar 2,{1}^(n-2)) + sum_j (-1)^j zeta(bar j,{1}^(n-j)))",
               {integer_param("n", 3, 2, 12, "integer; n = 2 is reported as unsupported")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 const long n = as_long(p, "n");
                 if (n == 2) throw UnsupportedError(theorem41_n2_diagnostic(ctx).message);
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const BigReal rhs = theorem41_rhs(n, ctx);
                   return make_report("thm41", {{"n", std::to_string(n)}}, zeta_reference(Real(n), ctx), rhs,
                                      pow10_neg(12), n - 2, "quadrature", ctx.target_digits);
                 });
               },
               1e-12, std::nullopt});

  r.push_back({"thm42", "sum_{n>=2} S_n z^(n-1) = psi(1) - psi(1 + z/2), truncated",
               {rational_param("z", "1/2", BigRational(-1), BigRational(1), "real, 0 < |z| <= 1")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 const BigRational z = p.at("z");
                 if (z == 0) throw UsageError("thm42: z must be nonzero");
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const Real zr = to_real(z);
                   const GenfunValue g = theorem42_genfun(zr, 0, ctx);
                   return make_report("thm42", {{"z", fixed_string(z)}}, genfun_reference(zr, ctx), g.value,
                                      Real(genfun_tolerance() + g.tail_estimate), g.n_max - 1, "bounded-coefficients",
                                      ctx.target_digits);
                 });
               },
               1e-8, std::nullopt});

  r.push_back({"lemma43", "int_0^1 ((1+x^z)/(1+x)^z - 1) dx/x = psi(1) - psi(z)",
               {rational_param("z", "2", BigRational(1, 100), BigRational(100), "real, z > 0")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const Real z = to_real(p.at("z"));
                   return make_report("lemma43", {{"z", fixed_string(p.at("z"))}}, lemma43_reference(z, ctx),
                                      lemma43_integral(z, ctx), pow10_neg(12), 0, "quadrature", ctx.target_digits);
                 });
               },
               1e-12, std::nullopt});

  r.push_back({"lemma24", "sum_{n>k} 1/((n+r+k)...(n+r-k)) = r!/(2k(2k+r)!)",
               {integer_param("r", 0, 0, 20, "integer >= 0"), integer_param("k", 1, 1, 20, "integer >= 1")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const long rr = as_long(p, "r");
                   const long k = as_long(p, "k");
                   // (n+r) prod_i ((n+r)^2 - i^2) with z_n = (n+r)^2 and roots i^2.
                   std::vector<Real> roots;
                   for (long i = 1; i <= k; ++i) roots.emplace_back(i * i);
                   std::int64_t terms = 0;
                   const BigReal rhs =
                       shifted_product_sum(ZSequence::shifted_square(rr), Real(0.5), roots, k + 1, ctx, &terms);
                   return make_report("lemma24", {{"r", std::to_string(rr)}, {"k", std::to_string(k)}},
                                      BigReal::from_rational(telescoping_tail(rr, k)), rhs, ctx.tolerance(), terms,
                                      "hurwitz-expansion", ctx.target_digits);
                 });
               },
               std::nullopt, std::nullopt});

  r.push_back({"thm51", "zeta(3) - sum_{j<=c} j^-3 from the P_c central-binomial series",
               {integer_param("c", 1, 0, 8, "integer shift")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] { return verify_theorem51(as_long(p, "c"), ctx); });
               },
               std::nullopt,
               [](const ParamMap& p) {
                 return DirectSeries{1, as_long(p, "c"), 3, "sum (n+c)^-3"};
               }});

  r.push_back({"eq5.3", "zeta(3) from the shift-1 series with 5k^3+12k^2+4k+2", {},
               [](const ParamMap&, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   return series_report("eq5.3", {}, zeta_reference(Real(3), ctx), zeta3_shift1_series(ctx), ctx);
                 });
               },
               std::nullopt, [](const ParamMap&) { return DirectSeries{1, 0, 3, "sum n^-3"}; }});

  r.push_back({"eq5.4", "zeta(3) from the shift-2 series with P_2", {},
               [](const ParamMap&, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   return series_report("eq5.4", {}, zeta_reference(Real(3), ctx), zeta3_shift2_series(ctx), ctx);
                 });
               },
               std::nullopt, [](const ParamMap&) { return DirectSeries{1, 0, 3, "sum n^-3"}; }});

  r.push_back({"eq6.2", "(1 - 4^(-mu-1)) zeta(2mu+2) from the odd-harmonic central-binomial series",
               {integer_param("mu", 1, 0, 8, "integer >= 0")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const long mu = as_long(p, "mu");
                   return series_report("eq6.2", {{"mu", std::to_string(mu)}}, theorem61_lhs(mu, ctx),
                                        theorem61_rhs(mu, ctx), ctx);
                 });
               },
               std::nullopt,
               [](const ParamMap& p) {
                 return DirectSeries{2, -1, 2 * as_long(p, "mu") + 2, "sum (2n-1)^-(2mu+2)"};
               }});

  r.push_back({"eq6.3", "pi^2/8 from the cubic central-binomial series", {},
               [](const ParamMap&, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   return series_report("eq6.3", {}, pi_power(2, ctx) / BigReal(8L), pi2_over_8_series(ctx), ctx);
                 });
               },
               std::nullopt, [](const ParamMap&) { return DirectSeries{2, -1, 2, "sum (2n-1)^-2"}; }});

  r.push_back({"eq6.4", "pi^4/96 from the series with inner odd-harmonic sums", {},
               [](const ParamMap&, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   return series_report("eq6.4", {}, pi_power(4, ctx) / BigReal(96L), pi4_over_96_series(ctx), ctx);
                 });
               },
               std::nullopt, [](const ParamMap&) { return DirectSeries{2, -1, 4, "sum (2n-1)^-4"}; }});

  r.push_back({"lemma63", "sum_{n>k} 1/(n;k) for z_n = (n+1/2)^2, alpha = 0, against its closed form",
               {integer_param("k", 1, 1, 20, "integer >= 1")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] {
                   PrecisionScope scope(ctx);
                   const long k = as_long(p, "k");
                   const ZSequence seq = ZSequence::half_square();
                   std::vector<Real> roots;
                   for (long i = 1; i <= k; ++i) roots.push_back(seq.real_value(i));
                   std::int64_t terms = 0;
                   const BigReal rhs = shifted_product_sum(seq, Real(0), roots, k + 1, ctx, &terms);
                   return make_report("lemma63", {{"k", std::to_string(k)}},
                                      BigReal::from_rational(lemma63_sum(k)), rhs, ctx.tolerance(), terms,
                                      "hurwitz-expansion", ctx.target_digits);
                 });
               },
               std::nullopt, std::nullopt});

  r.push_back({"leshchiner", "pi^2/10 (mu = 0) and pi^4/96 (mu = 1) from the earlier central-binomial family",
               {integer_param("mu", 0, 0, 1, "0 or 1")},
               [](const ParamMap& p, const PrecisionContext& ctx) {
                 return timed([&] { return leshchiner_check(as_long(p, "mu"), ctx); });
               },
               std::nullopt, std::nullopt});

  return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

const RegistryEntry* find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return &e;
  return nullptr;
}

BigRational parse_value(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    const BigRational num = parse_decimal(text.substr(0, slash));
    const BigRational den = parse_decimal(text.substr(slash + 1));
    if (!is_integer(num) || !is_integer(den)) throw std::invalid_argument("fraction parts must be integers");
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  } catch (const std::exception& e) {
    throw UsageError("cannot parse '" + text + "' as a number: " + e.what());
  }
}

ParamMap resolve_params(const RegistryEntry& entry, const std::vector<std::string>& items) {
  ParamMap out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const ParamSpec* spec = nullptr;
    for (const auto& p : entry.params)
      if (p.name == name) spec = &p;
    if (!spec) throw UsageError(entry.id + " has no parameter '" + name + "'");
    if (out.count(name)) throw UsageError("parameter '" + name + "' given twice");
    out[name] = parse_value(item.substr(eq + 1));
  }
  for (const auto& p : entry.params) {
    if (!out.count(p.name)) out[p.name] = parse_value(p.default_value);
    const BigRational& v = out[p.name];
    if (p.kind == ParamKind::Integer && !is_integer(v)) throw UsageError(p.name + " must be an integer");
    if (v < p.min || v > p.max)
      throw UsageError(p.name + " must lie in [" + to_string(p.min) + ", " + to_string(p.max) + "]");
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> param_strings(const RegistryEntry& entry, const ParamMap& params) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : entry.params) out.emplace_back(p.name, to_string(params.at(p.name)));
  return out;
}

}  // namespace koecher::cli
