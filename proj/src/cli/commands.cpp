/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/cli/commands.hpp"

#include "koecher/cli/registry.hpp"
#include "koecher/exact.hpp"
#include "koecher/markov_apery.hpp"
#include "koecher/sequence.hpp"
#include "koecher/transform.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace koecher::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string sci(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", decimals, v);
  return buf;
}

// Runs body, mapping library exceptions to exit codes. label prefixes messages.
int guarded(const std::string& label, std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << label << ": usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << label << ": unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << label << ": domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const AccuracyError& e) {
    err << label << ": accuracy error: " << e.what() << " (best estimate " << e.best_estimate().str(20)
        << ", terms " << e.terms_used() << ")\n";
    return kAccuracy;
  } catch (const ConditioningError& e) {
    err << label << ": conditioning error: " << e.what() << '\n';
    return kAccuracy;
  } catch (const ConsistencyError& e) {
    err << label << ": internal consistency error: " << e.what() << '\n';
    return kConsistency;
  } catch (const std::invalid_argument& e) {
    err << label << ": invalid argument: " << e.what() << '\n';
    return kUsage;
  }
}

std::string params_text(const IdentityReport& r) {
  if (r.parameters.empty()) return "(none)";
  std::string s;
  for (const auto& [k, v] : r.parameters) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

void write_text(const IdentityReport& r, std::ostream& out) {
  out << (r.pass ? "PASS " : "FAIL ") << r.identity_id << '\n'
      << "  parameters  " << params_text(r) << '\n'
      << "  lhs         " << r.lhs << '\n'
      << "  rhs         " << r.rhs << '\n'
      << "  abs_diff    " << r.abs_diff << '\n'
      << "  tolerance   " << r.tolerance << '\n'
      << "  terms_used  " << r.terms_used << '\n'
      << "  tail_rule   " << r.tail_rule << '\n'
      << "  lhs_err     " << r.lhs_err << '\n'
      << "  rhs_err     " << r.rhs_err << '\n'
      << "  digits      " << r.digits << '\n'
      << "  elapsed_ms  " << r.elapsed_ms << '\n';
}

// Fixed-tolerance identities run with enough digits to resolve the tolerance.
PrecisionContext entry_context(const RegistryEntry& entry, const Options& opts) {
  Options o = opts;
  if (entry.fixed_tolerance) {
    const int need = static_cast<int>(std::ceil(-std::log10(*entry.fixed_tolerance))) + 3;
    if (o.digits < need) o.digits = need;
  }
  return make_context(o);
}

int run_one(const RegistryEntry& entry, const std::vector<std::string>& items, const Options& opts, bool header,
            std::ostream& out, std::ostream& err) {
  return guarded(entry.id, err, [&] {
    const ParamMap params = resolve_params(entry, items);
    const IdentityReport r = entry.run(params, entry_context(entry, opts));
    switch (opts.format) {
      case Format::Json: out << report_json(r).dump() << '\n'; break;
      case Format::Csv:
        if (header) out << report_csv_header() << '\n';
        out << report_csv_row(r) << '\n';
        break;
      case Format::Text: write_text(r, out); break;
    }
    return r.pass ? kPass : kFail;
  });
}

}  // namespace

int default_digits() {
  if (const char* env = std::getenv("KOECHER_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 4 && v <= 1000) return static_cast<int>(v);
  }
  return 30;
}

PrecisionContext make_context(const Options& opts) {
  if (opts.digits < 4 || opts.digits > 1000) throw UsageError("--digits must lie in [4, 1000]");
  if (opts.max_terms < 1000) throw UsageError("--max-terms must be at least 1000");
  return PrecisionContext::for_digits(opts.digits, opts.max_terms);
}

nlohmann::ordered_json report_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_diff"] = r.abs_diff;
  j["tolerance"] = r.tolerance;
  j["terms_used"] = r.terms_used;
  j["elapsed_ms"] = r.elapsed_ms;
  j["pass"] = r.pass;
  j["tail_rule"] = r.tail_rule;
  j["lhs_err"] = r.lhs_err;
  j["rhs_err"] = r.rhs_err;
  j["digits"] = r.digits;
  return j;
}

std::string report_csv_header() {
  return "identity_id,parameters,lhs,rhs,abs_diff,tolerance,terms_used,elapsed_ms,pass,tail_rule,lhs_err,rhs_err,"
         "digits";
}

std::string report_csv_row(const IdentityReport& r) {
  std::string params;
  for (const auto& [k, v] : r.parameters) {
    if (!params.empty()) params += ';';
    params += k + "=" + v;
  }
  return r.identity_id + "," + params + "," + r.lhs + "," + r.rhs + "," + r.abs_diff + "," + r.tolerance + "," +
         std::to_string(r.terms_used) + "," + std::to_string(r.elapsed_ms) + "," + (r.pass ? "true" : "false") +
         "," + r.tail_rule + "," + r.lhs_err + "," + r.rhs_err + "," + std::to_string(r.digits);
}

int cmd_verify(const std::string& id, const std::vector<std::string>& params, bool all, const Options& opts,
               std::ostream& out, std::ostream& err) {
  if (all) {
    if (!id.empty() || !params.empty()) {
      err << "verify: --all takes no identity or parameters\n";
      return kUsage;
    }
    int worst = kPass;
    bool header = true;
    for (const auto& entry : registry()) {
      const int code = run_one(entry, {}, opts, header, out, err);
      header = false;
      if (code > worst) worst = code;
    }
    return worst;
  }
  if (id.empty()) {
    err << "verify: an identity id or --all is required\n";
    return kUsage;
  }
  const RegistryEntry* entry = find_entry(id);
  if (!entry) {
    err << "verify: unknown identity '" << id << "' (see 'koecher list')\n";
    return kUsage;
  }
  return run_one(*entry, params, opts, true, out, err);
}

int cmd_expand(const std::string& sequence, const std::string& alpha_text, long order, const Options& opts,
               std::ostream& out, std::ostream& err) {
  return guarded("expand", err, [&] {
    if (order < 0 || order > 10) throw UsageError("--order must lie in [0, 10]");
    const PrecisionContext ctx = make_context(opts);
    const ZSequence seq = ZSequence::parse(sequence);
    const BigRational alpha = parse_value(alpha_text);
    PrecisionScope scope(ctx);
    const std::vector<SeriesValue> coeffs = expand_coefficients(seq, alpha, order, ctx);
    const Real tol = ctx.tolerance();
    bool ok = true;
    if (opts.format == Format::Csv) out << "m,coefficient,reference,diff,terms_used,pass\n";
    if (opts.format == Format::Text)
      out << "expand " << seq.spec() << " alpha=" << to_string(alpha) << " digits=" << ctx.target_digits << '\n';
    for (long m = 0; m <= order; ++m) {
      const SeriesValue& c = coeffs[static_cast<std::size_t>(m)];
      const BigReal ref = zeta_z(seq, Real(m + 1 + to_real(alpha)), ctx);
      const Real diff = abs_diff(c.value, ref);
      const bool pass = diff <= tol;
      ok = ok && pass;
      const std::string cs = format_decimal(c.value.value(), ctx.target_digits);
      const std::string rs = format_decimal(ref.value(), ctx.target_digits);
      const std::string ds = format_decimal(diff, 3);
      switch (opts.format) {
        case Format::Json: {
          nlohmann::ordered_json j;
          j["sequence"] = seq.spec();
          j["alpha"] = to_string(alpha);
          j["m"] = m;
          j["coefficient"] = cs;
          j["reference"] = rs;
          j["diff"] = ds;
          j["terms_used"] = c.terms_used;
          j["pass"] = pass;
          out << j.dump() << '\n';
          break;
        }
        case Format::Csv:
          out << m << ',' << cs << ',' << rs << ',' << ds << ',' << c.terms_used << ',' << (pass ? "true" : "false")
              << '\n';
          break;
        case Format::Text:
          out << "  m=" << m << "  coefficient " << cs << "\n       reference   " << rs << "\n       diff        "
              << ds << "  terms " << c.terms_used << (pass ? "  ok" : "  MISMATCH") << '\n';
          break;
      }
    }
    return ok ? kPass : kFail;
  });
}

int cmd_table(const std::string& table, long cmax, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded("table", err, [&] {
    if (table != "pc") throw UsageError("unknown table '" + table + "' (available: pc)");
    if (cmax < 0 || cmax > 12) throw UsageError("--cmax must lie in [0, 12]");
    if (opts.format == Format::Csv) out << "c,degree,leading,constant,audit,coefficients\n";
    if (opts.format == Format::Text) out << "c  degree  leading  constant  audit  coefficients(low-to-high)\n";
    for (long c = 0; c <= cmax; ++c) {
      const PcPolynomial p = pc_polynomial(c);
      const std::string audit = p.audit.confirmed() ? "CONFIRMED" : "VIOLATED";
      const std::string leading = p.poly.leading().str();
      const std::string constant = p.poly.constant_term().str();
      switch (opts.format) {
        case Format::Json: {
          nlohmann::ordered_json j;
          j["c"] = c;
          j["coefficients"] = p.poly.to_csv();
          j["degree"] = p.poly.degree();
          j["leading"] = leading;
          j["constant"] = constant;
          j["audit"] = audit;
          j["integer_coefficients"] = p.audit.integer_coefficients;
          j["degree_is_3c"] = p.audit.degree_is_3c;
          j["leading_is_5"] = p.audit.leading_is_5;
          j["constant_is_c_fact_2c_fact"] = p.audit.constant_is_c_fact_2c_fact;
          out << j.dump() << '\n';
          break;
        }
        case Format::Csv:
          out << c << ',' << p.poly.degree() << ',' << leading << ',' << constant << ',' << audit << ",\""
              << p.poly.to_csv() << "\"\n";
          break;
        case Format::Text:
          out << c << "  " << p.poly.degree() << "  " << leading << "  " << constant << "  " << audit << "  "
              << p.poly.to_csv() << '\n';
          break;
      }
    }
    return kPass;
  });
}

int cmd_bench(const std::string& id, const std::vector<std::string>& items, const Options& opts, std::ostream& out,
              std::ostream& err) {
  const RegistryEntry* entry = find_entry(id);
  if (!entry) {
    err << "bench: unknown identity '" << id << "'\n";
    return kUsage;
  }
  if (!entry->direct) {
    err << "bench: " << id << " has no direct-series counterpart\n";
    return kUsage;
  }
  return guarded("bench", err, [&] {
    const ParamMap params = resolve_params(*entry, items);
    const PrecisionContext ctx = make_context(opts);
    const DirectSeries d = (*entry->direct)(params);
    const IdentityReport acc = entry->run(params, ctx);

    // sum_{n > N} (a n + b)^-s <= (a N + b)^(1-s) / (a (s-1)) <= 10^-digits
    const double log_base = (ctx.target_digits - std::log10(static_cast<double>(d.a * (d.s - 1)))) / (d.s - 1);
    const double estimate = std::ceil((std::pow(10.0, log_base) - d.b) / d.a);
    const bool feasible = estimate <= static_cast<double>(ctx.max_terms);
    const double ratio = estimate / static_cast<double>(acc.terms_used > 0 ? acc.terms_used : 1);

    std::int64_t direct_ms = 0;
    std::string direct_diff;
    if (feasible) {
      PrecisionScope scope(ctx);
      const auto start = Clock::now();
      const auto N = static_cast<std::int64_t>(estimate);
      Real sum(0);
      for (std::int64_t n = N; n >= 1; --n) sum += 1 / boost::multiprecision::pow(Real(d.a * n + d.b), d.s);
      direct_ms = ms_since(start);
      direct_diff = format_decimal(Real(boost::multiprecision::abs(Real(sum - Real(acc.lhs)))), 3);
    }

    const std::vector<std::pair<std::string, std::string>> ps = param_strings(*entry, params);
    switch (opts.format) {
      case Format::Json: {
        nlohmann::ordered_json j;
        j["identity_id"] = id;
        nlohmann::ordered_json pj = nlohmann::ordered_json::object();
        for (const auto& [k, v] : ps) pj[k] = v;
        j["parameters"] = pj;
        j["digits"] = ctx.target_digits;
        j["accelerated_terms"] = acc.terms_used;
        j["accelerated_ms"] = acc.elapsed_ms;
        j["accelerated_pass"] = acc.pass;
        j["direct_series"] = d.description;
        j["direct_estimated_terms"] = sci(estimate);
        j["direct_status"] = feasible ? "run" : "infeasible";
        if (feasible) {
          j["direct_terms"] = static_cast<std::int64_t>(estimate);
          j["direct_ms"] = direct_ms;
          j["direct_abs_diff"] = direct_diff;
        }
        j["max_terms"] = ctx.max_terms;
        j["ratio"] = sci(ratio);
        out << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        out << "identity_id,digits,accelerated_terms,accelerated_ms,direct_estimated_terms,direct_status,direct_ms,"
               "direct_abs_diff,ratio\n"
            << id << ',' << ctx.target_digits << ',' << acc.terms_used << ',' << acc.elapsed_ms << ',' << sci(estimate)
            << ',' << (feasible ? "run" : "infeasible") << ',' << direct_ms << ',' << direct_diff << ','
            << sci(ratio) << '\n';
        break;
      case Format::Text:
        out << "bench " << id << " digits=" << ctx.target_digits << '\n'
            << "  accelerated  terms " << acc.terms_used << "  elapsed_ms " << acc.elapsed_ms
            << (acc.pass ? "  pass" : "  FAIL") << '\n'
            << "  direct       " << d.description << "  estimated terms " << sci(estimate) << '\n';
        if (feasible)
          out << "  direct       ran " << static_cast<std::int64_t>(estimate) << " terms  elapsed_ms " << direct_ms
              << "  abs_diff " << direct_diff << '\n';
        else
          out << "  direct       infeasible (estimate exceeds max_terms " << ctx.max_terms << ")\n";
        out << "  ratio        " << sci(ratio) << '\n';
        break;
    }
    return kPass;
  });
}

int cmd_list(const Options& opts, std::ostream& out) {
  for (const auto& e : registry()) {
    if (opts.format == Format::Json) {
      nlohmann::ordered_json j;
      j["identity_id"] = e.id;
      j["description"] = e.description;
      nlohmann::ordered_json ps = nlohmann::ordered_json::array();
      for (const auto& p : e.params) {
        nlohmann::ordered_json pj;
        pj["name"] = p.name;
        pj["kind"] = p.kind == ParamKind::Integer ? "integer" : "rational";
        pj["default"] = p.default_value;
        pj["min"] = to_string(p.min);
        pj["max"] = to_string(p.max);
        pj["description"] = p.description;
        ps.push_back(pj);
      }
      j["parameters"] = ps;
      j["bench"] = e.direct.has_value();
      out << j.dump() << '\n';
      continue;
    }
    out << e.id << "  " << e.description << '\n';
    for (const auto& p : e.params)
      out << "    " << p.name << "=" << p.default_value << "  [" << to_string(p.min) << ", " << to_string(p.max)
          << "]  " << p.description << '\n';
  }
  return kPass;
}

}  // namespace koecher::cli
