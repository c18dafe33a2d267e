/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/identity_report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace koecher::cli {

/// Bad command line input; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamKind { Integer, Rational };

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Integer;
  std::string default_value;
  std::string description;
  // Inclusive bounds, checked after parsing.
  BigRational min;
  BigRational max;
};

using ParamMap = std::map<std::string, BigRational>;

/// Direct-summation counterpart of an identity, for the benchmark:
/// sum_{n >= 1} (a n + b)^-s.
struct DirectSeries {
  long a = 1;
  long b = 0;
  long s = 2;
  std::string description;
};

struct RegistryEntry {
  std::string id;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<IdentityReport(const ParamMap&, const PrecisionContext&)> run;
  /// Fixed tolerance for identities that are not held to 10^-digits
  /// (quadrature-limited or truncated); nullopt means 10^-digits.
  std::optional<double> fixed_tolerance;
  std::optional<std::function<DirectSeries(const ParamMap&)>> direct;
};

/// All identities in a fixed order.
const std::vector<RegistryEntry>& registry();

/// nullptr when the id is unknown.
const RegistryEntry* find_entry(const std::string& id);

/// Parses "name=value" items against the entry's schema, filling defaults.
/// Values are integers, decimals or p/q fractions. Throws UsageError.
ParamMap resolve_params(const RegistryEntry& entry, const std::vector<std::string>& items);

/// Parameters in schema order as text, for reports.
std::vector<std::pair<std::string, std::string>> param_strings(const RegistryEntry& entry, const ParamMap& params);

/// "3", "-1/2", "0.25" -> exact value. Throws UsageError.
BigRational parse_value(const std::string& text);

}  // namespace koecher::cli
