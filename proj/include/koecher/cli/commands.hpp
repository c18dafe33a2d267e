/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/identity_report.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace koecher::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kFail = 2, kAccuracy = 3, kConsistency = 4 };

enum class Format { Text, Json, Csv };

struct Options {
  int digits = 30;
  std::int64_t max_terms = 1'000'000;
  Format format = Format::Text;
};

/// KOECHER_DIGITS when set to a valid integer, else 30.
int default_digits();

/// Context for the options; throws UsageError on out-of-range values.
PrecisionContext make_context(const Options& opts);

nlohmann::ordered_json report_json(const IdentityReport& r);
std::string report_csv_header();
std::string report_csv_row(const IdentityReport& r);

// Each command writes results to out and diagnostics to err and returns an
// exit code. Exceptions from the numeric layer are mapped to exit codes.
int cmd_verify(const std::string& id, const std::vector<std::string>& params, bool all, const Options& opts,
               std::ostream& out, std::ostream& err);
int cmd_expand(const std::string& sequence, const std::string& alpha, long order, const Options& opts,
               std::ostream& out, std::ostream& err);
int cmd_table(const std::string& table, long cmax, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const std::string& id, const std::vector<std::string>& params, const Options& opts, std::ostream& out,
              std::ostream& err);
int cmd_list(const Options& opts, std::ostream& out);

}  // namespace koecher::cli
