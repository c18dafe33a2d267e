/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "koecher/big_real.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace koecher {

/// Outcome of one identity check. pass == (|lhs - rhs| <= tolerance).
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  std::string tolerance;
  std::int64_t terms_used = 0;
  std::int64_t elapsed_ms = 0;
  bool pass = false;
  /// Provenance of the error bounds: which tail rule fired on the series side.
  std::string tail_rule;
  std::string lhs_err;
  std::string rhs_err;
  int digits = 0;
};

/// Scientific notation with `significant` significant digits.
std::string format_decimal(const Real& v, int significant);

IdentityReport make_report(std::string identity_id, std::vector<std::pair<std::string, std::string>> parameters,
                           const BigReal& lhs, const BigReal& rhs, const Real& tolerance, std::int64_t terms_used,
                           std::string tail_rule, int digits);

}  // namespace koecher
