/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/identity_report.hpp"

namespace koecher {

std::string format_decimal(const Real& v, int significant) {
  if (significant < 1) significant = 1;
  return v.str(significant - 1, std::ios_base::scientific);
}

IdentityReport make_report(std::string identity_id, std::vector<std::pair<std::string, std::string>> parameters,
                           const BigReal& lhs, const BigReal& rhs, const Real& tolerance, std::int64_t terms_used,
                           std::string tail_rule, int digits) {
  IdentityReport r;
  r.identity_id = std::move(identity_id);
  r.parameters = std::move(parameters);
  const Real diff = abs_diff(lhs, rhs);
  r.lhs = format_decimal(lhs.value(), digits);
  r.rhs = format_decimal(rhs.value(), digits);
  r.abs_diff = format_decimal(diff, 6);
  r.tolerance = format_decimal(tolerance, 3);
  r.lhs_err = format_decimal(lhs.err(), 3);
  r.rhs_err = format_decimal(rhs.err(), 3);
  r.terms_used = terms_used;
  r.pass = diff <= tolerance;
  r.tail_rule = std::move(tail_rule);
  r.digits = digits;
  return r;
}

}  // namespace koecher
