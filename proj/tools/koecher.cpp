/* SPDX-License-Identifier: Apache-2.0 */

#include "koecher/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace koecher::cli;

int main(int argc, char** argv) {
  CLI::App app{"Verify series identities from the Koecher transform and related Euler-sum families"};
  app.require_subcommand(1);

  Options opts;
  opts.digits = default_digits();
  bool json = false;
  bool csv = false;
  std::string out_path;
  app.add_option("--digits", opts.digits, "Target decimal digits (default 30, or KOECHER_DIGITS)");
  app.add_option("--max-terms", opts.max_terms, "Truncation limit for any single summation");
  auto* json_flag = app.add_flag("--json", json, "Newline-delimited JSON output");
  app.add_flag("--csv", csv, "CSV output")->excludes(json_flag);
  app.add_option("--out", out_path, "Write results to this file instead of stdout");

  std::string id;
  std::vector<std::string> params;
  bool all = false;
  auto* verify = app.add_subcommand("verify", "Check one registered identity, or all of them");
  verify->add_option("identity", id, "Identity id (see list)");
  verify->add_option("params", params, "name=value parameters");
  verify->add_flag("--all", all, "Run every registry entry with default parameters");

  std::string sequence;
  std::string alpha;
  long order = 3;
  auto* expand = app.add_subcommand("expand", "Power-series coefficients in x of the accelerated side");
  expand->add_option("sequence", sequence, "power:c=,d=,beta= | linear:c= | sqshift:c= | halfsq")->required();
  expand->add_option("alpha", alpha, "Exponent alpha, e.g. 1/2")->required();
  expand->add_option("--order", order, "Highest coefficient index (0..10)");

  std::string table;
  long cmax = 5;
  auto* tab = app.add_subcommand("table", "Polynomial tables");
  tab->add_option("name", table, "Table name (pc)")->required();
  tab->add_option("--cmax", cmax, "Largest shift c (0..12)");

  std::string bench_id;
  std::vector<std::string> bench_params;
  auto* bench = app.add_subcommand("bench", "Accelerated against direct summation term counts");
  bench->add_option("identity", bench_id, "Identity id")->required();
  bench->add_option("params", bench_params, "name=value parameters");

  auto* list = app.add_subcommand("list", "Registered identities and their parameters");

  // Global flags are accepted after the subcommand as well.
  for (auto* sub : {verify, expand, tab, bench, list}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  opts.format = json ? Format::Json : csv ? Format::Csv : Format::Text;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (verify->parsed()) return cmd_verify(id, params, all, opts, out, std::cerr);
  if (expand->parsed()) return cmd_expand(sequence, alpha, order, opts, out, std::cerr);
  if (tab->parsed()) return cmd_table(table, cmax, opts, out, std::cerr);
  if (bench->parsed()) return cmd_bench(bench_id, bench_params, opts, out, std::cerr);
  if (list->parsed()) return cmd_list(opts, out);
  return kUsage;
}
