#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"

using namespace koszulcat::cli;

namespace {

int emit(const Outcome& out, const std::string& report_path, bool json) {
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) {
      std::cerr << "cannot write report to '" << report_path << "'\n";
      return kExitInputError;
    }
    f << out.report.dump(2) << "\n";
  }
  if (json) std::cout << out.report.dump(2) << "\n";
  else std::cout << render_text(out.report);
  return out.exit_code;
}

std::string describe(const std::string& verb) {
  static const std::map<std::string, std::string> text{
      {"validate", "check the category, monoid and module axioms"},
      {"koszul", "build K(alpha) and its homology"},
      {"regular-check", "test whether alpha is a regular sequence"},
      {"commutant", "compute the commutant of a monoid"},
      {"tensor-idem", "decide whether the unit monoid is tensor idempotent"},
      {"hh", "Hochschild cohomology of A_n through the Koszul bimodule resolution"},
      {"syzygy", "resolve an A_n-module by A_n-free terms"},
      {"tensor-over", "relative tensor product M (x)_A N"},
  };
  return text.at(verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul complexes, regularity and Hochschild cohomology over monoids in functor categories"};
  app.require_subcommand(1);
  Options opts;
  unsigned threads = 1;
  std::string report_path;
  bool json = false;
  app.add_option("--threads", threads, "worker threads for cell-parallel loops")
      ->envname("KOSZULCAT_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_option("--report", report_path, "write the JSON report to this path");
  app.add_flag("--json", json, "print the JSON report instead of tables");

  for (const auto& verb : verbs()) {
    CLI::App* sub = app.add_subcommand(verb, describe(verb));
    sub->add_option("file", opts.file, "problem file (.kz)")->required();
    sub->add_option("--field", opts.field, "override the field: Q or F_p");
    sub->add_option("--max-degree", opts.max_degree, "truncation degree");
    sub->add_option("--monoid", opts.monoid, "monoid to work in (default: task block, else the last defined)");
    if (verb == "koszul" || verb == "regular-check") {
      sub->add_option("--alpha", opts.alpha, "elements of A(1), repeated or comma-separated");
    }
    if (verb == "koszul") sub->add_flag("--check-resolution", opts.check_resolution, "cross-check regularity");
    if (verb == "hh" || verb == "syzygy") sub->add_option("-n", opts.n, "number of variables");
    if (verb == "hh") sub->add_option("-p", opts.p, "cohomological degree (default: 0..n+1)");
    if (verb == "hh" || verb == "syzygy" || verb == "tensor-over") {
      sub->add_option("--module", opts.modules, "module name from the problem file");
    }
    sub->callback([&opts, verb] { opts.verb = verb; });
  }
  std::string replay_file;
  CLI::App* rp = app.add_subcommand("replay", "re-run a JSON report and compare");
  rp->add_option("report", replay_file, "report written with --report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }
  opts.threads = threads;

  if (rp->parsed()) {
    std::ifstream in(replay_file);
    if (!in) {
      std::cerr << "cannot read '" << replay_file << "'\n";
      return kExitInputError;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const Outcome out = replay(ss.str(), threads);
    const int code = emit(out, report_path, json);
    if (out.report.contains("replay")) {
      std::cout << "replay: " << (out.report["replay"]["identical"].get<bool>() ? "identical" : "DIFFERS") << "\n";
    }
    return code;
  }
  return emit(run(opts), report_path, json);
}
