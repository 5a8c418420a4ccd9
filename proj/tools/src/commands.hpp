#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace koszulcat::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

/// Flags of one invocation. Unset fields fall back to the task block of the
/// problem file.
struct Options {
  std::string verb;
  std::string file;
  std::optional<std::string> field;
  std::optional<int> max_degree;
  std::vector<std::string> alpha;
  std::optional<std::size_t> n;
  std::optional<int> p;
  std::vector<std::string> modules;
  std::optional<std::string> monoid;
  bool check_resolution = false;
  unsigned threads = 1;
};

struct Outcome {
  int exit_code = kExitPass;
  Json report;
};

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"validate", "koszul", "regular-check", "commutant",
                                          "tensor-idem", "hh", "syzygy", "tensor-over"};
  return v;
}

/// Runs one verb on a problem given as text. Library errors become an
/// input-error report with exit code 2; nothing escapes except bad_alloc.
Outcome run_text(const Options& opts, const std::string& text, const std::string& path);
/// Same, reading the problem from opts.file.
Outcome run(const Options& opts);

/// Re-runs a report from its embedded problem and parameters. Exit 0 if the
/// new report is identical, 1 if it differs, 2 if the report is unreadable.
Outcome replay(const std::string& report_text, unsigned threads);

}  // namespace koszulcat::cli
