#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "koszulcat/complex.hpp"
#include "koszulcat/regular.hpp"

namespace koszulcat::cli {

using Json = nlohmann::ordered_json;

/// Machine-readable result of one command. Key order is fixed so that equal
/// computations serialize to equal bytes.
class Report {
 public:
  explicit Report(std::string command);

  Json& parameters() { return doc_["parameters"]; }
  void set_window(std::optional<int> w);
  /// Adds a table of (p, object, degree) -> dim rows; p may be absent.
  void add_table(const std::string& title, const std::vector<GradedEntry>& rows, const CategoryPresentation& c,
                 bool with_p = true);
  void add_certificate(const Certificate& c);
  void add_witness(const RegularityWitness& w, const Representation& r, const std::string& element);
  void add_note(const std::string& note);
  void set_problem(const std::string& path, const std::string& text);
  /// Verdict "pass" unless a certificate failed or fail() was called.
  void fail() { forced_fail_ = true; }
  bool pass() const;

  Json finish() const;

 private:
  Json doc_;
  bool forced_fail_ = false;
};

Json error_report(const std::string& command, const std::string& kind, const std::string& message);

/// Aligned plain-text rendering of a report.
std::string render_text(const Json& report);

}  // namespace koszulcat::cli
