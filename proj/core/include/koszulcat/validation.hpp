#pragma once

#include <string>
#include <vector>

namespace koszulcat {

/// One failed axiom instance. `where` names the objects and basis elements
/// involved, in the order the axiom quantifies over them.
struct Violation {
  std::string axiom;
  std::vector<std::string> where;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Number of axiom instances that were evaluated.
  std::size_t checked = 0;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string axiom, std::vector<std::string> where, std::string detail = {}) {
    violations.push_back({std::move(axiom), std::move(where), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    checked += other.checked;
  }
};

/// A named yes/no verdict with a human-readable explanation.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// A bundle of checks certifying one statement; passes iff every check does.
struct Certificate {
  std::string statement;
  std::vector<Check> checks;

  bool pass() const noexcept {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  Check& add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
    return checks.back();
  }
};

}  // namespace koszulcat
