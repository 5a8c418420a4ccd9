#pragma once

#include <yaml-cpp/yaml.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulcat/monoid.hpp"
#include "koszulcat/polynomial.hpp"

namespace koszulcat::cli {

/// Task block of a problem file; command-line flags override each field.
struct TaskSpec {
  std::string command;
  std::string monoid;
  std::vector<std::string> alpha;
  std::optional<int> max_degree;
  std::optional<std::size_t> n;
  std::optional<int> p;
  std::vector<std::string> modules;
  bool check_resolution = false;
};

/// Modules are built on demand: some live over A_n, which only exists once a
/// command has fixed n.
struct ModuleSpec {
  std::string name;
  std::string over;  // a monoid name, or "A_n"
  YAML::Node node;
};

struct LoadOptions {
  std::optional<Field> field;
  std::optional<int> max_degree;  // default cap for polynomial monoids
};

struct Problem {
  std::string path;
  std::string text;
  Field field = Field::rationals();
  CategoryPtr category;
  std::vector<std::string> monoid_order;
  std::map<std::string, MonoidPtr> monoids;
  std::map<std::string, PolynomialMonoid> polynomials;
  std::vector<ModuleSpec> modules;
  TaskSpec task;

  const MonoidPtr& monoid(const std::string& name) const;
  const ModuleSpec& module(const std::string& name) const;
};

/// Throws ParseError with the 1-based position of the offending node.
Problem load_problem(const std::string& text, const std::string& path, const LoadOptions& opts = {});
Problem load_problem_file(const std::string& path, const LoadOptions& opts = {});

/// An element of A(1) written as a sum of products of basis names and
/// variables, e.g. "x^2 - 3/2 x*y" or "2 012 + 021".
ElementRef parse_element(const MonoidData& a, const PolynomialMonoid* poly, const std::string& text);

/// Builds a module from its spec over `over`; `poly` resolves variable names.
ModuleData build_module(const Problem& p, const ModuleSpec& spec, const MonoidPtr& over,
                        const PolynomialMonoid* poly);

}  // namespace koszulcat::cli
