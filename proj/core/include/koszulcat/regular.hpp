#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulcat/monoid.hpp"

namespace koszulcat {

/// A nonzero m in M(x) with elt × m = 0.
struct RegularityWitness {
  std::size_t object = 0;
  std::optional<int> degree;  // set for homogeneous elements on graded carriers
  Matrix vector;              // coordinates in M(x)
  std::string description;
};

/// Result of checking one element against one module.
struct RegularityStage {
  std::string element;
  /// Degrees of M(x) on which injectivity was checked: d <= window, or all when unbounded.
  std::optional<int> window;
  std::size_t cells = 0;
  bool injective = true;
  std::optional<RegularityWitness> witness;
};

struct RegularityCertificate {
  int cap = kUncapped;
  std::vector<RegularityStage> stages;
  /// Whether the final quotient A/A⟨α⟩ is nonzero (sequences only).
  std::optional<bool> quotient_nonzero;

  bool regular() const;
  /// Human-readable summary of the first failure, empty if regular.
  std::string failure() const;
  Certificate to_certificate(const std::string& statement) const;
};

/// Checks that L_elt is injective on M(x) for every object x, per degree d <=
/// cap - deg(elt) for homogeneous elements on graded carriers. Nonhomogeneous
/// elements are checked on the span of basis vectors of degree <= cap - top
/// degree. Throws NotCentral if elt is not in CA(1), WindowError if cap exceeds
/// the carrier's cap.
RegularityCertificate is_regular(const MonoidData& a, const ElementRef& elt, const ModuleData& m,
                                 int cap = kInheritCap, std::string name = {});

/// Checks each α_i against A/A⟨α_1..α_{i-1}⟩ and that the last quotient is
/// nonzero. On graded carriers the generators must be homogeneous.
RegularityCertificate is_regular_sequence(const MonoidData& a, const std::vector<ElementRef>& gens,
                                          int cap = kInheritCap, std::vector<std::string> names = {});

}  // namespace koszulcat
