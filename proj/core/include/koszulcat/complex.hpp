#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulcat/exec.hpp"
#include "koszulcat/monoid.hpp"

namespace koszulcat {

/// One dimension entry: homological degree, object, internal degree (absent
/// for ungraded cells).
struct GradedEntry {
  int p = 0;
  std::size_t object = 0;
  std::optional<int> degree;
  std::size_t dim = 0;
};

/// Dimension table plus the certificates that justify it.
struct GradedReport {
  std::string title;
  /// Internal degrees <= window are certified; absent means no truncation.
  std::optional<int> window;
  std::vector<GradedEntry> entries;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;

  bool pass() const;
  /// Entry lookup, 0 when absent.
  std::size_t dim(int p, std::size_t object, std::optional<int> degree) const;
  /// Dimensions of (p, object) listed by internal degree.
  std::vector<std::size_t> series(int p, std::size_t object) const;
  void append(const GradedReport& other);
};

/// Where a resolution is supposed to land: term 0 maps onto `target`.
struct Augmentation {
  ModuleData target;
  ObjectMaps map;
};

/// Terms 0..n with differentials d_p : term p -> term p-1.
///
/// A graded complex has degree-preserving differentials, so it splits into
/// cells (object, internal degree) that are computed independently.
struct ChainComplex {
  std::vector<ModuleData> terms;
  /// d[p] for p = 1..n; d[0] is left empty.
  std::vector<ObjectMaps> d;
  bool graded = true;
  std::optional<int> window;
  std::optional<Augmentation> augmentation;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  std::size_t num_objects() const { return terms.front().carrier.num_objects(); }
  const Field& field() const { return terms.front().field(); }
  /// Internal degrees with at least one basis vector in some term, clipped to the window.
  std::vector<int> cell_degrees(std::size_t x) const;
  /// Basis indices of term p (p = -1: the augmentation target) in a cell.
  std::vector<std::size_t> cell_basis(int p, std::size_t x, std::optional<int> degree) const;
  /// The differential out of term p restricted to a cell (p = 0: the augmentation).
  Matrix cell_differential(int p, std::size_t x, std::optional<int> degree) const;
};

/// d_{p-1} d_p = 0 at every object and, when augmented, ε d_1 = 0.
Certificate certify_d_squared(const ChainComplex& c);
/// Every differential (and the augmentation) is a module map.
Certificate certify_module_maps(const ChainComplex& c);

/// dim ker d_p - dim im d_{p+1} per cell in the window. Throws WindowError if
/// `window` exceeds the certified one and RangeError for p outside 0..n.
GradedReport homology(const ChainComplex& c, int p, std::optional<int> window = std::nullopt,
                      const Exec& exec = {});
/// All homology groups of the complex.
GradedReport homology(const ChainComplex& c, const Exec& exec = {});

/// Exactness of the augmented complex in the window: H_p = 0 for p >= 1, ε
/// surjective, and ker ε = im d_1.
Certificate certify_exact(const ChainComplex& c, const Exec& exec = {});

/// Contracting homotopy of an exact augmented complex, one cell at a time:
/// h[0] : target -> term 0 and h[p + 1] : term p -> term p + 1.
struct HomotopyCell {
  std::size_t object = 0;
  std::optional<int> degree;
  std::vector<Matrix> h;
};
struct SplitCertificate {
  std::vector<HomotopyCell> cells;
  Certificate certificate;
  bool pass() const { return certificate.pass(); }
};
/// Builds h from sections of the differentials and checks ε h = id and
/// d h + h d = id exactly on every cell.
SplitCertificate contracting_homotopy(const ChainComplex& c, const Exec& exec = {});

}  // namespace koszulcat
