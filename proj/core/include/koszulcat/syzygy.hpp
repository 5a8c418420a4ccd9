#pragma once

#include <string>
#include <vector>

#include "koszulcat/hochschild.hpp"

namespace koszulcat {

/// M ⊗_A N as the cokernel of δ = σ_r ⊗ N - M ⊗ σ_l : M ⊗ A ⊗ N -> M ⊗ N.
struct CoequalizerPresentation {
  ModuleData left, right;  // M (right A-module), N (left A-module)
  DayTensor tensor;        // M ⊗ N
  /// δ relations as columns of the Day ambient space, per object.
  std::vector<Matrix> relations;
  DayTensor coequalizer;   // M ⊗_A N on the same ambient space
  ObjectMaps projection;   // M ⊗ N -> M ⊗_A N
  /// Carries the outer left action of M and right action of N when present.
  ModuleData module;
  Certificate certificate;
};

/// Throws PreconditionError if M's right monoid is not N's left monoid.
CoequalizerPresentation tensor_over_monoid(const ModuleData& m, const ModuleData& n, int cap = kInheritCap,
                                           const Exec& exec = {});

/// For a (D, A)-bimodule M and an (A, E)-bimodule N: forgetting D on M ⊗_A N
/// agrees with (M as right A-module) ⊗_A N: equal dims, invertible canonical
/// map, and that map respects the right E-action.
Certificate check_restriction_compatibility(const ModuleData& m, const ModuleData& n, int cap = kInheritCap,
                                            const Exec& exec = {});

/// A ⊗ V with A acting on the left factor: the module induced from V in F.
struct InducedModule {
  DayTensor day;
  ModuleData module;
};
InducedModule induced_module(const MonoidPtr& a, const Representation& v, int cap = kInheritCap,
                             const Exec& exec = {});

/// K_i^n(A_n) ⊗_I M -> M with d induced from u_i - v_i: u acting on A_n,
/// v acting on M.
struct SyzygyResolution {
  ChainComplex complex;
  InducedModule induced;  // A_n ⊗ M
  /// One "free-over-I" tag per term, naming the induced presentation.
  std::vector<std::string> tags;
  Certificate identification;  // C ⊗_{A_n} M ≅ A_n ⊗ M
  Certificate exactness;
  SplitCertificate split;
  Certificate certificate;
  std::size_t length() const { return complex.length(); }
};

/// `m` must be a left module over e.an. The certified window is cap - 1;
/// throws WindowError when that leaves no degree.
SyzygyResolution build_syzygy_resolution(const EnvelopingData& e, const ModuleData& m, int cap = kInheritCap,
                                         const Exec& exec = {});

}  // namespace koszulcat
