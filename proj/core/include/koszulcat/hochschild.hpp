#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulcat/koszul.hpp"
#include "koszulcat/polynomial.hpp"

namespace koszulcat {

enum class IdempotenceMode { None, Direct, QuotientOfI };
std::string to_string(IdempotenceMode mode);

/// Evidence that μ_A : A ⊗ A -> A is an isomorphism. Direct mode inverts μ_A
/// on the Day convolution; the quotient-of-I criterion asks for the unit
/// e_A : I -> A to be onto at every object.
struct TensorIdempotentCertificate {
  MonoidPtr monoid;
  IdempotenceMode mode = IdempotenceMode::None;
  bool commutative = false;
  bool direct = false;
  bool quotient_of_i = false;
  ObjectMaps multiplication;  // μ_A per object, A ⊗ A -> A
  ObjectMaps unit_map;        // e_A per object, I -> A
  std::string failure;
  Certificate certificate;

  bool pass() const { return commutative && mode != IdempotenceMode::None; }
};

/// Throws PreconditionError if A is not a valid, untruncated monoid.
TensorIdempotentCertificate certify_tensor_idempotent(const MonoidPtr& a, const Exec& exec = {});

/// Per (object, degree) bookkeeping of π : C -> A_n and J = C⟨u - v⟩.
struct KernelCell {
  std::size_t object = 0;
  int degree = 0;
  std::size_t dim_c = 0, dim_an = 0, dim_kernel = 0, dim_j = 0;
};

/// C = A_{2n} in u1..un, v1..vn, identified with A_n ⊗ A_n, together with
/// π(u_i) = π(v_i) = t_i and the kernel ideal J.
struct EnvelopingData {
  MonoidPtr base;
  std::size_t n = 0;
  int cap = 0;
  TensorIdempotentCertificate idempotent;
  PolynomialMonoid an;  // A_n in t
  PolynomialMonoid c;   // A_2n in u, v
  Certificate merge_certificate;
  MonoidMorphism pi;
  std::vector<ElementRef> alpha;  // u_i - v_i
  std::vector<std::string> alpha_names;
  Subfamily j;
  std::vector<KernelCell> kernel_table;
  Certificate certificate;
};

/// Throws PreconditionError unless `cert` passes for `a`; RangeError for n = 0
/// or cap < 1.
EnvelopingData build_enveloping(const MonoidPtr& a, std::size_t n, int cap, const TensorIdempotentCertificate& cert,
                                const Exec& exec = {});

/// K_C(u - v) augmented by π onto A_n, with its regularity, exactness and
/// splitting certificates.
struct BimoduleResolution {
  KoszulComplex koszul;
  RegularityCertificate regularity;
  Certificate change_of_variables;
  Certificate exactness;
  SplitCertificate split;
  Certificate certificate;
};

/// Throws TheoremViolation if u - v fails to be regular in the window.
BimoduleResolution koszul_bimodule_resolution(const EnvelopingData& e, int cap = kInheritCap,
                                              const Exec& exec = {});

/// HH^p(A_n, M) from Hom_C(K_p(C), M) ≅ M^{C(n,p)} with Φ = (-)∘d. Internal
/// degrees are those of M; Φ raises them by one.
struct HochschildCohomology {
  int p = 0;
  /// Φ_q : cochains of degree q -> q + 1, q = 0..n-1.
  std::vector<ObjectMaps> phi;
  bool regular_coefficients = false;
  GradedReport report;
};

/// `m` must be a bimodule over e.an on both sides. Throws RangeError for p < 0.
HochschildCohomology hochschild_cohomology(const EnvelopingData& e, const KoszulComplex& resolution,
                                           const ModuleData& m, int p, int cap = kInheritCap,
                                           const Exec& exec = {});
HochschildCohomology hochschild_cohomology(const EnvelopingData& e, const ModuleData& m, int p,
                                           int cap = kInheritCap, const Exec& exec = {});

}  // namespace koszulcat
