#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszulcat/monoid.hpp"

namespace koszulcat {

using MultiIndex = std::vector<int>;

/// Multi-indices in n variables of total degree <= cap, ordered by degree and,
/// within a degree, lexicographically decreasing (t1^2 before t1 t2 before t2^2).
std::vector<MultiIndex> graded_monomials(std::size_t n, int cap);
std::string monomial_name(const MultiIndex& e, const std::vector<std::string>& variables);
/// Number of multi-indices of degree d in n variables, C(n+d-1, d).
std::size_t monomial_count(std::size_t n, int d);

/// A[t1..tn] truncated at total degree cap. Basis vectors of A_n(x) are indexed
/// monomial * dim A(x) + a, with degree |monomial| + deg a.
struct PolynomialMonoid {
  MonoidPtr base;
  std::vector<std::string> variables;
  int cap = kUncapped;
  std::vector<MultiIndex> monomials;
  MonoidPtr monoid;

  std::size_t num_variables() const { return variables.size(); }
  /// Position of the monomial, or npos if it lies above the cap.
  std::size_t monomial_index(const MultiIndex& e) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend PolynomialMonoid polynomial_monoid(const MonoidPtr&, std::size_t, int, std::vector<std::string>);
  std::map<MultiIndex, std::size_t> lookup_;
};

/// A_n with product Σ_{i+j=k} a_i × b_j, truncated at cap. The base must be
/// untruncated. n = 0 gives A back. Default variable names are t (n = 1) or
/// t1..tn.
PolynomialMonoid polynomial_monoid(const MonoidPtr& a, std::size_t n, int cap,
                                   std::vector<std::string> variables = {});

/// ε t_i in A_n(1), 0-based. Throws RangeError.
ElementRef variable_element(const PolynomialMonoid& g, std::size_t i);

/// The copy a ↦ a t^0 of A in degree 0.
MonoidMorphism base_inclusion(const PolynomialMonoid& g);

/// Sends each variable of `source` to an element of target(1) and fixes the
/// common base: a t^m ↦ a × img^m. Both polynomial monoids must share a base.
MonoidMorphism substitution_morphism(const PolynomialMonoid& source, const PolynomialMonoid& target,
                                     const std::vector<ElementRef>& images);

/// C[u] ⊗ D[v] ≅ E[u, v] given a natural family witness[(y, z)] : C(y)⊗D(z) -> E(y◇z)
/// whose induced map C ⊗ D -> E is an isomorphism of monoids.
struct MergedPolynomial {
  PolynomialMonoid merged;
  TensorMonoid tensor;  // C[u] ⊗ D[v]
  ObjectMaps phi;       // the identification tensor -> merged, per object
  Certificate certificate;
};
MergedPolynomial merge_variables(const PolynomialMonoid& c, const PolynomialMonoid& d, const MonoidPtr& e,
                                 const std::vector<Matrix>& witness, const Exec& exec = {});

}  // namespace koszulcat
