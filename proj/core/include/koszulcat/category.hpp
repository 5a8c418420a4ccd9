#pragma once

#include <memory>
#include <string>
#include <vector>

#include "koszulcat/matrix.hpp"
#include "koszulcat/validation.hpp"

namespace koszulcat {

enum class Backend { Trivial, FiniteStrict };

/// A finite, strict, R-linear symmetric monoidal category.
///
/// Objects are indices 0..N-1. Morphisms are column vectors in the chosen
/// basis of hom(x, y). The monoidal product on objects is a total table and
/// the associator and unitors are identities.
///
/// Flat tables are indexed as follows (N = number of objects):
///   pair (x, y)               -> x * N + y
///   triple (x, y, z)          -> (x * N + y) * N + z
///   quadruple (x, y, x2, y2)  -> ((x * N + y) * N + x2) * N + y2
struct CategoryPresentation {
  Backend backend = Backend::Trivial;
  Field field = Field::rationals();
  std::vector<std::string> objects;
  std::size_t unit = 0;
  /// diamond_obj[(x, y)] = x ◇ y.
  std::vector<std::size_t> diamond_obj;
  /// hom_basis[(x, y)] names the basis of hom(x, y).
  std::vector<std::vector<std::string>> hom_basis;
  /// composition[(x, y, z)] : hom(y,z) ⊗ hom(x,y) -> hom(x,z), columns indexed
  /// g * dim hom(x,y) + f for the composite g∘f.
  std::vector<Matrix> composition;
  /// identity[x] : column in hom(x, x).
  std::vector<Matrix> identity;
  /// diamond_mor[(x, y, x2, y2)] : hom(x,x2) ⊗ hom(y,y2) -> hom(x◇y, x2◇y2).
  std::vector<Matrix> diamond_mor;
  /// symmetry[(x, y)] : column in hom(x◇y, y◇x).
  std::vector<Matrix> symmetry;

  /// The one-object category with hom(1,1) = R·id.
  static std::shared_ptr<const CategoryPresentation> trivial(const Field& f);

  std::size_t num_objects() const noexcept { return objects.size(); }
  std::size_t pair(std::size_t x, std::size_t y) const noexcept { return x * objects.size() + y; }
  std::size_t diamond(std::size_t x, std::size_t y) const { return diamond_obj[pair(x, y)]; }
  std::size_t hom_dim(std::size_t x, std::size_t y) const { return hom_basis[pair(x, y)].size(); }
  const Matrix& composition_matrix(std::size_t x, std::size_t y, std::size_t z) const;
  const Matrix& diamond_matrix(std::size_t x, std::size_t y, std::size_t x2, std::size_t y2) const;

  /// Basis morphism k of hom(x, y) as a column.
  Matrix basis_morphism(std::size_t x, std::size_t y, std::size_t k) const;
  /// g∘f for f in hom(x,y), g in hom(y,z).
  Matrix compose(std::size_t x, std::size_t y, std::size_t z, const Matrix& g, const Matrix& f) const;
  /// f◇g for f in hom(x,x2), g in hom(y,y2).
  Matrix tensor(std::size_t x, std::size_t y, std::size_t x2, std::size_t y2, const Matrix& f,
                const Matrix& g) const;

  /// Index of the named object; throws DimensionMismatch if absent.
  std::size_t object_index(const std::string& name) const;
  /// Throws DimensionMismatch if any table has the wrong size or shape.
  void check_shapes() const;
};

using CategoryPtr = std::shared_ptr<const CategoryPresentation>;

/// Checks every axiom of a strict symmetric monoidal linear category on every
/// combination of basis elements: associativity and unit laws of ◇ on objects,
/// associativity and unitality of composition, bifunctoriality, associativity
/// and unitality of ◇ on morphisms, and naturality, involutivity and the
/// hexagon identity for the symmetry.
ValidationReport validate_presentation(const CategoryPresentation& c);

}  // namespace koszulcat
