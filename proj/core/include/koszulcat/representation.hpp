#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszulcat/category.hpp"

namespace koszulcat {

/// Sentinel cap meaning "no truncation".
inline constexpr int kUncapped = -1;
/// Sentinel asking a construction to derive its cap from its inputs.
inline constexpr int kInheritCap = -2;

/// An R-linear functor F: X -> Vect given by one space per object and one
/// matrix per basis morphism.
///
/// Every basis vector carries an internal degree. Ungraded data has all
/// degrees 0 and no cap. Graded carriers may be truncated: basis vectors only
/// exist in degrees <= cap, and anything of higher degree has been discarded.
struct Representation {
  CategoryPtr cat;
  std::vector<std::size_t> dims;
  /// degrees[x][i]: internal degree of basis vector i of F(x).
  std::vector<std::vector<int>> degrees;
  /// actions[(x, y)][k] : F(y) x F(x) matrix of basis morphism k of hom(x, y).
  std::vector<std::vector<Matrix>> actions;
  /// Optional basis labels, used in reports and witnesses.
  std::vector<std::vector<std::string>> names;
  int cap = kUncapped;

  const Field& field() const { return cat->field; }
  std::size_t num_objects() const { return dims.size(); }
  std::size_t dim(std::size_t x) const { return dims[x]; }
  std::size_t total_dim() const;
  /// Matrix of F(phi) for an arbitrary morphism phi in hom(x, y), given as a column.
  Matrix act(std::size_t x, std::size_t y, const Matrix& phi) const;
  const Matrix& basis_action(std::size_t x, std::size_t y, std::size_t k) const {
    return actions[cat->pair(x, y)][k];
  }
  /// Indices of basis vectors of F(x) in internal degree d.
  std::vector<std::size_t> basis_in_degree(std::size_t x, int d) const;
  /// Largest degree label in use (0 for empty or ungraded carriers).
  int max_degree() const;
  bool is_graded() const { return cap != kUncapped || max_degree() > 0; }
  std::string basis_name(std::size_t x, std::size_t i) const;
  /// Throws DimensionMismatch if the table sizes are inconsistent.
  void check_shapes() const;
};

/// The identity functor I = X(1, -) of the Day convolution structure.
Representation identity_functor(const CategoryPtr& cat);

/// The zero functor.
Representation zero_representation(const CategoryPtr& cat);

/// F^k with block-diagonal actions; degree of block j shifted by shifts[j].
Representation direct_power(const Representation& f, std::size_t k, const std::vector<int>& shifts = {});

/// Restriction of F to the given basis subsets per object. Only valid when the
/// subsets span subfunctors with zero action leaking out; callers guarantee that.
Representation select_basis(const Representation& f, const std::vector<std::vector<std::size_t>>& keep);

/// Certifies F(id) = id, F(g∘f) = F(g)F(f) on all basis pairs, and that every
/// action preserves internal degree.
ValidationReport validate_representation(const Representation& f);

/// True if every nonzero entry maps a column of degree d to a row of degree d + shift.
bool is_homogeneous(const Matrix& m, const std::vector<int>& col_degrees,
                    const std::vector<int>& row_degrees, int shift = 0);

/// Renders a column of F(x) in basis names, e.g. "2·x + y" or "0".
std::string format_element(const Representation& f, std::size_t x, const Matrix& coords);

/// Family of matrices indexed by object: a natural transformation or an
/// object-wise operator.
using ObjectMaps = std::vector<Matrix>;

/// Checks G(phi) * eta_x == eta_y * F(phi) for every basis morphism phi: x -> y.
ValidationReport check_natural(const Representation& from, const Representation& to,
                               const ObjectMaps& eta, const std::string& what);

}  // namespace koszulcat
