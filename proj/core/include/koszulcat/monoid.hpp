#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszulcat/day.hpp"
#include "koszulcat/representation.hpp"

namespace koszulcat {

/// An element of F(x): an object together with a coordinate column.
struct ElementRef {
  std::size_t object = 0;
  Matrix coords;
};

/// A monoid in the functor category, given pointwise by bilinear pairings.
struct MonoidData {
  std::string name;
  Representation carrier;
  /// pairing[(x, y)] : A(x◇y) x (A(x)·A(y)), columns on the Kronecker basis.
  std::vector<Matrix> pairing;
  /// The unit ε as a column in A(1).
  Matrix unit;
  /// Set when products of degree above the carrier cap were discarded.
  bool truncated = false;

  const CategoryPresentation& cat() const { return *carrier.cat; }
  const Field& field() const { return carrier.field(); }
  const Matrix& pairing_at(std::size_t x, std::size_t y) const { return pairing[cat().pair(x, y)]; }
  /// a × b for a in A(x), b in A(y), both columns.
  Matrix multiply(std::size_t x, const Matrix& a, std::size_t y, const Matrix& b) const;
  ElementRef multiply(const ElementRef& a, const ElementRef& b) const;
  ElementRef unit_element() const { return {cat().unit, unit}; }
  ElementRef basis_element(std::size_t x, std::size_t i) const {
    return {x, Matrix::unit_vector(field(), carrier.dims[x], i)};
  }
};

using MonoidPtr = std::shared_ptr<const MonoidData>;

enum class Side { Left, Right, Bimodule };

/// A module over one monoid on the left and/or another on the right.
struct ModuleData {
  std::string name;
  Representation carrier;
  MonoidPtr left, right;
  /// left_action[(x, y)] : M(x◇y) x (A(x)·M(y)).
  std::vector<Matrix> left_action;
  /// right_action[(x, y)] : M(x◇y) x (M(x)·B(y)).
  std::vector<Matrix> right_action;

  Side side() const;
  const CategoryPresentation& cat() const { return *carrier.cat; }
  const Field& field() const { return carrier.field(); }
};

/// A family of subspaces, one per object.
using Subfamily = std::vector<SubspacePresentation>;

/// A morphism of monoids (or of modules), one matrix per object.
struct MonoidMorphism {
  MonoidPtr source, target;
  ObjectMaps maps;
};

/// The monoid I = X(1, -) with product φ ⊗ ψ -> φ◇ψ and unit id_1.
MonoidData identity_monoid(const CategoryPtr& cat);

/// A monoid on a one-object category from a multiplication table: `product`
/// is dim x dim², column i*dim+j holding e_i e_j. Degrees default to 0.
MonoidData algebra_monoid(const CategoryPtr& cat, std::string name, std::vector<std::string> basis,
                          Matrix product, Matrix unit, std::vector<int> degrees = {}, int cap = kUncapped);

/// Associativity and unit laws on all basis triples (pruned above the cap,
/// where both sides vanish), degree additivity and naturality of the pairing.
ValidationReport validate_monoid(const MonoidData& a);
/// Associativity, unit and naturality of each action, and compatibility of
/// the two actions for bimodules.
ValidationReport validate_module(const ModuleData& m);
/// Multiplicativity, unit preservation and naturality.
ValidationReport validate_morphism(const MonoidMorphism& f);
/// Whether the monoid is commutative up to the symmetry.
bool is_commutative(const MonoidData& a);

/// A as a bimodule over itself.
ModuleData regular_module(const MonoidPtr& a);
ModuleData forget_left(const ModuleData& m);
ModuleData forget_right(const ModuleData& m);
/// M^k with block actions; block j has its degrees shifted by shifts[j].
ModuleData direct_sum_module(const ModuleData& m, std::size_t k, const std::vector<int>& shifts = {});
/// Naturality of f and compatibility with every action present on both sides.
ValidationReport validate_module_map(const ModuleData& from, const ModuleData& to, const ObjectMaps& f);

/// Restricts the left (right) action along a monoid morphism f: D -> A.
ModuleData restrict_left(const ModuleData& m, const MonoidMorphism& f);
ModuleData restrict_right(const ModuleData& m, const MonoidMorphism& f);

/// Homogeneous degree of an element, nullopt if it mixes degrees. Zero has degree 0.
std::optional<int> homogeneous_degree(const Representation& r, const ElementRef& e);
/// Largest degree occurring in the element (0 for zero).
int top_degree(const Representation& r, const ElementRef& e);

/// CA(x) = {b in A(x) : a × b = A(s)(b × a) for every basis a of every A(y)}.
SubspacePresentation commutant(const MonoidData& a, std::size_t x);
/// Direct membership test for the commutant at the element's own object.
bool is_central(const MonoidData& a, const ElementRef& e);

/// L_elt,x : M(x) -> M(x), m -> elt × m, for elt in A(1). Throws WrongObject.
ObjectMaps mult_operator(const ElementRef& elt, const ModuleData& m);
/// m -> m × elt for elt in B(1).
ObjectMaps right_mult_operator(const ModuleData& m, const ElementRef& elt);

/// A⟨α_1..α_n⟩: at each x, { Σ a_i × α_i : a_i in A(x) }.
Subfamily generated_submodule(const MonoidData& a, const std::vector<ElementRef>& gens);
/// I_α M: at each x, the span of α_i × M(x).
Subfamily ideal_times_module(const std::vector<ElementRef>& gens, const ModuleData& m);
/// Throws StabilityError naming the first morphism or basis element that moves
/// the family outside itself.
void check_stable(const ModuleData& m, const Subfamily& sub);

struct QuotientModule {
  ModuleData module;
  ObjectMaps projection;  // M(x) -> (M/N)(x)
  ObjectMaps section;     // coordinate splitting of the projection
};

/// Pointwise quotient M/N with induced actions. Throws StabilityError.
QuotientModule quotient_module(const ModuleData& m, const Subfamily& sub);

/// The monoid A ⊗ B on the Day convolution, with product through the middle
/// symmetry id ◇ s ◇ id.
struct TensorMonoid {
  DayTensor day;
  MonoidData monoid;
};
TensorMonoid tensor_monoid(const MonoidData& a, const MonoidData& b, int cap = kInheritCap,
                           const Exec& exec = {});

}  // namespace koszulcat
