#pragma once

#include <limits>
#include <vector>

#include "koszulcat/exec.hpp"
#include "koszulcat/linalg.hpp"
#include "koszulcat/representation.hpp"

namespace koszulcat {

/// The ambient space ⊕_{y,z} hom(y◇z, x) ⊗ F(y) ⊗ G(z) of the Day convolution
/// coend at each object x, truncated to total degree <= cap.
///
/// Basis order: block (y, z) with y slowest, then the hom basis element h,
/// then b in F(y), then c in G(z).
class DayAmbient {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Coord {
    std::size_t y, z, h, b, c;
  };

  DayAmbient(const Representation& f, const Representation& g, int cap);

  const Representation& left() const { return *f_; }
  const Representation& right() const { return *g_; }
  const CategoryPresentation& cat() const { return *f_->cat; }
  int cap() const { return cap_; }

  std::size_t dim(std::size_t x) const { return coords_[x].size(); }
  const Coord& coord(std::size_t x, std::size_t i) const { return coords_[x][i]; }
  int degree(std::size_t x, std::size_t i) const;
  /// Ambient index of [h ⊗ b ⊗ c] at x, or npos if it was truncated away.
  std::size_t index(std::size_t x, std::size_t y, std::size_t z, std::size_t h, std::size_t b,
                    std::size_t c) const;

  /// Adds coef * [phi ⊗ u ⊗ v] as column `col` of `out`, where phi is a column in
  /// hom(y◇z, x), u a column in F(y) and v a column in G(z).
  void add_tensor(MatrixBuilder& out, std::size_t col, std::size_t x, std::size_t y, std::size_t z,
                  const Matrix& phi, const Matrix& u, const Matrix& v, const mpq_class& coef = 1) const;

  /// Columns spanning the naturality relations of the coend at x.
  Matrix naturality_relations(std::size_t x) const;

 private:
  const Representation* f_;
  const Representation* g_;
  int cap_;
  std::vector<std::vector<Coord>> coords_;
  std::vector<std::vector<std::size_t>> block_offset_;  // [x][(y,z)] into table_[x]
  std::vector<std::vector<std::size_t>> table_;         // dense (h,b,c) lookup per block
};

/// F ⊗ G in the functor category: the coend quotient of the ambient space by
/// naturality relations, with induced functorial actions.
struct DayTensor {
  Representation left, right;
  std::vector<QuotientPresentation> quotient;  // per object, of the ambient space
  Representation result;
  DayAmbient ambient() const { return DayAmbient(left, right, result.cap); }
};

/// Cap of a tensor product when none is requested: the smallest cap present.
int combined_cap(int a, int b);

/// Day convolution (F ⊗ G)(x) = ∫^{y,z} hom(y◇z, x) ⊗ F(y) ⊗ G(z). On the
/// trivial backend this is the Kronecker product of the spaces.
/// `extra_relations[x]`, when given, adds columns of the ambient space at x to
/// the relations; they must span a subfunctor together with naturality.
DayTensor day_convolution(const Representation& f, const Representation& g,
                          int cap = kInheritCap, const Exec& exec = {},
                          const std::vector<Matrix>& extra_relations = {});

/// Maps out of a Day tensor given by a natural family
/// beta[(y, z)] : F(y) ⊗ G(z) -> T(y◇z); returns [h ⊗ b ⊗ c] -> T(h) beta(b ⊗ c).
ObjectMaps day_induced_map(const DayTensor& d, const Representation& target,
                           const std::vector<Matrix>& beta);

/// Day(alpha, beta) : F ⊗ G -> F2 ⊗ G2 for natural maps alpha: F -> F2, beta: G -> G2.
ObjectMaps day_functorial_map(const DayTensor& from, const DayTensor& to, const ObjectMaps& alpha,
                              const ObjectMaps& beta);

/// The symmetry F ⊗ G -> G ⊗ F, [h ⊗ b ⊗ c] -> [h∘s ⊗ c ⊗ b].
ObjectMaps day_symmetry(const DayTensor& fg, const DayTensor& gf);

/// The unit isomorphisms I ⊗ F -> F and F ⊗ I -> F.
ObjectMaps day_left_unitor(const DayTensor& i_f);
ObjectMaps day_right_unitor(const DayTensor& f_i);

/// Verifies that each map of the family is invertible and natural.
Certificate certify_natural_iso(const Representation& from, const Representation& to,
                                const ObjectMaps& eta, const std::string& what);

}  // namespace koszulcat
