#pragma once

#include <optional>
#include <vector>

#include "koszulcat/matrix.hpp"

namespace koszulcat {

struct ReduceOptions {
  /// Matrices at least this dense are eliminated with the dense kernels
  /// (fraction-free Bareiss over Q, plain Gauss over F_p); sparser ones use
  /// sparse Gauss-Jordan. Both paths produce the identical reduced echelon form.
  double dense_threshold = 0.25;
};

/// Reduced row echelon form: `rref` has one row per pivot, pivots ascending.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(const Matrix& m, const ReduceOptions& opts = {});
std::size_t rank(const Matrix& m, const ReduceOptions& opts = {});

/// A subspace of F^ambient given by linearly independent basis columns.
struct SubspacePresentation {
  std::size_t ambient = 0;
  Matrix basis;  // ambient x dim
  std::size_t dim() const noexcept { return basis.cols(); }
};

/// Canonical kernel basis: one vector per non-pivot column, in increasing
/// column order, with a 1 in that column.
SubspacePresentation kernel(const Matrix& m, const ReduceOptions& opts = {});
/// Column space, spanned by the columns of `m` at its pivot positions.
SubspacePresentation image(const Matrix& m, const ReduceOptions& opts = {});
/// Subspace spanned by arbitrary (possibly dependent) columns.
SubspacePresentation span_of(const Matrix& columns, const ReduceOptions& opts = {});
bool contains(const SubspacePresentation& space, const Matrix& vectors);
bool same_subspace(const SubspacePresentation& a, const SubspacePresentation& b);

/// F^ambient / sub with a canonical complement: the standard coordinates that
/// are not pivots of sub's reduced basis.
struct QuotientPresentation {
  std::size_t dim = 0;
  Matrix projection;  // dim x ambient, surjective, kernel exactly sub
  Matrix section;     // ambient x dim, coordinate inclusion of the complement
  std::vector<std::size_t> complement;  // ambient coordinates kept by the quotient
};

QuotientPresentation quotient(std::size_t ambient_dim, const SubspacePresentation& sub,
                              const ReduceOptions& opts = {});

/// Right inverse s of a surjective m (m * s = identity). Throws NoSection.
Matrix section_of_surjection(const Matrix& m, const ReduceOptions& opts = {});

/// Some x with a * x = b, column by column; nullopt if any column is unsolvable.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const ReduceOptions& opts = {});

/// Kronecker product; row and column indices are row-major with the left factor slowest.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws IsoFailure if singular.
Matrix inverse(const Matrix& m, const ReduceOptions& opts = {});

}  // namespace koszulcat
