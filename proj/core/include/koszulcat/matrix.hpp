#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "koszulcat/field.hpp"

namespace koszulcat {

struct Entry {
  std::uint32_t col;
  mpq_class value;
};

using SparseRow = std::vector<Entry>;

/// Sparse exact matrix over a Field, stored as sorted rows with no explicit zeros.
///
/// All linear maps in the library (functor actions, pairings, differentials,
/// homotopies) are Matrices acting on column vectors.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }
  static Matrix identity(const Field& f, std::size_t n);
  /// Dense integer literal, row by row (mainly for tests and small data).
  static Matrix from_rows(const Field& f, const std::vector<std::vector<long>>& rows);
  static Matrix from_rational_rows(const Field& f, const std::vector<std::vector<mpq_class>>& rows);
  /// Column vector with the given coordinates.
  static Matrix column_vector(const Field& f, const std::vector<mpq_class>& coords);
  /// Standard basis column e_i of length n.
  static Matrix unit_vector(const Field& f, std::size_t n, std::size_t i);

  std::size_t rows() const noexcept { return row_data_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  std::size_t nnz() const noexcept;
  double density() const noexcept;

  const SparseRow& row(std::size_t i) const { return row_data_[i]; }
  /// Entry (i, j); zero if absent.
  mpq_class get(std::size_t i, std::size_t j) const;
  Scalar at(std::size_t i, std::size_t j) const { return Scalar(field_, get(i, j)); }
  /// Overwrites entry (i, j); the value is reduced into the field.
  void set(std::size_t i, std::size_t j, const mpq_class& v);
  /// Replaces row i; entries must be sorted by column and nonzero.
  void set_row(std::size_t i, SparseRow r);

  bool is_zero() const noexcept;
  Matrix transpose() const;
  Matrix scaled(const mpq_class& c) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const { return scaled(-1); }

  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix column(std::size_t j) const;
  /// Dense copy of column j.
  std::vector<mpq_class> column_values(std::size_t j) const;

  static Matrix hstack(const std::vector<Matrix>& blocks);
  static Matrix vstack(const std::vector<Matrix>& blocks);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Human-readable dense rendering, one row per line.
  std::string to_string() const;

 private:
  friend class MatrixBuilder;
  std::vector<SparseRow> row_data_;
  std::size_t cols_ = 0;
  Field field_;
};

/// Nonzero (index, value) pairs of a single-column matrix.
std::vector<std::pair<std::size_t, mpq_class>> vector_entries(const Matrix& column);

/// Accumulates (row, col, value) contributions; duplicates are summed.
class MatrixBuilder {
 public:
  MatrixBuilder(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols) {}

  void add(std::size_t i, std::size_t j, const mpq_class& v);
  /// Adds c * m with its top-left corner at (row0, col0).
  void add_block(std::size_t row0, std::size_t col0, const Matrix& m, const mpq_class& c = 1);
  Matrix build();

 private:
  struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    mpq_class value;
  };
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Triplet> triplets_;
};

}  // namespace koszulcat
