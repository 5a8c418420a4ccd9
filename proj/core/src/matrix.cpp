#include "koszulcat/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "koszulcat/errors.hpp"

namespace koszulcat {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw DimensionMismatch("matrices over different fields: " + a.field().to_string() + " vs " +
                            b.field().to_string());
  }
}

// Sorts by column and merges duplicate columns, dropping zeros.
SparseRow merge_row(std::vector<Entry>& acc, const Field& f) {
  std::sort(acc.begin(), acc.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(acc.size());
  for (std::size_t k = 0; k < acc.size();) {
    std::size_t j = k;
    mpq_class sum = acc[k].value;
    while (++j < acc.size() && acc[j].col == acc[k].col) sum = f.add(sum, acc[j].value);
    if (sgn(sum) != 0) out.push_back({acc[k].col, std::move(sum)});
    k = j;
  }
  return out;
}

}  // namespace

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : row_data_(rows), cols_(cols), field_(f) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.row_data_[i].push_back({static_cast<std::uint32_t>(i), 1});
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<mpq_class>> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return from_rational_rows(f, q);
}

Matrix Matrix::from_rational_rows(const Field& f, const std::vector<std::vector<mpq_class>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) {
      mpq_class v = f.from_rational(rows[i][j]);
      if (sgn(v) != 0) m.row_data_[i].push_back({static_cast<std::uint32_t>(j), std::move(v)});
    }
  }
  return m;
}

Matrix Matrix::column_vector(const Field& f, const std::vector<mpq_class>& coords) {
  Matrix m(f, coords.size(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    mpq_class v = f.from_rational(coords[i]);
    if (sgn(v) != 0) m.row_data_[i].push_back({0, std::move(v)});
  }
  return m;
}

Matrix Matrix::unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.row_data_.at(i).push_back({0, 1});
  return m;
}

std::size_t Matrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : row_data_) n += r.size();
  return n;
}

double Matrix::density() const noexcept {
  const double cells = static_cast<double>(rows()) * static_cast<double>(cols_);
  return cells == 0 ? 0.0 : static_cast<double>(nnz()) / cells;
}

mpq_class Matrix::get(std::size_t i, std::size_t j) const {
  const auto& r = row_data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->value;
  return 0;
}

void Matrix::set(std::size_t i, std::size_t j, const mpq_class& value) {
  if (j >= cols_) throw DimensionMismatch("column index out of range");
  auto& r = row_data_.at(i);
  mpq_class v = field_.from_rational(value);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) {
    if (sgn(v) == 0) {
      r.erase(it);
    } else {
      it->value = std::move(v);
    }
  } else if (sgn(v) != 0) {
    r.insert(it, Entry{static_cast<std::uint32_t>(j), std::move(v)});
  }
}

void Matrix::set_row(std::size_t i, SparseRow r) { row_data_.at(i) = std::move(r); }

bool Matrix::is_zero() const noexcept {
  return std::all_of(row_data_.begin(), row_data_.end(), [](const SparseRow& r) { return r.empty(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& e : row_data_[i]) {
      t.row_data_[e.col].push_back({static_cast<std::uint32_t>(i), e.value});
    }
  }
  return t;
}

Matrix Matrix::scaled(const mpq_class& c) const {
  const mpq_class cc = field_.from_rational(c);
  Matrix m(field_, rows(), cols_);
  if (sgn(cc) == 0) return m;
  for (std::size_t i = 0; i < rows(); ++i) {
    m.row_data_[i].reserve(row_data_[i].size());
    for (const auto& e : row_data_[i]) m.row_data_[i].push_back({e.col, field_.mul(cc, e.value)});
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows()) {
    throw DimensionMismatch("product of " + std::to_string(rows()) + "x" + std::to_string(cols_) +
                            " and " + std::to_string(o.rows()) + "x" + std::to_string(o.cols()));
  }
  Matrix m(field_, rows(), o.cols());
  std::vector<Entry> acc;
  for (std::size_t i = 0; i < rows(); ++i) {
    acc.clear();
    for (const auto& e : row_data_[i]) {
      for (const auto& f : o.row_data_[e.col]) acc.push_back({f.col, field_.mul(e.value, f.value)});
    }
    m.row_data_[i] = merge_row(acc, field_);
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows() != o.rows() || cols_ != o.cols()) throw DimensionMismatch("sum of unequal shapes");
  Matrix m(field_, rows(), cols_);
  std::vector<Entry> acc;
  for (std::size_t i = 0; i < rows(); ++i) {
    acc.assign(row_data_[i].begin(), row_data_[i].end());
    acc.insert(acc.end(), o.row_data_[i].begin(), o.row_data_[i].end());
    m.row_data_[i] = merge_row(acc, field_);
  }
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::submatrix(std::span<const std::size_t> rs, std::span<const std::size_t> cs) const {
  std::vector<std::int64_t> col_map(cols_, -1);
  for (std::size_t k = 0; k < cs.size(); ++k) col_map.at(cs[k]) = static_cast<std::int64_t>(k);
  Matrix m(field_, rs.size(), cs.size());
  std::vector<Entry> acc;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    acc.clear();
    for (const auto& e : row_data_.at(rs[k])) {
      if (col_map[e.col] >= 0) acc.push_back({static_cast<std::uint32_t>(col_map[e.col]), e.value});
    }
    m.row_data_[k] = merge_row(acc, field_);
  }
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cs) const {
  std::vector<std::size_t> all(rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return submatrix(all, cs);
}

Matrix Matrix::select_rows(std::span<const std::size_t> rs) const {
  Matrix m(field_, rs.size(), cols_);
  for (std::size_t k = 0; k < rs.size(); ++k) m.row_data_[k] = row_data_.at(rs[k]);
  return m;
}

Matrix Matrix::column(std::size_t j) const {
  const std::size_t idx[] = {j};
  return select_columns(idx);
}

std::vector<mpq_class> Matrix::column_values(std::size_t j) const {
  std::vector<mpq_class> v(rows());
  for (std::size_t i = 0; i < rows(); ++i) v[i] = get(i, j);
  return v;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  const Field f = blocks.front().field();
  const std::size_t r = blocks.front().rows();
  std::size_t c = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b);
    if (b.rows() != r) throw DimensionMismatch("hstack of blocks with unequal row counts");
    c += b.cols();
  }
  Matrix m(f, r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < r; ++i) {
      for (const auto& e : b.row_data_[i]) {
        m.row_data_[i].push_back({static_cast<std::uint32_t>(e.col + off), e.value});
      }
    }
    off += b.cols();
  }
  return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  const Field f = blocks.front().field();
  const std::size_t c = blocks.front().cols();
  std::size_t r = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b);
    if (b.cols() != c) throw DimensionMismatch("vstack of blocks with unequal column counts");
    r += b.rows();
  }
  Matrix m(f, r, c);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) m.row_data_[off + i] = b.row_data_[i];
    off += b.rows();
  }
  return m;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b);
    r += b.rows();
    c += b.cols();
  }
  Matrix m(blocks.front().field(), r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (const auto& e : b.row_data_[i]) {
        m.row_data_[ro + i].push_back({static_cast<std::uint32_t>(e.col + co), e.value});
      }
    }
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows() != b.rows() || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& x = a.row_data_[i];
    const auto& y = b.row_data_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].col != y[k].col || x[k].value != y[k].value) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

std::vector<std::pair<std::size_t, mpq_class>> vector_entries(const Matrix& column) {
  if (column.cols() != 1) throw DimensionMismatch("expected a single column");
  std::vector<std::pair<std::size_t, mpq_class>> out;
  for (std::size_t i = 0; i < column.rows(); ++i) {
    if (!column.row(i).empty()) out.emplace_back(i, column.row(i).front().value);
  }
  return out;
}

void MatrixBuilder::add(std::size_t i, std::size_t j, const mpq_class& v) {
  if (i >= rows_ || j >= cols_) {
    throw DimensionMismatch("builder index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (sgn(v) == 0) return;
  triplets_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                       field_.from_rational(v)});
}

void MatrixBuilder::add_block(std::size_t row0, std::size_t col0, const Matrix& m,
                              const mpq_class& c) {
  if (sgn(c) == 0) return;
  const mpq_class cc = field_.from_rational(c);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) add(row0 + i, col0 + e.col, field_.mul(cc, e.value));
  }
}

Matrix MatrixBuilder::build() {
  std::sort(triplets_.begin(), triplets_.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  Matrix m(field_, rows_, cols_);
  for (std::size_t k = 0; k < triplets_.size();) {
    std::size_t j = k;
    mpq_class sum = triplets_[k].value;
    while (++j < triplets_.size() && triplets_[j].row == triplets_[k].row &&
           triplets_[j].col == triplets_[k].col) {
      sum = field_.add(sum, triplets_[j].value);
    }
    if (sgn(sum) != 0) m.row_data_[triplets_[k].row].push_back({triplets_[k].col, std::move(sum)});
    k = j;
  }
  triplets_.clear();
  return m;
}

}  // namespace koszulcat
