#include "koszulcat/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "koszulcat/errors.hpp"

namespace koszulcat {

namespace {

struct RationalOps {
  using T = mpq_class;
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  T from(const mpq_class& v) const { return v; }
  mpq_class to(const T& v) const { return v; }
  void sub_mul(T& a, const T& c, const T& b) const { a -= c * b; }
  T inv(const T& a) const { return 1 / a; }
  T mul(const T& a, const T& b) const { return a * b; }
};

struct ModularOps {
  using T = std::uint64_t;
  std::uint64_t p;
  static bool is_zero(T a) { return a == 0; }
  T from(const mpq_class& v) const { return v.get_num().get_ui(); }
  mpq_class to(T v) const { return mpq_class(static_cast<unsigned long>(v)); }
  void sub_mul(T& a, T c, T b) const { a = (a + p - (c * b) % p) % p; }
  T mul(T a, T b) const { return (a * b) % p; }
  T inv(T a) const {
    // Fermat: a^(p-2)
    T r = 1, base = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = (r * base) % p;
      base = (base * base) % p;
    }
    return r;
  }
};

template <class Ops>
struct RowT {
  std::vector<std::uint32_t> cols;
  std::vector<typename Ops::T> vals;
};

// Sparse Gauss-Jordan: incremental echelon with a dense scratch accumulator,
// then back-substitution to the reduced form.
template <class Ops>
std::vector<RowT<Ops>> rref_sparse(const Matrix& m, const Ops& ops) {
  using T = typename Ops::T;
  const std::size_t ncols = m.cols();
  std::vector<std::int64_t> pivot_of_col(ncols, -1);
  std::vector<RowT<Ops>> prows;
  std::vector<T> acc(ncols);
  std::vector<char> live(ncols, 0);
  std::vector<std::uint32_t> touched;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;

  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto& src = m.row(i);
    if (src.empty()) continue;
    touched.clear();
    for (const auto& e : src) {
      acc[e.col] = ops.from(e.value);
      live[e.col] = 1;
      touched.push_back(e.col);
      heap.push(e.col);
    }
    std::uint32_t last = UINT32_MAX;
    while (!heap.empty()) {
      const std::uint32_t c = heap.top();
      heap.pop();
      if (c == last) continue;
      last = c;
      if (Ops::is_zero(acc[c]) || pivot_of_col[c] < 0) continue;
      const T factor = acc[c];
      const auto& pr = prows[static_cast<std::size_t>(pivot_of_col[c])];
      for (std::size_t k = 0; k < pr.cols.size(); ++k) {
        const std::uint32_t cc = pr.cols[k];
        if (!live[cc]) {
          live[cc] = 1;
          acc[cc] = T(0);
          touched.push_back(cc);
          heap.push(cc);
        }
        ops.sub_mul(acc[cc], factor, pr.vals[k]);
      }
    }
    std::sort(touched.begin(), touched.end());
    RowT<Ops> row;
    for (std::uint32_t c : touched) {
      if (!Ops::is_zero(acc[c])) {
        row.cols.push_back(c);
        row.vals.push_back(acc[c]);
      }
      acc[c] = T(0);
      live[c] = 0;
    }
    if (row.cols.empty()) continue;
    const T inv = ops.inv(row.vals.front());
    for (auto& v : row.vals) v = ops.mul(v, inv);
    pivot_of_col[row.cols.front()] = static_cast<std::int64_t>(prows.size());
    prows.push_back(std::move(row));
  }

  // Back-substitution, highest pivot first, so every referenced row is already reduced.
  std::vector<std::size_t> order(prows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return prows[a].cols.front() > prows[b].cols.front(); });
  for (std::size_t idx : order) {
    auto& row = prows[idx];
    bool needs = false;
    for (std::size_t k = 1; k < row.cols.size(); ++k) {
      if (pivot_of_col[row.cols[k]] >= 0) {
        needs = true;
        break;
      }
    }
    if (!needs) continue;
    touched.clear();
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      acc[row.cols[k]] = row.vals[k];
      live[row.cols[k]] = 1;
      touched.push_back(row.cols[k]);
    }
    const std::uint32_t lead = row.cols.front();
    for (std::size_t k = 1; k < row.cols.size(); ++k) {
      const std::uint32_t c = row.cols[k];
      if (pivot_of_col[c] < 0 || Ops::is_zero(acc[c])) continue;
      const T factor = acc[c];
      const auto& pr = prows[static_cast<std::size_t>(pivot_of_col[c])];
      // pr is fully reduced: its only pivot-column entry is c itself.
      for (std::size_t j = 0; j < pr.cols.size(); ++j) {
        const std::uint32_t cc = pr.cols[j];
        if (!live[cc]) {
          live[cc] = 1;
          acc[cc] = T(0);
          touched.push_back(cc);
        }
        ops.sub_mul(acc[cc], factor, pr.vals[j]);
      }
    }
    std::sort(touched.begin(), touched.end());
    RowT<Ops> out;
    for (std::uint32_t c : touched) {
      if (!Ops::is_zero(acc[c])) {
        out.cols.push_back(c);
        out.vals.push_back(acc[c]);
      }
      acc[c] = T(0);
      live[c] = 0;
    }
    if (out.cols.empty() || out.cols.front() != lead) {
      throw TheoremViolation("sparse back-substitution lost its pivot");
    }
    row = std::move(out);
  }
  std::sort(prows.begin(), prows.end(),
            [](const RowT<Ops>& a, const RowT<Ops>& b) { return a.cols.front() < b.cols.front(); });
  return prows;
}

// Fraction-free (Bareiss) forward elimination on integer-scaled rows, then
// exact back-substitution over Q.
std::vector<RowT<RationalOps>> rref_bareiss(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (const auto& e : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
    for (const auto& e : m.row(i)) a[i][e.col] = e.value.get_num() * (l / e.value.get_den());
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t sel = row;
    while (sel < r && a[sel][col] == 0) ++sel;
    if (sel == r) continue;
    std::swap(a[sel], a[row]);
    const mpz_class piv = a[row][col];
    for (std::size_t i = row + 1; i < r; ++i) {
      const mpz_class lead = a[i][col];
      for (std::size_t j = col + 1; j < c; ++j) {
        mpz_class v = piv * a[i][j] - lead * a[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][col] = 0;
    }
    // Rows above the current one keep their unscaled entries; only the
    // trailing block is carried forward as determinantal minors.
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rk = pivots.size();
  std::vector<std::vector<mpq_class>> q(rk, std::vector<mpq_class>(c));
  for (std::size_t i = 0; i < rk; ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (std::size_t j = pivots[i]; j < c; ++j) {
      if (a[i][j] != 0) {
        q[i][j] = mpq_class(a[i][j], piv);
        q[i][j].canonicalize();
      }
    }
  }
  for (std::size_t k = rk; k-- > 0;) {
    for (std::size_t i = 0; i < k; ++i) {
      const mpq_class f = q[i][pivots[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = pivots[k]; j < c; ++j) {
        if (sgn(q[k][j]) != 0) q[i][j] -= f * q[k][j];
      }
    }
  }
  std::vector<RowT<RationalOps>> out(rk);
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (sgn(q[i][j]) != 0) {
        out[i].cols.push_back(static_cast<std::uint32_t>(j));
        out[i].vals.push_back(q[i][j]);
      }
    }
  }
  return out;
}

std::vector<RowT<ModularOps>> rref_dense_modular(const Matrix& m, const ModularOps& ops) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<std::uint64_t>> a(r, std::vector<std::uint64_t>(c, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& e : m.row(i)) a[i][e.col] = ops.from(e.value);
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t sel = row;
    while (sel < r && a[sel][col] == 0) ++sel;
    if (sel == r) continue;
    std::swap(a[sel], a[row]);
    const std::uint64_t inv = ops.inv(a[row][col]);
    for (std::size_t j = col; j < c; ++j) a[row][j] = ops.mul(a[row][j], inv);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const std::uint64_t f = a[i][col];
      for (std::size_t j = col; j < c; ++j) {
        if (a[row][j]) ops.sub_mul(a[i][j], f, a[row][j]);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<RowT<ModularOps>> out(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (a[i][j]) {
        out[i].cols.push_back(static_cast<std::uint32_t>(j));
        out[i].vals.push_back(a[i][j]);
      }
    }
  }
  return out;
}

template <class Ops>
Echelon to_echelon(const std::vector<RowT<Ops>>& rows, const Matrix& m, const Ops& ops) {
  Echelon e;
  e.rref = Matrix(m.field(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseRow r;
    r.reserve(rows[i].cols.size());
    for (std::size_t k = 0; k < rows[i].cols.size(); ++k) {
      r.push_back({rows[i].cols[k], ops.to(rows[i].vals[k])});
    }
    e.pivots.push_back(rows[i].cols.front());
    e.rref.set_row(i, std::move(r));
  }
  return e;
}

}  // namespace

Echelon row_reduce(const Matrix& m, const ReduceOptions& opts) {
  const bool dense = m.rows() > 0 && m.cols() > 0 && m.density() >= opts.dense_threshold;
  if (m.field().is_rational()) {
    RationalOps ops;
    return to_echelon(dense ? rref_bareiss(m) : rref_sparse(m, ops), m, ops);
  }
  ModularOps ops{m.field().characteristic()};
  return to_echelon(dense ? rref_dense_modular(m, ops) : rref_sparse(m, ops), m, ops);
}

std::size_t rank(const Matrix& m, const ReduceOptions& opts) { return row_reduce(m, opts).rank(); }

SubspacePresentation kernel(const Matrix& m, const ReduceOptions& opts) {
  const Echelon e = row_reduce(m, opts);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  std::vector<std::size_t> free_index(m.cols(), 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) free_index[free_cols[k]] = k;
  MatrixBuilder b(m.field(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) b.add(free_cols[k], k, 1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    for (const auto& entry : e.rref.row(i)) {
      if (!is_pivot[entry.col]) {
        b.add(e.pivots[i], free_index[entry.col], m.field().neg(entry.value));
      }
    }
  }
  SubspacePresentation s{m.cols(), b.build()};
  if (s.dim() + e.rank() != m.cols()) throw TheoremViolation("rank-nullity failed");
  return s;
}

SubspacePresentation image(const Matrix& m, const ReduceOptions& opts) {
  const Echelon e = row_reduce(m, opts);
  return {m.rows(), m.select_columns(e.pivots)};
}

SubspacePresentation span_of(const Matrix& columns, const ReduceOptions& opts) {
  return image(columns, opts);
}

bool contains(const SubspacePresentation& space, const Matrix& vectors) {
  if (vectors.rows() != space.ambient) throw DimensionMismatch("vector length differs from ambient");
  if (vectors.cols() == 0) return true;
  const std::size_t r0 = space.dim() == 0 ? 0 : rank(space.basis);
  return rank(Matrix::hstack({space.dim() == 0 ? Matrix(vectors.field(), space.ambient, 0)
                                               : space.basis,
                              vectors})) == r0;
}

bool same_subspace(const SubspacePresentation& a, const SubspacePresentation& b) {
  if (a.ambient != b.ambient) return false;
  return rank(a.basis) == rank(b.basis) && contains(a, b.basis);
}

QuotientPresentation quotient(std::size_t ambient_dim, const SubspacePresentation& sub,
                              const ReduceOptions& opts) {
  if (sub.ambient != ambient_dim || sub.basis.rows() != ambient_dim) {
    throw DimensionMismatch("subspace of F^" + std::to_string(sub.ambient) +
                            " is not inside F^" + std::to_string(ambient_dim));
  }
  const Field f = sub.basis.field();
  const Echelon e = row_reduce(sub.basis.transpose(), opts);
  std::vector<std::int64_t> pivot_row(ambient_dim, -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) pivot_row[e.pivots[i]] = static_cast<std::int64_t>(i);
  QuotientPresentation q;
  std::vector<std::int64_t> comp_index(ambient_dim, -1);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (pivot_row[j] < 0) {
      comp_index[j] = static_cast<std::int64_t>(q.complement.size());
      q.complement.push_back(j);
    }
  }
  q.dim = q.complement.size();
  MatrixBuilder proj(f, q.dim, ambient_dim);
  MatrixBuilder sec(f, ambient_dim, q.dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (pivot_row[j] < 0) {
      proj.add(static_cast<std::size_t>(comp_index[j]), j, 1);
      sec.add(j, static_cast<std::size_t>(comp_index[j]), 1);
      continue;
    }
    // e_j is congruent to e_j - row, which lives on complement coordinates.
    for (const auto& entry : e.rref.row(static_cast<std::size_t>(pivot_row[j]))) {
      if (entry.col == j) continue;
      proj.add(static_cast<std::size_t>(comp_index[entry.col]), j, f.neg(entry.value));
    }
  }
  q.projection = proj.build();
  q.section = sec.build();
  return q;
}

Matrix section_of_surjection(const Matrix& m, const ReduceOptions& opts) {
  const Echelon e = row_reduce(m, opts);
  if (e.rank() != m.rows()) {
    throw NoSection("map of rank " + std::to_string(e.rank()) + " onto dimension " +
                    std::to_string(m.rows()) + " is not surjective");
  }
  const Matrix square = m.select_columns(e.pivots);
  const Matrix inv = inverse(square, opts);
  MatrixBuilder b(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    for (const auto& entry : inv.row(i)) b.add(e.pivots[i], entry.col, entry.value);
  }
  return b.build();
}

Matrix inverse(const Matrix& m, const ReduceOptions& opts) {
  if (m.rows() != m.cols()) throw IsoFailure("non-square matrix is not invertible");
  const std::size_t n = m.rows();
  const Echelon e = row_reduce(Matrix::hstack({m, Matrix::identity(m.field(), n)}), opts);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw IsoFailure("singular " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  MatrixBuilder b(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& entry : e.rref.row(i)) {
      if (entry.col >= n) b.add(i, entry.col - n, entry.value);
    }
  }
  return b.build();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const ReduceOptions& opts) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  const Echelon e = row_reduce(Matrix::hstack({a, b}), opts);
  MatrixBuilder x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;
    for (const auto& entry : e.rref.row(i)) {
      if (entry.col >= a.cols()) x.add(e.pivots[i], entry.col - a.cols(), entry.value);
    }
  }
  return x.build();
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw DimensionMismatch("kronecker over different fields");
  const Field& f = a.field();
  Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
      SparseRow r;
      r.reserve(a.row(i).size() * b.row(i2).size());
      for (const auto& ea : a.row(i)) {
        for (const auto& eb : b.row(i2)) {
          r.push_back({static_cast<std::uint32_t>(ea.col * b.cols() + eb.col), f.mul(ea.value, eb.value)});
        }
      }
      k.set_row(i * b.rows() + i2, std::move(r));
    }
  }
  return k;
}

}  // namespace koszulcat
