#pragma once

// Reference implementations used only by tests. They deliberately share no
// code with the library's elimination routines: plain dense rational Gauss
// with full pivot search, no sparsity, no fraction-free tricks.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "koszulcat/matrix.hpp"

namespace koszulcat::testing {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense to_dense(const Matrix& m) {
  Dense d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) d[i][e.col] = e.value;
  }
  return d;
}

/// Rank over Q (or over F_p when p != 0, values taken as integers mod p).
inline std::size_t oracle_rank(Dense a, std::uint64_t p = 0) {
  auto reduce = [p](mpq_class& v) {
    if (p == 0) return;
    mpz_class n = v.get_num() % static_cast<unsigned long>(p);
    if (n < 0) n += static_cast<unsigned long>(p);
    v = n;
  };
  auto inverse = [p](const mpq_class& v) -> mpq_class {
    if (p == 0) return 1 / v;
    mpz_class r;
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_invert(r.get_mpz_t(), v.get_num_mpz_t(), pp.get_mpz_t());
    return mpq_class(r);
  };
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      reduce(a[i][c]);
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const mpq_class inv = inverse(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      reduce(a[i][c]);
      if (sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] -= f * a[r][j];
        reduce(a[i][j]);
      }
    }
    ++r;
  }
  return r;
}

inline std::size_t oracle_rank(const Matrix& m) {
  return oracle_rank(to_dense(m), m.field().characteristic());
}

/// Dense product, independent of Matrix::operator*.
inline Dense oracle_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Dense c(n, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

/// Random sparse integer matrix with entries in [-range, range].
inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, double density,
                            int range, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-range, range);
  MatrixBuilder b(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (coin(rng) < density) b.add(i, j, val(rng));
    }
  }
  return b.build();
}

}  // namespace koszulcat::testing
