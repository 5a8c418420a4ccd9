#pragma once

// Hand-built categories, monoids and modules shared by the unit tests. The
// structure constants are written out from their definitions, not derived
// through library routines.

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <vector>

#include "koszulcat/category.hpp"
#include "koszulcat/monoid.hpp"

namespace koszulcat::testing {

inline const Field kQ = Field::rationals();

/// Two objects e (unit) and g with g◇g = e. Every endomorphism algebra is
/// Q[C2] = span{id, σ}; there are no maps between distinct objects. ◇ on
/// morphisms multiplies group elements, and s_{g,g} = σ, all other
/// symmetries are identities.
inline CategoryPtr c2conv() {
  auto c = std::make_shared<CategoryPresentation>();
  c->backend = Backend::FiniteStrict;
  c->field = kQ;
  c->objects = {"e", "g"};
  c->unit = 0;
  c->diamond_obj = {0, 1, 1, 0};
  const std::size_t n = 2;
  c->hom_basis.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) c->hom_basis[x * n + y] = {"id_" + c->objects[x], "s_" + c->objects[x]};
    }
  }
  auto hd = [&](std::size_t x, std::size_t y) { return c->hom_basis[x * n + y].size(); };
  // Group product on C2 = {0, 1} as a 2 x 4 table, column a*2+b -> a+b.
  MatrixBuilder group(kQ, 2, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) group.add((a + b) % 2, a * 2 + b, 1);
  }
  const Matrix mult = group.build();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        c->composition.push_back(x == y && y == z ? mult : Matrix(kQ, hd(x, z), hd(y, z) * hd(x, y)));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) c->identity.push_back(Matrix::unit_vector(kQ, 2, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x2 = 0; x2 < n; ++x2) {
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          const std::size_t rows = hd(c->diamond_obj[x * n + y], c->diamond_obj[x2 * n + y2]);
          c->diamond_mor.push_back(x == x2 && y == y2 ? mult : Matrix(kQ, rows, hd(x, x2) * hd(y, y2)));
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      c->symmetry.push_back(Matrix::unit_vector(kQ, 2, x == 1 && y == 1 ? 1 : 0));
    }
  }
  return c;
}

/// One object whose endomorphisms span{id, a, b} compose by a∘a = b, a∘b = 0,
/// b∘a = a, b∘b = 0: associativity fails on (a, a, a).
inline CategoryPtr broken_composition() {
  auto c = std::make_shared<CategoryPresentation>();
  c->backend = Backend::FiniteStrict;
  c->field = kQ;
  c->objects = {"1"};
  c->unit = 0;
  c->diamond_obj = {0};
  c->hom_basis = {{"id", "a", "b"}};
  // Column g*3+f holds g∘f.
  MatrixBuilder comp(kQ, 3, 9);
  for (std::size_t f = 0; f < 3; ++f) {
    comp.add(f, 0 * 3 + f, 1);
    comp.add(f, f * 3 + 0, 1);
  }
  comp.add(0, 0, -1);  // id∘id counted twice above
  comp.add(2, 1 * 3 + 1, 1);
  comp.add(1, 2 * 3 + 1, 1);
  c->composition = {comp.build()};
  c->identity = {Matrix::unit_vector(kQ, 3, 0)};
  c->diamond_mor = {c->composition[0]};
  c->symmetry = {Matrix::unit_vector(kQ, 3, 0)};
  return c;
}

/// The regular representation of C2 at g and the trivial one at e.
inline Representation c2_regular(const CategoryPtr& c) {
  Representation r;
  r.cat = c;
  r.dims = {1, 2};
  r.degrees = {{0}, {0, 0}};
  r.names = {{"v"}, {"w0", "w1"}};
  r.actions.resize(4);
  r.actions[0] = {Matrix::identity(kQ, 1), Matrix::identity(kQ, 1)};
  r.actions[3] = {Matrix::identity(kQ, 2), Matrix::from_rows(kQ, {{0, 1}, {1, 0}})};
  return r;
}

/// Multiplication table from a rule on basis indices; rule returns {index, coefficient}
/// pairs for e_i e_j.
template <class Rule>
Matrix product_table(std::size_t d, Rule rule) {
  MatrixBuilder b(kQ, d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, v] : rule(i, j)) b.add(k, i * d + j, v);
    }
  }
  return b.build();
}

inline MonoidPtr rationals_monoid(const CategoryPtr& c) {
  return std::make_shared<const MonoidData>(algebra_monoid(
      c, "Q", {"1"}, Matrix::identity(kQ, 1), Matrix::unit_vector(kQ, 1, 0)));
}

/// Q[x]/(x²) on basis {1, x}.
inline MonoidPtr dual_numbers(const CategoryPtr& c) {
  const Matrix p = product_table(2, [](std::size_t i, std::size_t j) {
    std::vector<std::pair<std::size_t, long>> out;
    if (i + j < 2) out.push_back({i + j, 1});
    return out;
  });
  return std::make_shared<const MonoidData>(
      algebra_monoid(c, "Q[x]/(x^2)", {"1", "x"}, p, Matrix::unit_vector(kQ, 2, 0)));
}

/// Q[t]/(t^{cap+1}) with t in degree 1, as a truncated graded carrier.
inline MonoidPtr truncated_line(const CategoryPtr& c, int cap) {
  const std::size_t d = static_cast<std::size_t>(cap) + 1;
  const Matrix p = product_table(d, [d](std::size_t i, std::size_t j) {
    std::vector<std::pair<std::size_t, long>> out;
    if (i + j < d) out.push_back({i + j, 1});
    return out;
  });
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("t^" + std::to_string(i));
    degrees.push_back(static_cast<int>(i));
  }
  return std::make_shared<const MonoidData>(
      algebra_monoid(c, "Q[t]", names, p, Matrix::unit_vector(kQ, d, 0), degrees, cap));
}

/// Elements of S3 as permutations of {0,1,2}, in lexicographic order.
inline std::vector<std::array<int, 3>> s3_elements() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// The group algebra Q[S3]; e_i e_j = e_{i∘j}.
inline MonoidPtr s3_group_algebra(const CategoryPtr& c) {
  const auto el = s3_elements();
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<std::size_t>(std::find(el.begin(), el.end(), p) - el.begin());
  };
  const Matrix p = product_table(6, [&](std::size_t i, std::size_t j) {
    std::array<int, 3> comp{};
    for (int k = 0; k < 3; ++k) comp[k] = el[i][el[j][k]];
    return std::vector<std::pair<std::size_t, long>>{{index(comp), 1}};
  });
  std::vector<std::string> names;
  for (const auto& q : el) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  return std::make_shared<const MonoidData>(
      algebra_monoid(c, "Q[S3]", names, p, Matrix::unit_vector(kQ, 6, 0)));
}

inline ElementRef element(const MonoidData& a, const std::vector<long>& coords) {
  std::vector<mpq_class> v(coords.begin(), coords.end());
  return {a.cat().unit, Matrix::column_vector(a.field(), v)};
}

}  // namespace koszulcat::testing
