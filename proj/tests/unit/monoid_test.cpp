#include <gtest/gtest.h>

#include "../support/dense_oracle.hpp"
#include "../support/fixtures.hpp"
#include "koszulcat/errors.hpp"
#include "koszulcat/monoid.hpp"

namespace koszulcat {
namespace {

using namespace testing;

CategoryPtr trivial() {
  static const CategoryPtr c = CategoryPresentation::trivial(kQ);
  return c;
}

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

// Smallest left-ideal containing gens, by repeated multiplication with basis
// elements until the dimension stops growing.
std::size_t closure_dim(const MonoidData& a, const std::vector<ElementRef>& gens) {
  const std::size_t d = a.carrier.dims[0];
  Dense vecs;
  for (const auto& g : gens) {
    std::vector<mpq_class> v(d);
    for (const auto& [i, c] : vector_entries(g.coords)) v[i] = c;
    vecs.push_back(v);
  }
  const Dense p = to_dense(a.pairing[0]);
  std::size_t dim = vecs.empty() ? 0 : oracle_rank(vecs);
  while (true) {
    Dense next = vecs;
    for (const auto& v : vecs) {
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<mpq_class> w(d);
        for (std::size_t j = 0; j < d; ++j) {
          if (sgn(v[j]) == 0) continue;
          for (std::size_t r = 0; r < d; ++r) w[r] += p[r][i * d + j] * v[j];
        }
        next.push_back(w);
      }
    }
    const std::size_t nd = next.empty() ? 0 : oracle_rank(next);
    vecs = std::move(next);
    if (nd == dim) return dim;
    dim = nd;
  }
}

TEST(Monoid, RationalsAndDualNumbersAreValid) {
  EXPECT_TRUE(validate_monoid(*rationals_monoid(trivial())).ok());
  EXPECT_TRUE(validate_monoid(*dual_numbers(trivial())).ok());
  EXPECT_TRUE(validate_monoid(*truncated_line(trivial(), 3)).ok());
  EXPECT_TRUE(validate_monoid(*s3_group_algebra(trivial())).ok());
}

TEST(Monoid, PerturbedConstantBreaksAssociativity) {
  MonoidData a = *s3_group_algebra(trivial());
  // Redirect the product of elements 1 and 2 to element 3.
  const std::size_t col = 1 * 6 + 2;
  const std::size_t old = vector_entries(a.pairing[0].column(col)).front().first;
  a.pairing[0].set(old, col, 0);
  a.pairing[0].set((old + 1) % 6 == 0 ? 1 : (old + 1) % 6, col, 1);
  const auto r = validate_monoid(a);
  EXPECT_TRUE(has_axiom(r, "associativity"));
  EXPECT_FALSE(has_axiom(r, "left unit law"));
}

TEST(Monoid, IdentityMonoidOnC2IsValid) {
  const MonoidData i = identity_monoid(c2conv());
  const auto r = validate_monoid(i);
  for (const auto& v : r.violations) ADD_FAILURE() << v.axiom;
  EXPECT_TRUE(is_commutative(i));
}

TEST(Monoid, ElementsOutsideTheUnitObjectAreRejected) {
  const auto i = std::make_shared<const MonoidData>(identity_monoid(c2conv()));
  const ModuleData m = regular_module(i);
  EXPECT_THROW(mult_operator({1, Matrix(kQ, 0, 1)}, m), WrongObject);
  EXPECT_THROW(generated_submodule(*i, {{1, Matrix(kQ, 0, 1)}}), WrongObject);
}

TEST(Commutant, CommutativeMonoidIsFull) {
  const auto a = dual_numbers(trivial());
  EXPECT_EQ(commutant(*a, 0).dim(), 2u);
  EXPECT_TRUE(is_commutative(*a));
  const MonoidData i = identity_monoid(c2conv());
  EXPECT_EQ(commutant(i, 0).dim(), 2u);
}

TEST(Commutant, S3CenterHasDimensionThree) {
  const auto a = s3_group_algebra(trivial());
  const auto c = commutant(*a, 0);
  // Oracle: z commutes with every group element; rows g z - z g = 0 from the permutations.
  const auto el = s3_elements();
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<std::size_t>(std::find(el.begin(), el.end(), p) - el.begin());
  };
  auto compose = [&](std::size_t i, std::size_t j) {
    std::array<int, 3> out{};
    for (int k = 0; k < 3; ++k) out[k] = el[i][el[j][k]];
    return index(out);
  };
  Dense rows;
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t r = 0; r < 6; ++r) {
      std::vector<mpq_class> row(6);
      for (std::size_t z = 0; z < 6; ++z) {
        if (compose(g, z) == r) row[z] += 1;
        if (compose(z, g) == r) row[z] -= 1;
      }
      rows.push_back(row);
    }
  }
  EXPECT_EQ(c.dim(), 6 - oracle_rank(rows));
  EXPECT_EQ(c.dim(), 3u);
  EXPECT_FALSE(is_commutative(*a));
  // A transposition is not central; the sum of all three is.
  EXPECT_FALSE(is_central(*a, element(*a, {0, 1, 0, 0, 0, 0})));
  std::vector<long> transpositions(6);
  for (std::size_t i = 0; i < 6; ++i) {
    int fixed = 0;
    for (int k = 0; k < 3; ++k) fixed += el[i][k] == k;
    transpositions[i] = fixed == 1;
  }
  EXPECT_TRUE(is_central(*a, element(*a, transpositions)));
  EXPECT_TRUE(contains(c, element(*a, transpositions).coords));
}

TEST(MultOperator, UnitActsAsIdentity) {
  for (const auto& a : {dual_numbers(trivial()), s3_group_algebra(trivial())}) {
    const auto l = mult_operator(a->unit_element(), regular_module(a));
    EXPECT_EQ(l[0], Matrix::identity(kQ, a->carrier.dims[0]));
  }
}

TEST(MultOperator, DualNumberIsNilpotent) {
  const auto a = dual_numbers(trivial());
  const auto l = mult_operator(element(*a, {0, 1}), regular_module(a));
  EXPECT_EQ(l[0], Matrix::from_rows(kQ, {{0, 0}, {1, 0}}));
}

TEST(MultOperator, TruncatedShiftHasRankThree) {
  const auto a = truncated_line(trivial(), 3);
  const auto l = mult_operator(element(*a, {0, 1, 0, 0}), regular_module(a));
  EXPECT_EQ(oracle_rank(l[0]), 3u);
  EXPECT_TRUE(is_homogeneous(l[0], a->carrier.degrees[0], a->carrier.degrees[0], 1));
}

TEST(MultOperator, NaturalAndCommutesWithRightAction) {
  const auto i = std::make_shared<const MonoidData>(identity_monoid(c2conv()));
  const ModuleData m = regular_module(i);
  const ElementRef sigma = i->basis_element(0, 1);
  ASSERT_TRUE(is_central(*i, sigma));
  const auto l = mult_operator(sigma, m);
  EXPECT_TRUE(check_natural(m.carrier, m.carrier, l, "L").ok());
  const auto r = right_mult_operator(m, sigma);
  for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(l[x] * r[x], r[x] * l[x]);

  const auto s3 = s3_group_algebra(trivial());
  const ModuleData reg = regular_module(s3);
  std::vector<long> z(6, 1);
  const auto lz = mult_operator(element(*s3, z), reg);
  for (std::size_t b = 0; b < 6; ++b) {
    const auto rb = right_mult_operator(reg, s3->basis_element(0, b));
    EXPECT_EQ(lz[0] * rb[0], rb[0] * lz[0]);
  }
}

TEST(Submodule, UnitGeneratesEverything) {
  const auto a = s3_group_algebra(trivial());
  EXPECT_EQ(generated_submodule(*a, {a->unit_element()})[0].dim(), 6u);
  EXPECT_EQ(generated_submodule(*a, {})[0].dim(), 0u);
}

TEST(Submodule, TruncatedLineIdealOfT) {
  const auto a = truncated_line(trivial(), 3);
  const auto sub = generated_submodule(*a, {element(*a, {0, 1, 0, 0})});
  EXPECT_EQ(sub[0].dim(), 3u);
  EXPECT_FALSE(contains(sub[0], Matrix::unit_vector(kQ, 4, 0)));
  for (std::size_t d = 1; d <= 3; ++d) EXPECT_TRUE(contains(sub[0], Matrix::unit_vector(kQ, 4, d)));
}

TEST(Submodule, DualNumberIdeal) {
  const auto a = dual_numbers(trivial());
  const auto sub = generated_submodule(*a, {element(*a, {0, 1})});
  EXPECT_EQ(sub[0].dim(), 1u);
}

TEST(Submodule, OneStepFormulaMatchesClosure) {
  const auto s3 = s3_group_algebra(trivial());
  const auto line = truncated_line(trivial(), 4);
  const std::vector<std::pair<MonoidPtr, std::vector<std::vector<long>>>> cases = {
      {s3, {{0, 1, 0, 0, 0, 0}}},
      {s3, {{1, 0, 0, 0, 0, -1}}},
      {s3, {{0, 1, 1, 0, 0, 0}, {0, 0, 0, 1, -1, 0}}},
      {line, {{0, 0, 1, 0, 0}}},
      {line, {{0, 0, 1, 1, 0}, {0, 0, 0, 3, 0}}},
  };
  for (const auto& [a, gens] : cases) {
    std::vector<ElementRef> g;
    for (const auto& v : gens) g.push_back(element(*a, v));
    EXPECT_EQ(generated_submodule(*a, g)[0].dim(), closure_dim(*a, g));
  }
}

TEST(Quotient, ByZeroAndByEverything) {
  const auto a = dual_numbers(trivial());
  const ModuleData m = regular_module(a);
  const auto zero = quotient_module(m, generated_submodule(*a, {}));
  EXPECT_EQ(zero.module.carrier.dims[0], 2u);
  EXPECT_TRUE(validate_module(zero.module).ok());
  const auto all = quotient_module(m, generated_submodule(*a, {a->unit_element()}));
  EXPECT_EQ(all.module.carrier.dims[0], 0u);
}

TEST(Quotient, KillsExactlyTheIdeal) {
  const auto a = truncated_line(trivial(), 4);
  const ElementRef t2 = element(*a, {0, 0, 1, 0, 0});
  const auto sub = generated_submodule(*a, {t2});
  const auto q = quotient_module(regular_module(a), sub);
  EXPECT_TRUE((q.projection[0] * t2.coords).is_zero());
  EXPECT_EQ(q.module.carrier.dims[0], 5u - sub[0].dim());
  EXPECT_EQ(q.module.carrier.degrees[0], (std::vector<int>{0, 1}));
  EXPECT_TRUE(validate_module(q.module).ok());
  // The projection is a module map: p(a m) = a p(m).
  for (std::size_t i = 0; i < 5; ++i) {
    const Matrix lhs = q.projection[0] * mult_operator(a->basis_element(0, i), regular_module(a))[0];
    const Matrix rhs = mult_operator(a->basis_element(0, i), q.module)[0] * q.projection[0];
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Quotient, UnstableFamilyNamesTheGenerator) {
  const auto a = dual_numbers(trivial());
  Subfamily sub{SubspacePresentation{2, Matrix::unit_vector(kQ, 2, 0)}};
  try {
    quotient_module(forget_right(regular_module(a)), sub);
    FAIL() << "expected StabilityError";
  } catch (const StabilityError& e) {
    EXPECT_NE(std::string(e.what()).find("left multiplication by 1:x"), std::string::npos) << e.what();
  }
}

TEST(Module, RegularAndRestrictedModulesAreValid) {
  const auto a = dual_numbers(trivial());
  const ModuleData m = regular_module(a);
  EXPECT_EQ(m.side(), Side::Bimodule);
  EXPECT_TRUE(validate_module(m).ok());
  const auto q = rationals_monoid(trivial());
  const MonoidMorphism unit{q, a, {Matrix::from_rows(kQ, {{1}, {0}})}};
  EXPECT_TRUE(validate_morphism(unit).ok());
  const ModuleData r = restrict_left(m, unit);
  EXPECT_TRUE(validate_module(r).ok());
  EXPECT_TRUE(validate_module(restrict_right(forget_left(m), unit)).ok());
  const MonoidMorphism bad{q, a, {Matrix::from_rows(kQ, {{0}, {1}})}};
  EXPECT_FALSE(validate_morphism(bad).ok());
}

TEST(Module, BrokenActionIsReported) {
  const auto a = dual_numbers(trivial());
  ModuleData m = forget_right(regular_module(a));
  m.left_action[0].set(0, 1 * 2 + 1, 1);  // x · x = 1
  const auto r = validate_module(m);
  EXPECT_TRUE(has_axiom(r, "left action is associative"));
}

TEST(TensorMonoid, TrivialBackendIsKronecker) {
  const auto a = dual_numbers(trivial());
  const auto t = tensor_monoid(*a, *a);
  EXPECT_EQ(t.monoid.carrier.dims[0], 4u);
  EXPECT_TRUE(validate_monoid(t.monoid).ok());
  EXPECT_TRUE(is_commutative(t.monoid));
  // (x⊗1)(1⊗x) = x⊗x.
  const Matrix x1 = Matrix::unit_vector(kQ, 4, 2), one_x = Matrix::unit_vector(kQ, 4, 1);
  EXPECT_EQ(t.monoid.multiply(0, x1, 0, one_x), Matrix::unit_vector(kQ, 4, 3));
}

TEST(TensorMonoid, IdentityOnC2) {
  const MonoidData i = identity_monoid(c2conv());
  const auto t = tensor_monoid(i, i);
  EXPECT_EQ(t.monoid.carrier.dims, i.carrier.dims);
  const auto r = validate_monoid(t.monoid);
  for (const auto& v : r.violations) ADD_FAILURE() << v.axiom;
}

TEST(Degrees, HomogeneousAndTop) {
  const auto a = truncated_line(trivial(), 3);
  EXPECT_EQ(homogeneous_degree(a->carrier, element(*a, {0, 0, 2, 0})), 2);
  EXPECT_EQ(homogeneous_degree(a->carrier, element(*a, {0, 1, 2, 0})), std::nullopt);
  EXPECT_EQ(top_degree(a->carrier, element(*a, {0, 1, 2, 0})), 2);
}

}  // namespace
}  // namespace koszulcat
