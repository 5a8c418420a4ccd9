#include <gtest/gtest.h>

#include "../support/dense_oracle.hpp"
#include "../support/fixtures.hpp"
#include "koszulcat/errors.hpp"
#include "koszulcat/polynomial.hpp"
#include "koszulcat/regular.hpp"

namespace koszulcat {
namespace {

using namespace testing;

CategoryPtr trivial() {
  static const CategoryPtr c = CategoryPresentation::trivial(kQ);
  return c;
}

std::vector<std::size_t> dims_by_degree(const Representation& r, std::size_t x, int cap) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= cap; ++d) out.push_back(r.basis_in_degree(x, d).size());
  return out;
}

// Binomial coefficient by Pascal's triangle.
std::size_t binom(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> t(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return k > n ? 0 : t[n][k];
}

TEST(Monomials, GradedLexOrder) {
  const auto m = graded_monomials(2, 2);
  const std::vector<MultiIndex> expect{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(m, expect);
  EXPECT_EQ(monomial_name({2, 1}, {"x", "y"}), "x^2 y");
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(monomial_count(n, d), binom(n + d - 1, d));
  }
}

TEST(Polynomial, DimensionsPerDegree) {
  const auto q = rationals_monoid(trivial());
  EXPECT_EQ(dims_by_degree(polynomial_monoid(q, 1, 3).monoid->carrier, 0, 3), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(dims_by_degree(polynomial_monoid(q, 2, 2).monoid->carrier, 0, 2), (std::vector<std::size_t>{1, 2, 3}));
  const auto dual = dual_numbers(trivial());
  EXPECT_EQ(dims_by_degree(polynomial_monoid(dual, 1, 2).monoid->carrier, 0, 2), (std::vector<std::size_t>{2, 2, 2}));
  const auto s3 = s3_group_algebra(trivial());
  const auto p = polynomial_monoid(s3, 3, 3);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(p.monoid->carrier.basis_in_degree(0, d).size(), 6 * binom(3 + d - 1, d));
}

TEST(Polynomial, ValidMonoidsAndCommutativity) {
  const auto q = rationals_monoid(trivial());
  const auto dual = dual_numbers(trivial());
  const auto s3 = s3_group_algebra(trivial());
  for (const auto& base : {q, dual, s3}) {
    const auto p = polynomial_monoid(base, 2, 3);
    const auto r = validate_monoid(*p.monoid);
    for (const auto& v : r.violations) ADD_FAILURE() << base->name << ": " << v.axiom;
    EXPECT_EQ(is_commutative(*p.monoid), is_commutative(*base));
  }
  const auto c2 = std::make_shared<const MonoidData>(identity_monoid(c2conv()));
  EXPECT_TRUE(validate_monoid(*polynomial_monoid(c2, 2, 3).monoid).ok());
}

TEST(Polynomial, ZeroVariablesReturnsTheBase) {
  const auto dual = dual_numbers(trivial());
  EXPECT_EQ(polynomial_monoid(dual, 0, 4).monoid, dual);
}

TEST(Polynomial, TruncatedBaseIsRejected) {
  EXPECT_THROW(polynomial_monoid(truncated_line(trivial(), 3), 1, 2), PreconditionError);
}

TEST(Polynomial, DegreeZeroSliceIsTheBase) {
  const auto s3 = s3_group_algebra(trivial());
  const auto p = polynomial_monoid(s3, 2, 2);
  const auto inc = base_inclusion(p);
  EXPECT_TRUE(validate_morphism(inc).ok());
  EXPECT_EQ(oracle_rank(inc.maps[0]), 6u);
  EXPECT_EQ(p.monoid->carrier.basis_in_degree(0, 0).size(), 6u);
}

TEST(Polynomial, VariablesAreCentral) {
  const auto s3 = s3_group_algebra(trivial());
  const auto p = polynomial_monoid(s3, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const ElementRef t = variable_element(p, i);
    EXPECT_TRUE(is_central(*p.monoid, t));
    EXPECT_EQ(homogeneous_degree(p.monoid->carrier, t), 1);
  }
  EXPECT_THROW(variable_element(p, 2), RangeError);
}

TEST(Polynomial, FunctorialInTheBase) {
  // The unit inclusion Q -> Q[x]/(x²) extends to Q[t] -> (Q[x]/(x²))[t].
  const auto q = rationals_monoid(trivial());
  const auto dual = dual_numbers(trivial());
  const auto pq = polynomial_monoid(q, 1, 3), pd = polynomial_monoid(dual, 1, 3);
  const Matrix f = Matrix::from_rows(kQ, {{1}, {0}});
  MonoidMorphism ext{pq.monoid, pd.monoid, {kronecker(Matrix::identity(kQ, 4), f)}};
  EXPECT_TRUE(validate_morphism(ext).ok());
  // Square with the base inclusions commutes.
  EXPECT_EQ(ext.maps[0] * base_inclusion(pq).maps[0], base_inclusion(pd).maps[0] * f);
}

TEST(Substitution, SendsBothVariablesToT) {
  const auto q = rationals_monoid(trivial());
  const auto a2 = polynomial_monoid(q, 2, 4, {"u", "v"});
  const auto a1 = polynomial_monoid(q, 1, 4);
  const ElementRef t = variable_element(a1, 0);
  const MonoidMorphism pi = substitution_morphism(a2, a1, {t, t});
  EXPECT_TRUE(validate_morphism(pi).ok());
  // u^i v^j ↦ t^{i+j}: rank one per degree.
  for (int d = 0; d <= 4; ++d) {
    const auto cols = a2.monoid->carrier.basis_in_degree(0, d);
    EXPECT_EQ(oracle_rank(pi.maps[0].select_columns(cols)), 1u);
  }
}

TEST(Merge, BivariateCounts) {
  const auto q = rationals_monoid(trivial());
  const auto cu = polynomial_monoid(q, 1, 4, {"u"}), dv = polynomial_monoid(q, 1, 4, {"v"});
  const auto merged = merge_variables(cu, dv, q, q->pairing);
  EXPECT_TRUE(merged.certificate.pass());
  for (int d = 0; d <= 4; ++d) {
    EXPECT_EQ(merged.merged.monoid->carrier.basis_in_degree(0, d).size(), static_cast<std::size_t>(d + 1));
  }
  EXPECT_EQ(merged.tensor.monoid.carrier.dims, merged.merged.monoid->carrier.dims);
}

TEST(Merge, NoSecondVariablesKeepsTheFirst) {
  const auto q = rationals_monoid(trivial());
  const auto cu = polynomial_monoid(q, 2, 3, {"u1", "u2"});
  const auto d0 = polynomial_monoid(q, 0, 3);
  const auto merged = merge_variables(cu, d0, q, q->pairing);
  EXPECT_TRUE(merged.certificate.pass());
  EXPECT_EQ(merged.merged.monoid->carrier.dims, cu.monoid->carrier.dims);
  EXPECT_EQ(merged.merged.monoid->carrier.names, cu.monoid->carrier.names);
}

TEST(Merge, NonIsomorphicWitnessFails) {
  const auto dual = dual_numbers(trivial());
  const auto cu = polynomial_monoid(dual, 1, 2, {"u"}), dv = polynomial_monoid(dual, 1, 2, {"v"});
  EXPECT_THROW(merge_variables(cu, dv, dual, dual->pairing), IsoFailure);
}

TEST(Regular, UnitIsRegular) {
  const auto a = dual_numbers(trivial());
  const auto c = is_regular(*a, a->unit_element(), forget_right(regular_module(a)));
  EXPECT_TRUE(c.regular());
}

TEST(Regular, DualNumberHasWitness) {
  const auto a = dual_numbers(trivial());
  const auto c = is_regular(*a, element(*a, {0, 1}), forget_right(regular_module(a)));
  ASSERT_FALSE(c.regular());
  ASSERT_TRUE(c.stages[0].witness);
  EXPECT_EQ(c.stages[0].witness->vector, Matrix::unit_vector(kQ, 2, 1));
  EXPECT_EQ(c.stages[0].witness->description, "x");
}

TEST(Regular, NonCentralIsRejected) {
  const auto a = s3_group_algebra(trivial());
  EXPECT_THROW(is_regular(*a, element(*a, {0, 1, 0, 0, 0, 0}), forget_right(regular_module(a))), NotCentral);
}

TEST(Regular, VariableIsRegularUpToCap) {
  const auto q = rationals_monoid(trivial());
  const auto p = polynomial_monoid(q, 2, 5);
  const auto c = is_regular(*p.monoid, variable_element(p, 0), forget_right(regular_module(p.monoid)));
  EXPECT_TRUE(c.regular());
  EXPECT_EQ(c.stages[0].window, 4);
  EXPECT_THROW(is_regular(*p.monoid, variable_element(p, 0), regular_module(p.monoid), 6), WindowError);
}

TEST(Regular, NonhomogeneousElementUsesTopDegree) {
  const auto q = rationals_monoid(trivial());
  const auto p = polynomial_monoid(q, 1, 4);
  // 1 + t is a unit in the truncation window and acts injectively.
  const auto c = is_regular(*p.monoid, element(*p.monoid, {1, 1, 0, 0, 0}), regular_module(p.monoid));
  EXPECT_TRUE(c.regular());
  EXPECT_EQ(c.stages[0].window, 3);
}

TEST(RegularSequence, VariablesOfTheBivariateRing) {
  const auto q = rationals_monoid(trivial());
  const auto p = polynomial_monoid(q, 2, 5);
  const auto c = is_regular_sequence(*p.monoid, {variable_element(p, 0), variable_element(p, 1)});
  EXPECT_TRUE(c.regular());
  EXPECT_EQ(c.stages.size(), 2u);
  EXPECT_TRUE(*c.quotient_nonzero);
}

TEST(RegularSequence, UnitKillsEverything) {
  const auto a = dual_numbers(trivial());
  const auto c = is_regular_sequence(*a, {a->unit_element()});
  EXPECT_TRUE(c.stages[0].injective);
  EXPECT_FALSE(*c.quotient_nonzero);
  EXPECT_FALSE(c.regular());
}

TEST(RegularSequence, DualNumberFailsFirstStage) {
  const auto a = dual_numbers(trivial());
  const auto c = is_regular_sequence(*a, {element(*a, {0, 1})});
  EXPECT_FALSE(c.stages[0].injective);
  EXPECT_NE(c.failure().find("kills x"), std::string::npos) << c.failure();
}

TEST(RegularSequence, GradedNeedsHomogeneousGenerators) {
  const auto q = rationals_monoid(trivial());
  const auto p = polynomial_monoid(q, 1, 3);
  EXPECT_THROW(is_regular_sequence(*p.monoid, {element(*p.monoid, {1, 1, 0, 0})}), PreconditionError);
}

TEST(QuotientModule, BivariateByVariables) {
  const auto q = rationals_monoid(trivial());
  const auto p = polynomial_monoid(q, 2, 4);
  const auto sub = generated_submodule(*p.monoid, {variable_element(p, 0), variable_element(p, 1)});
  const auto quo = quotient_module(regular_module(p.monoid), sub);
  EXPECT_EQ(dims_by_degree(quo.module.carrier, 0, 4), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

}  // namespace
}  // namespace koszulcat
