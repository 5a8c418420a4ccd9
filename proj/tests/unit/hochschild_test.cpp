#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "koszulcat/errors.hpp"
#include "koszulcat/hochschild.hpp"

namespace koszulcat {
namespace {

using namespace testing;

CategoryPtr trivial() {
  static const CategoryPtr c = CategoryPresentation::trivial(kQ);
  return c;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

EnvelopingData enveloping(const MonoidPtr& a, std::size_t n, int cap) {
  return build_enveloping(a, n, cap, certify_tensor_idempotent(a));
}

TEST(TensorIdempotent, RationalsDirect) {
  const auto q = rationals_monoid(trivial());
  const auto c = certify_tensor_idempotent(q);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.mode, IdempotenceMode::Direct);
  EXPECT_EQ(c.multiplication[0], Matrix::identity(kQ, 1));
}

TEST(TensorIdempotent, IdentityFunctorBothModes) {
  const auto i = std::make_shared<const MonoidData>(identity_monoid(c2conv()));
  const auto c = certify_tensor_idempotent(i);
  EXPECT_TRUE(c.pass());
  EXPECT_TRUE(c.direct);
  EXPECT_TRUE(c.quotient_of_i);
  EXPECT_EQ(c.multiplication[0].rows(), 2u);
  EXPECT_EQ(c.multiplication[1].rows(), 0u);
}

TEST(TensorIdempotent, DualNumbersFail) {
  const auto c = certify_tensor_idempotent(dual_numbers(trivial()));
  EXPECT_FALSE(c.pass());
  EXPECT_EQ(c.mode, IdempotenceMode::None);
  EXPECT_NE(c.failure.find("A⊗A has dim 4, A has dim 2"), std::string::npos) << c.failure;
}

TEST(TensorIdempotent, NoncommutativeFails) {
  const auto c = certify_tensor_idempotent(s3_group_algebra(trivial()));
  EXPECT_FALSE(c.commutative);
  EXPECT_FALSE(c.pass());
}

TEST(TensorIdempotent, TruncatedRejected) {
  EXPECT_THROW(certify_tensor_idempotent(truncated_line(trivial(), 3)), PreconditionError);
}

TEST(Enveloping, KernelDimensionsForOneVariable) {
  const auto e = enveloping(rationals_monoid(trivial()), 1, 3);
  EXPECT_TRUE(e.certificate.pass());
  ASSERT_EQ(e.kernel_table.size(), 4u);
  for (const auto& cell : e.kernel_table) {
    EXPECT_EQ(cell.dim_c, static_cast<std::size_t>(cell.degree + 1));
    EXPECT_EQ(cell.dim_kernel, static_cast<std::size_t>(cell.degree));
    EXPECT_EQ(cell.dim_j, cell.dim_kernel);
  }
  EXPECT_EQ(e.c.monoid->carrier.names[0][1], "u");
  EXPECT_EQ(e.alpha_names[0], "u - v");
}

TEST(Enveloping, TwoVariables) {
  const auto e = enveloping(rationals_monoid(trivial()), 2, 2);
  for (const auto& c : e.certificate.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  for (const auto& cell : e.kernel_table) EXPECT_EQ(cell.dim_kernel, cell.dim_c - cell.dim_an);
}

TEST(Enveloping, NeedsPassingCertificate) {
  const auto dual = dual_numbers(trivial());
  EXPECT_THROW(build_enveloping(dual, 1, 3, certify_tensor_idempotent(dual)), PreconditionError);
  const auto q = rationals_monoid(trivial());
  EXPECT_THROW(build_enveloping(q, 1, 3, TensorIdempotentCertificate{}), PreconditionError);
  EXPECT_THROW(enveloping(q, 0, 3), RangeError);
}

TEST(Enveloping, IdentityFunctorOnC2) {
  const auto i = std::make_shared<const MonoidData>(identity_monoid(c2conv()));
  const auto e = enveloping(i, 1, 3);
  for (const auto& c : e.certificate.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(BimoduleResolution, SplitAndExact) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto e = enveloping(rationals_monoid(trivial()), n, 4);
    const auto r = koszul_bimodule_resolution(e);
    for (const auto& c : r.certificate.checks) EXPECT_TRUE(c.pass) << n << ": " << c.name;
    EXPECT_EQ(r.koszul.complex.terms.size(), n + 1);
    EXPECT_EQ(r.koszul.complex.window, 3);
  }
}

TEST(BimoduleResolution, OneVariableCellsAreShortExact) {
  // 0 -> C -> C -> Q[t] -> 0 in each degree d: (d) -> (d+1) -> 1.
  const auto e = enveloping(rationals_monoid(trivial()), 1, 4);
  const auto r = koszul_bimodule_resolution(e);
  const auto& cx = r.koszul.complex;
  for (int d = 1; d <= 3; ++d) {
    EXPECT_EQ(cx.cell_basis(1, 0, d).size(), static_cast<std::size_t>(d));
    EXPECT_EQ(cx.cell_basis(0, 0, d).size(), static_cast<std::size_t>(d + 1));
    EXPECT_EQ(cx.cell_basis(-1, 0, d).size(), 1u);
  }
}

TEST(Hochschild, RegularCoefficientsOneVariable) {
  const auto e = enveloping(rationals_monoid(trivial()), 1, 5);
  const ModuleData m = regular_module(e.an.monoid);
  for (int p = 0; p <= 1; ++p) {
    const auto h = hochschild_cohomology(e, m, p);
    EXPECT_TRUE(h.report.pass());
    EXPECT_TRUE(h.regular_coefficients);
    EXPECT_EQ(h.report.series(p, 0), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  }
  const auto h2 = hochschild_cohomology(e, m, 2);
  for (auto v : h2.report.series(2, 0)) EXPECT_EQ(v, 0u);
  EXPECT_THROW(hochschild_cohomology(e, m, -1), RangeError);
}

TEST(Hochschild, BinomialDimensions) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto e = enveloping(rationals_monoid(trivial()), n, 4);
    const auto k = build_koszul(e.c.monoid, e.alpha, e.cap, e.alpha_names);
    const ModuleData m = regular_module(e.an.monoid);
    for (int p = 0; p <= static_cast<int>(n) + 1; ++p) {
      const auto h = hochschild_cohomology(e, k, m, p);
      EXPECT_TRUE(h.report.pass());
      for (int d = 0; d <= 3; ++d) {
        const std::size_t expect = binom(n, static_cast<std::size_t>(p)) * binom(n + d - 1, static_cast<std::size_t>(d));
        EXPECT_EQ(h.report.dim(p, 0, d), expect) << n << " " << p << " " << d;
      }
    }
  }
}

TEST(Hochschild, ResidueFieldCoefficients) {
  // HH^p(Q[t1,t2], Q) is Λ^p of a 2-dim space, concentrated in degree 0.
  const auto e = enveloping(rationals_monoid(trivial()), 2, 3);
  const auto reg = regular_module(e.an.monoid);
  const auto q = quotient_module(reg, generated_submodule(*e.an.monoid, {variable_element(e.an, 0), variable_element(e.an, 1)}));
  for (int p = 0; p <= 2; ++p) {
    const auto h = hochschild_cohomology(e, q.module, p);
    EXPECT_FALSE(h.regular_coefficients);
    EXPECT_EQ(h.report.dim(p, 0, 0), binom(2, static_cast<std::size_t>(p)));
    EXPECT_EQ(h.report.dim(p, 0, 1), 0u);
  }
}

TEST(Hochschild, IdentityFunctorOnC2) {
  const auto i = std::make_shared<const MonoidData>(identity_monoid(c2conv()));
  const auto e = enveloping(i, 1, 3);
  const ModuleData m = regular_module(e.an.monoid);
  for (int p = 0; p <= 2; ++p) {
    const auto h = hochschild_cohomology(e, m, p);
    EXPECT_TRUE(h.report.pass());
    for (int d = 0; d <= 2; ++d) {
      EXPECT_EQ(h.report.dim(p, 0, d), p <= 1 ? 2u : 0u);
      EXPECT_EQ(h.report.dim(p, 1, d), 0u);
    }
  }
}

TEST(Hochschild, WrongCoefficientsRejected) {
  const auto e = enveloping(rationals_monoid(trivial()), 1, 3);
  const auto other = polynomial_monoid(rationals_monoid(trivial()), 1, 3);
  EXPECT_THROW(hochschild_cohomology(e, regular_module(other.monoid), 0), PreconditionError);
}

}  // namespace
}  // namespace koszulcat
