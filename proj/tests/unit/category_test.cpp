#include <gtest/gtest.h>

#include <map>

#include "../support/dense_oracle.hpp"
#include "../support/fixtures.hpp"
#include "koszulcat/day.hpp"
#include "koszulcat/errors.hpp"

namespace koszulcat {
namespace {

using testing::c2_regular;
using testing::c2conv;
using testing::Dense;
using testing::kQ;
using testing::oracle_rank;
using testing::to_dense;

bool has_violation(const ValidationReport& r, const std::string& axiom, const std::vector<std::string>& where) {
  for (const auto& v : r.violations) {
    if (v.axiom == axiom && v.where == where) return true;
  }
  return false;
}

// Brute-force coend dimension: all of ⊕ hom(y◇z, x) ⊗ F(y) ⊗ G(z) modulo the
// relations from every basis morphism, identities included, with dense rank.
std::size_t oracle_day_dim(const Representation& f, const Representation& g, std::size_t x) {
  const auto& c = *f.cat;
  const std::size_t n = c.num_objects();
  std::map<std::array<std::size_t, 5>, std::size_t> index;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t h = 0; h < c.hom_dim(c.diamond(y, z), x); ++h) {
        for (std::size_t b = 0; b < f.dims[y]; ++b) {
          for (std::size_t cc = 0; cc < g.dims[z]; ++cc) index[{y, z, h, b, cc}] = index.size();
        }
      }
    }
  }
  const std::size_t amb = index.size();
  Dense rel;
  // h∘(φ◇ψ) as a dense coordinate vector in hom(y◇z, x).
  auto precompose = [&](std::size_t y, std::size_t z, std::size_t y2, std::size_t z2, std::size_t h,
                        std::size_t phi, std::size_t psi) {
    const Dense dm = to_dense(c.diamond_matrix(y, z, y2, z2));
    const std::size_t src = c.diamond(y, z), mid = c.diamond(y2, z2);
    const Dense comp = to_dense(c.composition_matrix(src, mid, x));
    const std::size_t col = phi * c.hom_dim(z, z2) + psi;
    std::vector<mpq_class> out(c.hom_dim(src, x));
    for (std::size_t k = 0; k < c.hom_dim(src, mid); ++k) {
      if (sgn(dm[k][col]) == 0) continue;
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += dm[k][col] * comp[r][h * c.hom_dim(src, mid) + k];
    }
    return out;
  };
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t y2 = 0; y2 < n; ++y2) {
      for (std::size_t phi = 0; phi < c.hom_dim(y, y2); ++phi) {
        const Dense fa = to_dense(f.basis_action(y, y2, phi));
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t idz = 0;  // identity is basis element 0 in every fixture
          for (std::size_t h = 0; h < c.hom_dim(c.diamond(y2, z), x); ++h) {
            const auto hv = precompose(y, z, y2, z, h, phi, idz);
            for (std::size_t b = 0; b < f.dims[y]; ++b) {
              for (std::size_t cc = 0; cc < g.dims[z]; ++cc) {
                std::vector<mpq_class> row(amb);
                for (std::size_t k = 0; k < hv.size(); ++k) row[index.at({y, z, k, b, cc})] += hv[k];
                for (std::size_t b2 = 0; b2 < f.dims[y2]; ++b2) row[index.at({y2, z, h, b2, cc})] -= fa[b2][b];
                rel.push_back(row);
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t z2 = 0; z2 < n; ++z2) {
      for (std::size_t psi = 0; psi < c.hom_dim(z, z2); ++psi) {
        const Dense ga = to_dense(g.basis_action(z, z2, psi));
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t h = 0; h < c.hom_dim(c.diamond(y, z2), x); ++h) {
            const auto hv = precompose(y, z, y, z2, h, 0, psi);
            for (std::size_t b = 0; b < f.dims[y]; ++b) {
              for (std::size_t cc = 0; cc < g.dims[z]; ++cc) {
                std::vector<mpq_class> row(amb);
                for (std::size_t k = 0; k < hv.size(); ++k) row[index.at({y, z, k, b, cc})] += hv[k];
                for (std::size_t c2 = 0; c2 < g.dims[z2]; ++c2) row[index.at({y, z2, h, b, c2})] -= ga[c2][cc];
                rel.push_back(row);
              }
            }
          }
        }
      }
    }
  }
  return amb - (rel.empty() ? 0 : oracle_rank(rel));
}

TEST(Presentation, TrivialBackendIsValid) {
  const auto r = validate_presentation(*CategoryPresentation::trivial(kQ));
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checked, 0u);
}

TEST(Presentation, C2ConvolutionIsValid) {
  const auto r = validate_presentation(*c2conv());
  for (const auto& v : r.violations) ADD_FAILURE() << v.axiom;
  EXPECT_TRUE(r.ok());
}

TEST(Presentation, BrokenCompositionNamesTheTriple) {
  const auto r = validate_presentation(*testing::broken_composition());
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_violation(r, "associativity of composition", {"1", "1", "1", "1", "a", "a", "a"}) ||
              std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
                return v.axiom == "associativity of composition" && v.where.size() >= 3 &&
                       std::count(v.where.begin(), v.where.end(), "a") == 3;
              }));
}

TEST(Presentation, WrongSymmetryBreaksHexagon) {
  auto c = std::make_shared<CategoryPresentation>(*c2conv());
  // s_{e,g} = s_{g,e} = σ is involutive and natural, but the hexagon at
  // (g, e, g) then reads σ = σ∘σ.
  c->symmetry[1] = c->symmetry[2] = Matrix::unit_vector(kQ, 2, 1);
  const auto r = validate_presentation(*c);
  EXPECT_TRUE(has_violation(r, "hexagon identity", {"g", "e", "g"}));
  EXPECT_FALSE(has_violation(r, "symmetry is involutive", {"e", "g"}));
  c->symmetry[2] = Matrix::unit_vector(kQ, 2, 0);
  EXPECT_TRUE(has_violation(validate_presentation(*c), "symmetry is involutive", {"e", "g"}));
}

TEST(Presentation, ShapeErrorsAreReported) {
  auto c = std::make_shared<CategoryPresentation>(*c2conv());
  c->identity.pop_back();
  const auto r = validate_presentation(*c);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axiom, "shape");
}

TEST(Representation, IdentityFunctorIsValid) {
  for (const auto& c : {CategoryPresentation::trivial(kQ), c2conv()}) {
    const Representation i = identity_functor(c);
    EXPECT_TRUE(validate_representation(i).ok());
  }
  const Representation i = identity_functor(c2conv());
  EXPECT_EQ(i.dims, (std::vector<std::size_t>{2, 0}));
}

TEST(Representation, C2RegularIsValid) {
  EXPECT_TRUE(validate_representation(c2_regular(c2conv())).ok());
}

TEST(Representation, TransposedActionIsFlagged) {
  // Upper triangular 2x2 matrices as the endomorphisms of one object, basis
  // {id, e11, e12}; only the functor axioms are exercised here.
  auto cat = std::make_shared<CategoryPresentation>(*CategoryPresentation::trivial(kQ));
  cat->backend = Backend::FiniteStrict;
  cat->hom_basis = {{"id", "e11", "e12"}};
  MatrixBuilder comp(kQ, 3, 9);
  for (std::size_t f = 0; f < 3; ++f) comp.add(f, f, 1);        // id∘f
  for (std::size_t g = 1; g < 3; ++g) comp.add(g, g * 3, 1);    // g∘id
  comp.add(1, 1 * 3 + 1, 1);                                    // e11∘e11 = e11
  comp.add(2, 1 * 3 + 2, 1);                                    // e11∘e12 = e12
  cat->composition = {comp.build()};
  cat->identity = {Matrix::unit_vector(kQ, 3, 0)};
  Representation r;
  r.cat = cat;
  r.dims = {2};
  r.degrees = {{0, 0}};
  r.actions = {{Matrix::identity(kQ, 2), Matrix::from_rows(kQ, {{1, 0}, {0, 0}}),
                Matrix::from_rows(kQ, {{0, 1}, {0, 0}})}};
  EXPECT_TRUE(validate_representation(r).ok());
  r.actions[0][2] = r.actions[0][2].transpose();
  const auto report = validate_representation(r);
  EXPECT_TRUE(has_violation(report, "functor preserves composition", {"e12", "e11"}));
}

TEST(Representation, MismatchedShapeIsStructural) {
  Representation r = c2_regular(c2conv());
  r.actions[3][1] = Matrix::identity(kQ, 3);
  EXPECT_THROW(r.check_shapes(), DimensionMismatch);
  EXPECT_FALSE(validate_representation(r).ok());
}

TEST(Day, TrivialBackendMultipliesDimensions) {
  const auto c = CategoryPresentation::trivial(kQ);
  const Representation f = direct_power(identity_functor(c), 3);
  const Representation g = direct_power(identity_functor(c), 2);
  const DayTensor d = day_convolution(f, g);
  EXPECT_EQ(d.result.dims, (std::vector<std::size_t>{6}));
  EXPECT_TRUE(validate_representation(d.result).ok());
}

TEST(Day, IdentityTensorIdentityOnC2MatchesOracle) {
  const auto c = c2conv();
  const Representation i = identity_functor(c);
  const DayTensor d = day_convolution(i, i);
  for (std::size_t x = 0; x < 2; ++x) {
    EXPECT_EQ(d.result.dims[x], oracle_day_dim(i, i, x));
    EXPECT_EQ(d.result.dims[x], i.dims[x]);
  }
  EXPECT_TRUE(validate_representation(d.result).ok());
}

TEST(Day, UnitLawsOnC2) {
  const auto c = c2conv();
  const Representation i = identity_functor(c), f = c2_regular(c);
  const DayTensor i_f = day_convolution(i, f), f_i = day_convolution(f, i);
  for (std::size_t x = 0; x < 2; ++x) {
    EXPECT_EQ(i_f.result.dims[x], f.dims[x]);
    EXPECT_EQ(f_i.result.dims[x], f.dims[x]);
    EXPECT_EQ(i_f.result.dims[x], oracle_day_dim(i, f, x));
  }
  EXPECT_TRUE(certify_natural_iso(i_f.result, f, day_left_unitor(i_f), "left unitor").pass());
  EXPECT_TRUE(certify_natural_iso(f_i.result, f, day_right_unitor(f_i), "right unitor").pass());
}

TEST(Day, SymmetryOnC2) {
  const auto c = c2conv();
  const Representation f = c2_regular(c);
  const Representation g = direct_power(identity_functor(c), 2);
  const DayTensor fg = day_convolution(f, g), gf = day_convolution(g, f);
  EXPECT_EQ(fg.result.dims, gf.result.dims);
  for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(fg.result.dims[x], oracle_day_dim(f, g, x));
  EXPECT_TRUE(certify_natural_iso(fg.result, gf.result, day_symmetry(fg, gf), "symmetry").pass());
  const DayTensor ff = day_convolution(f, f);
  for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ(ff.result.dims[x], oracle_day_dim(f, f, x));
  EXPECT_TRUE(validate_representation(ff.result).ok());
}

TEST(Day, ThreadCountDoesNotChangeResult) {
  const auto c = c2conv();
  const Representation f = c2_regular(c);
  const DayTensor a = day_convolution(f, f, kInheritCap, Exec{1});
  const DayTensor b = day_convolution(f, f, kInheritCap, Exec{4});
  EXPECT_EQ(a.result.dims, b.result.dims);
  EXPECT_EQ(a.result.actions, b.result.actions);
}

}  // namespace
}  // namespace koszulcat
