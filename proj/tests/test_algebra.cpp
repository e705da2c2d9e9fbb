#include "solvmetry/algebra.hpp"
#include "solvmetry/catalog.hpp"
#include "solvmetry/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace solvmetry;

class CatalogAlgebra : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogAlgebra, SatisfiesJacobiExactly) {
  const auto e = catalog_entry(GetParam());
  EXPECT_TRUE(validate(e.algebra.algebra()).empty());
}

TEST_P(CatalogAlgebra, KillingFormIsAdInvariant) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const BilinearForm k = killing_form(L);
  const std::size_t n = L.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const QVec ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
        EXPECT_EQ(k(L.bracket(ex, ey), ez), -k(ey, L.bracket(ex, ez)));
      }
}

TEST_P(CatalogAlgebra, KillingFormMatchesTraceOracle) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const BilinearForm k = killing_form(L);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const auto ai = oracle::ad(L, Eigen::VectorXd::Unit(L.dim(), i));
      const auto aj = oracle::ad(L, Eigen::VectorXd::Unit(L.dim(), j));
      EXPECT_NEAR(k.matrix()(i, j).get_d(), (ai * aj).trace(), 1e-12);
    }
}

TEST_P(CatalogAlgebra, CenterAndDerivedAreIdeals) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const Subspace z = center(L);
  const Subspace d = derived_subalgebra(L);
  EXPECT_TRUE(is_ideal(L, z));
  EXPECT_TRUE(is_ideal(L, d));
  for (const auto& v : z.basis()) EXPECT_TRUE(L.ad(v).is_zero());
  for (const auto& s : derived_series(L)) EXPECT_TRUE(is_ideal(L, s));
}

INSTANTIATE_TEST_SUITE_P(All, CatalogAlgebra, ::testing::ValuesIn(catalog_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return s;
                         });

TEST(LieAlgebra, FromBracketsFillsAntisymmetry) {
  const LieAlgebra L = catalog("aff1").algebra();
  EXPECT_EQ(L.c(0, 1, 1), 1);
  EXPECT_EQ(L.c(1, 0, 1), -1);
}

TEST(LieAlgebra, ValidateReportsJacobiFailure) {
  // [e0,e1]=e1, [e0,e2]=e2, [e1,e2]=e0 breaks Jacobi.
  const auto L = LieAlgebra::from_brackets("bad", 3, {{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}});
  const auto v = validate(L);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, Violation::Kind::Jacobi);
}

TEST(LieAlgebra, ValidateReportsAntisymmetryFailure) {
  std::vector<Rational> c(8);
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = 1;
  const LieAlgebra L("sym", 2, c);
  const auto v = validate(L);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, Violation::Kind::Antisymmetry);
}

TEST(LieAlgebra, StructureFlags) {
  EXPECT_TRUE(structure_flags(catalog("heisenberg3").algebra()).nilpotent);
  EXPECT_FALSE(structure_flags(catalog("aff1").algebra()).nilpotent);
  EXPECT_TRUE(structure_flags(catalog("aff1").algebra()).solvable);
  EXPECT_FALSE(structure_flags(catalog("sl2").algebra()).solvable);
  EXPECT_TRUE(structure_flags(catalog("abelian:3").algebra()).abelian);
}

TEST(LieAlgebra, HeisenbergCenterIsDerived) {
  const LieAlgebra L = catalog("heisenberg3").algebra();
  EXPECT_EQ(center(L), Subspace(3, {{0, 0, 1}}));
  EXPECT_EQ(derived_subalgebra(L), center(L));
}

TEST(LieAlgebra, Unimodularity) {
  EXPECT_TRUE(is_unimodular(catalog("heisenberg3").algebra()));
  EXPECT_TRUE(is_unimodular(catalog("oscillator4").algebra()));
  EXPECT_FALSE(is_unimodular(catalog("aff1").algebra()));
  EXPECT_TRUE(is_unimodular(catalog("diag_solv:1,-1").algebra()));
}

TEST(LieAlgebra, OscillatorKillingForm) {
  const BilinearForm k = killing_form(catalog("oscillator4").algebra());
  EXPECT_EQ(k.matrix()(0, 0), -2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != 0 || j != 0) EXPECT_EQ(k.matrix()(i, j), 0);
}

TEST(LieAlgebra, KillingSignatures) {
  const auto s = signature(killing_form(catalog("sl2").algebra()));
  EXPECT_EQ(s.positive, 2u);
  EXPECT_EQ(s.negative, 1u);
  const auto t = signature(killing_form(catalog("so3").algebra()));
  EXPECT_EQ(t.negative, 3u);
}

TEST(LieAlgebra, QuotientByCenter) {
  const LieAlgebra L = catalog("heisenberg3").algebra();
  const Quotient q = quotient(L, center(L));
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(structure_flags(q.algebra).abelian);
  EXPECT_THROW(quotient(L, Subspace(3, {{1, 0, 0}})), Error);
}

TEST(LieAlgebra, RadicalOfSemidirect) {
  const LieAlgebra L = catalog("sl2_plus_R2").algebra();
  EXPECT_EQ(radical(L), Subspace(5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
  EXPECT_EQ(radical(catalog("sl2").algebra()).dim(), 0u);
  EXPECT_EQ(radical(catalog("aff1").algebra()).dim(), 2u);
}

TEST(LieAlgebra, FromMatrixBasisRejectsNonClosedSpan) {
  QMat e(2, 2), f(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  EXPECT_THROW(LieAlgebra::from_matrix_basis("ef", {e, f}), Error);
  QMat h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  const auto L = LieAlgebra::from_matrix_basis("sl2", {h, e, f});
  EXPECT_EQ(L, catalog("sl2").algebra());
}

TEST(Subspace, SumIntersectionComplement) {
  const Subspace a(3, {{1, 0, 0}, {0, 1, 0}});
  const Subspace b(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ((a + b).dim(), 3u);
  EXPECT_EQ(intersection(a, b), Subspace(3, {{0, 1, 0}}));
  EXPECT_EQ(complement_in(intersection(a, b), a).size(), 1u);
  EXPECT_THROW(Subspace(3, {{1, 0, 0}, {2, 0, 0}}), Error);
}

TEST(Subspace, Orthocomplement) {
  const BilinearForm g(QMat::from_rows({{1, 1}, {1, 2}}, 2));
  const auto oc = orthocomplement(Subspace(2, {{1, 0}}), Subspace::whole(2), g);
  ASSERT_EQ(oc.space.dim(), 1u);
  EXPECT_EQ(g({1, 0}, oc.space[0]), 0);
  EXPECT_EQ(oc.intersection_dim, 0u);
}
