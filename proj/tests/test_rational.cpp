#include "solvmetry/rational.hpp"
#include "solvmetry/spectral.hpp"

#include <gtest/gtest.h>

using namespace solvmetry;

namespace {

Rational r(long p, long q = 1) {
  Rational x{mpz_class(p), mpz_class(q)};
  x.canonicalize();
  return x;
}

}  // namespace

TEST(Rational, ParseAndPrintRoundTrip) {
  EXPECT_EQ(parse_rational("3/7"), r(3, 7));
  EXPECT_EQ(parse_rational("-4/6"), r(-2, 3));
  EXPECT_EQ(parse_rational("+5"), r(5));
  EXPECT_EQ(to_string(r(-2, 3)), "-2/3");
  EXPECT_EQ(to_string(r(4)), "4");
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, NullspaceAndRank) {
  QMat a = QMat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(a), 2u);
  const auto ker = nullspace(a);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero(a * ker[0]));
}

TEST(Rational, InverseAndDeterminant) {
  QMat a = QMat::from_rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(determinant(a), r(1));
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, QMat::identity(2));
  EXPECT_FALSE(inverse(QMat::from_rows({{1, 2}, {2, 4}}, 2)));
}

TEST(Rational, SolveReportsInconsistency) {
  QMat a = QMat::from_rows({{1, 1}, {2, 2}}, 2);
  EXPECT_FALSE(solve(a, {1, 3}));
  auto x = solve(a, {1, 2});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (QVec{1, 2}));
}

TEST(Rational, CharpolyOfJordanBlock) {
  // (x - 2)^2 (x + 1)
  QMat a = QMat::from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, -1}}, 3);
  const QPoly p = charpoly(a);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[3], r(1));
  EXPECT_EQ(p[2], r(-3));
  EXPECT_EQ(p[1], r(0));
  EXPECT_EQ(p[0], r(4));
  const auto f = squarefree_factorization(p);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(poly_degree(f[0]), 1u);
  EXPECT_EQ(poly_degree(f[1]), 1u);
  EXPECT_TRUE(poly_eval(p, a).is_zero());
}

TEST(Spectral, RotationBlockHasImaginaryPair) {
  QMat a = QMat::from_rows({{0, -1}, {1, 0}}, 2);
  const auto s = exact_spectrum(a);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0].value.real(), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[0].value.imag()), 1.0, 1e-14);
  EXPECT_TRUE(is_diagonalizable(a));
  EXPECT_FALSE(is_diagonalizable(QMat::from_rows({{0, 1}, {0, 0}}, 2)));
}

TEST(Spectral, DefectiveEigenvalueKeepsMultiplicity) {
  QMat a = QMat::from_rows({{3, 1, 0}, {0, 3, 1}, {0, 0, 3}}, 3);
  const auto s = exact_spectrum(a);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].multiplicity, 3u);
  EXPECT_NEAR(s[0].value.real(), 3.0, 1e-14);
}
