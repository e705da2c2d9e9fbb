#include "solvmetry/catalog.hpp"
#include "solvmetry/errors.hpp"
#include "solvmetry/spectral.hpp"
#include "solvmetry/weights.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace solvmetry;

namespace {

std::string param_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string s = info.param;
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

}  // namespace

class SolvableEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(SolvableEntry, FlagTriangularizesEveryAdMatrix) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const WeightSystem ws = adjoint_weights(L);
  ASSERT_EQ(ws.weights.size(), L.dim());
  for (std::size_t k = 0; k < L.dim(); ++k) {
    const Eigen::MatrixXcd t = ws.in_flag_basis(oracle::to_double(L.ad_basis(k)).cast<std::complex<double>>());
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
      for (Eigen::Index j = 0; j < i; ++j) EXPECT_LT(std::abs(t(i, j)), 1e-8);
      EXPECT_LT(std::abs(t(i, i) - ws.weights[i](k)), 1e-8);
    }
  }
}

TEST_P(SolvableEntry, WeightsAreLinear) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const WeightSystem ws = adjoint_weights(L);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const QVec x = oracle::random_rational(rng, L.dim());
    const Eigen::MatrixXcd t = ws.in_flag_basis(oracle::to_double(L.ad(x)).cast<std::complex<double>>());
    for (std::size_t j = 0; j < L.dim(); ++j)
      EXPECT_LT(std::abs(t(j, j) - ws.evaluate(j, oracle::to_double(x))), 1e-8);
  }
}

TEST_P(SolvableEntry, NilradicalMatchesStoredSubspace) {
  const auto e = catalog_entry(GetParam());
  const Subspace nil = nilradical(e.algebra.algebra());
  ASSERT_TRUE(e.expected_nilradical);
  EXPECT_EQ(nil, *e.expected_nilradical);
  EXPECT_TRUE(nil.contains(derived_subalgebra(e.algebra.algebra())));
}

TEST_P(SolvableEntry, EigenvaluesShiftByNilradical) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const Subspace nil = nilradical(L);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const QVec x = oracle::random_rational(rng, L.dim());
    QVec y = x;
    const QVec c = oracle::random_rational(rng, nil.dim());
    for (std::size_t i = 0; i < nil.dim(); ++i) y = vaxpy(y, c[i], nil[i]);
    const auto a = eigenvalues_ad(L, x);
    const auto b = eigenvalues_ad(L, y);
    EXPECT_TRUE(oracle::covered(a, b, 1e-8));
    EXPECT_TRUE(oracle::covered(b, a, 1e-8));
  }
}

TEST_P(SolvableEntry, PositiveImpliesNonUnimodular) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  if (is_unimodular(L) && nilradical(L).dim() > 0) EXPECT_FALSE(is_positive(L).positive);
}

TEST_P(SolvableEntry, DiagonalizableDerivedElementsVanish) {
  const LieAlgebra L = catalog(GetParam()).algebra();
  const Subspace d = derived_subalgebra(L);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const QVec c = oracle::random_rational(rng, d.dim());
    QVec y = zero_vector(L.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) y = vaxpy(y, c[i], d[i]);
    if (is_diagonalizable(L.ad(y))) EXPECT_TRUE(L.ad(y).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, SolvableEntry, ::testing::ValuesIn(solvable_catalog_names()), param_name);

TEST(Weights, Aff1AdX) {
  const LieAlgebra L = catalog("aff1").algebra();
  const WeightSystem ws = triangularize(std::vector<QMat>{L.ad_basis(0)});
  ASSERT_EQ(ws.weights.size(), 2u);
  EXPECT_NEAR(ws.weights[0](0).real(), 0.0, 1e-12);
  EXPECT_NEAR(ws.weights[1](0).real(), 1.0, 1e-12);
}

TEST(Weights, Aff1AdjointWeights) {
  const WeightSystem ws = adjoint_weights(catalog("aff1").algebra());
  std::vector<double> x_values;
  for (const auto& w : ws.weights) {
    EXPECT_NEAR(std::abs(w(1)), 0.0, 1e-12);
    x_values.push_back(w(0).real());
  }
  std::sort(x_values.begin(), x_values.end());
  EXPECT_NEAR(x_values[0], 0.0, 1e-12);
  EXPECT_NEAR(x_values[1], 1.0, 1e-12);
}

TEST(Weights, ZeroMatricesGiveIdentityFlag) {
  const WeightSystem ws = triangularize(std::vector<Eigen::MatrixXd>{Eigen::MatrixXd::Zero(3, 3)});
  EXPECT_TRUE(ws.flag_basis.isApprox(Eigen::MatrixXcd::Identity(3, 3)));
  for (const auto& w : ws.weights) EXPECT_EQ(std::abs(w(0)), 0.0);
}

TEST(Weights, OscillatorHasImaginaryWeightsOnT) {
  const WeightSystem ws = adjoint_weights(catalog("oscillator4").algebra());
  int plus = 0, minus = 0;
  for (const auto& w : ws.weights) {
    if (std::abs(w(0) - std::complex<double>(0, 1)) < 1e-10) ++plus;
    if (std::abs(w(0) - std::complex<double>(0, -1)) < 1e-10) ++minus;
  }
  EXPECT_EQ(plus, 1);
  EXPECT_EQ(minus, 1);
}

TEST(Weights, DiagonalAction) {
  const WeightSystem ws = adjoint_weights(catalog("diag_solv:1,2").algebra());
  std::vector<double> v;
  for (const auto& w : ws.weights) v.push_back(w(0).real());
  std::sort(v.begin(), v.end());
  EXPECT_NEAR(v[1], 1.0, 1e-12);
  EXPECT_NEAR(v[2], 2.0, 1e-12);
}

TEST(Weights, DoublePathHandlesJordanBlock) {
  Eigen::MatrixXd a(3, 3);
  a << 1, 1, 0, 0, 1, 0, 0, 0, 2;
  const WeightSystem ws = triangularize(std::vector<Eigen::MatrixXd>{a});
  const Eigen::MatrixXcd t = ws.in_flag_basis(a.cast<std::complex<double>>());
  EXPECT_LT(std::abs(t(1, 0)) + std::abs(t(2, 0)) + std::abs(t(2, 1)), 1e-8);
}

TEST(Weights, NonSolvableSpanRejected) {
  const LieAlgebra L = catalog("sl2").algebra();
  std::vector<QMat> ads{L.ad_basis(0), L.ad_basis(1), L.ad_basis(2)};
  EXPECT_THROW(
      {
        try {
          triangularize(ads);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::NotSolvable);
          throw;
        }
      },
      Error);
}

TEST(Weights, NilradicalRejectsNonSolvable) { EXPECT_THROW(nilradical(catalog("sl2").algebra()), Error); }

TEST(Classifiers, Acs) {
  EXPECT_TRUE(is_almost_completely_solvable(catalog("heisenberg3").algebra()).acs);
  EXPECT_TRUE(is_almost_completely_solvable(catalog("h2xR").algebra()).acs);
  const auto osc = is_almost_completely_solvable(catalog("oscillator4").algebra());
  EXPECT_FALSE(osc.acs);
  ASSERT_TRUE(osc.witness);
  EXPECT_EQ(*osc.witness, (QVec{1, 0, 0, 0}));
  EXPECT_TRUE(is_almost_completely_solvable(catalog("spiral3").algebra()).acs);
}

TEST(Classifiers, Admissible) {
  EXPECT_TRUE(is_admissible(catalog("heisenberg3").algebra()));
  EXPECT_TRUE(is_admissible(catalog("aff1").algebra()));
  EXPECT_FALSE(is_admissible(catalog("h2xR").algebra()));
}

TEST(Classifiers, Positive) {
  const auto h = is_positive(catalog("hyperbolic:3").algebra());
  EXPECT_TRUE(h.positive);
  ASSERT_TRUE(h.witness);
  EXPECT_NEAR((*h.witness)[0], 1.0, 1e-12);
  EXPECT_NEAR((*h.witness)[1], 0.0, 1e-12);
  EXPECT_FALSE(is_positive(catalog("heisenberg3").algebra()).positive);
  EXPECT_FALSE(is_positive(catalog("diag_solv:1,-1").algebra()).positive);
  EXPECT_TRUE(is_positive(catalog("spiral3").algebra()).positive);
  EXPECT_FALSE(is_positive(catalog("aff1_std4").algebra()).positive);
}

TEST(Snap, ContinuedFractions) {
  EXPECT_EQ(*snap_rational(0.5, 1000000, 1e-9), Rational(1, 2));
  EXPECT_EQ(*snap_rational(-2.0 / 3.0 + 1e-12, 1000000, 1e-9), Rational(-2, 3));
  EXPECT_FALSE(snap_rational(std::sqrt(2.0), 100, 1e-9));
}
