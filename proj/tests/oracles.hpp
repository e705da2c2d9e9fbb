#pragma once

// Independent double-precision reference computations used by the tests.
// They read only structure constants and never call the library's solvers.

#include "solvmetry/algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline Eigen::MatrixXd to_double(const solvmetry::QMat& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_d();
  return m;
}

/// ad x with entries (ad x)_{kj} = sum_i x_i c[i][j][k].
inline Eigen::MatrixXd ad(const solvmetry::LieAlgebra& L, const Eigen::VectorXd& x) {
  const auto n = static_cast<Eigen::Index>(L.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) m(k, j) += x(i) * L.c(i, j, k).get_d();
  return m;
}

inline Eigen::VectorXd to_double(const solvmetry::QVec& v) {
  Eigen::VectorXd x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x(i) = v[i].get_d();
  return x;
}

/// Dimension of the derivation algebra from D ad(x) - ad(x) D = ad(D x), solved by SVD.
inline int derivation_dimension(const solvmetry::LieAlgebra& L) {
  const int n = static_cast<int>(L.dim());
  if (n == 0) return 0;
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n * n * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Unit(n, i);
    const Eigen::MatrixXd a = ad(L, e);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c, ++row) {
        // (D a - a D)(r, c) - ad(D e_i)(r, c); unknown D(p, q) at column p*n+q
        for (int m = 0; m < n; ++m) {
          sys(row, r * n + m) += a(m, c);
          sys(row, m * n + c) -= a(r, m);
        }
        for (int p = 0; p < n; ++p) sys(row, p * n + i) -= L.c(p, c, r).get_d();
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-9) ++rank;
  return n * n - rank;
}

inline std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return out;
}

/// Every element of a is within eps of some element of b.
inline bool covered(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b, double eps) {
  for (const auto& x : a) {
    bool hit = false;
    for (const auto& y : b) hit = hit || std::abs(x - y) <= eps;
    if (!hit) return false;
  }
  return true;
}

/// (positive, negative) eigenvalue counts of tr(ad x ad y), computed in doubles.
inline std::pair<int, int> killing_signature(const solvmetry::LieAlgebra& L) {
  const auto n = static_cast<Eigen::Index>(L.dim());
  std::vector<Eigen::MatrixXd> ads;
  for (Eigen::Index i = 0; i < n; ++i) ads.push_back(ad(L, Eigen::VectorXd::Unit(n, i)));
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = (ads[i] * ads[j]).trace();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
  int pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (es.eigenvalues()(i) > 1e-9) ++pos;
    if (es.eigenvalues()(i) < -1e-9) ++neg;
  }
  return {pos, neg};
}

inline solvmetry::QVec random_rational(std::mt19937_64& rng, std::size_t n, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  solvmetry::QVec v(n);
  for (auto& x : v) {
    x = solvmetry::Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return v;
}

}  // namespace oracle
