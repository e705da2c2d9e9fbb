#pragma once

// Simultaneous triangularization of solvable linear Lie algebras over C,
// adjoint weights, the nilradical, and the classifiers built on weights
// (almost completely solvable, admissible, positive).
//
// Complex floating point stays inside this module. Subspaces returned from
// here are snapped to rationals and re-verified exactly.

#include "solvmetry/algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace solvmetry {

struct ToleranceConfig {
  double eps_rank = 1e-9;
  double eps_eig = 1e-8;
  long snap_denominator_bound = 1000000;

  /// Throws Error(InvalidInput) unless every field is positive.
  void check() const;
};

struct WeightSystem {
  std::size_t ambient_dim = 0;  ///< dimension of the module
  std::size_t acting_dim = 0;   ///< number of acting matrices
  /// Columns are the flag vectors; every acting matrix is upper triangular in this basis.
  Eigen::MatrixXcd flag_basis;
  /// weights[j](k) = diagonal entry j of acting matrix k in the flag basis.
  std::vector<Eigen::VectorXcd> weights;
  double tolerance = 0.0;

  /// lambda_j(sum_k x_k A_k)
  std::complex<double> evaluate(std::size_t j, const Eigen::VectorXd& x) const;
  /// flag_basis^{-1} a flag_basis
  Eigen::MatrixXcd in_flag_basis(const Eigen::MatrixXcd& a) const;
  /// Weights with duplicates (within eps on every coefficient) removed, in first-seen order.
  std::vector<Eigen::VectorXcd> distinct_weights(double eps) const;
};

/// Throws Error(NotSolvable) if the span is not solvable, Error(InvalidInput) if
/// it is not closed under the commutator, Error(DegenerateTolerance) if a rank
/// decision is ambiguous.
WeightSystem triangularize(const std::vector<Eigen::MatrixXd>& matrices, const ToleranceConfig& tol = {});
/// Same for exact input. Closure and solvability are then decided exactly, and
/// eigenvalue multiplicities come from an exact characteristic polynomial.
WeightSystem triangularize(const std::vector<QMat>& matrices, const ToleranceConfig& tol = {});

/// Triangularize {ad e_1, ..., ad e_n}; weights are covectors on L.
WeightSystem adjoint_weights(const LieAlgebra& L, const ToleranceConfig& tol = {});

/// Intersection of the kernels of all adjoint weights, exactly verified.
/// Throws Error(SnapFailure) if rationalization or verification fails.
Subspace nilradical(const LieAlgebra& L, const ToleranceConfig& tol = {});

struct AcsResult {
  bool acs = false;
  /// Element of V0 outside the nilradical: ad x has nonzero purely imaginary eigenvalues.
  std::optional<QVec> witness;
  /// Common kernel of the real parts of the weights.
  Subspace v0;
};
AcsResult is_almost_completely_solvable(const LieAlgebra& L, const ToleranceConfig& tol = {});

/// z(L) contained in [L, L], exactly.
bool is_admissible(const LieAlgebra& L);

struct PositivityResult {
  bool positive = false;
  /// LP optimizer, present when positive.
  std::optional<std::vector<double>> witness;
  /// Optimal value of min_j Re mu_j(x) over the unit cube.
  double margin = 0.0;
};
/// Throws Error(LpFailure) if the LP solver does not converge.
PositivityResult is_positive(const LieAlgebra& L, const ToleranceConfig& tol = {});

/// Eigenvalues of ad x with algebraic multiplicity, sorted by (real, imag).
std::vector<std::complex<double>> eigenvalues_ad(const LieAlgebra& L, const QVec& x);

/// Best rational approximation with denominator <= bound, if within tol of v.
std::optional<Rational> snap_rational(double v, long denominator_bound, double tol);

/// Rational basis of the common kernel of the rows of a real matrix, snapped and
/// in canonical form. Throws Error(SnapFailure) or Error(DegenerateTolerance).
std::vector<QVec> snapped_kernel(const Eigen::MatrixXd& rows, std::size_t n, const ToleranceConfig& tol);

}  // namespace solvmetry
