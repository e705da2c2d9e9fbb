#pragma once

// Inner products on Lie algebras: metric adjoints, derivations and skew
// derivations, central sectional curvature and the flat-factor splitting.

#include "solvmetry/algebra.hpp"

#include <vector>

namespace solvmetry {

/// A Lie algebra with a positive-definite Gram matrix (the left-invariant
/// metric at the identity). Positivity is certified by exact leading minors.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  /// Throws Error(InvalidInput) if the Gram matrix is not symmetric positive definite.
  MetricLieAlgebra(LieAlgebra algebra, QMat gram);
  /// Identity Gram matrix.
  explicit MetricLieAlgebra(LieAlgebra algebra);

  const LieAlgebra& algebra() const& { return algebra_; }
  LieAlgebra algebra() && { return std::move(algebra_); }
  const QMat& gram() const& { return gram_; }
  QMat gram() && { return std::move(gram_); }
  std::size_t dim() const { return algebra_.dim(); }
  Rational inner(const QVec& x, const QVec& y) const { return vdot(x, gram_ * y); }

  friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.gram_ == b.gram_;
  }

 private:
  LieAlgebra algebra_;
  QMat gram_;
};

bool is_positive_definite(const QMat& gram);

/// A linear space of derivations, stored as n x n matrices acting on column vectors.
struct DerivationSpace {
  std::size_t ambient_dim = 0;
  std::vector<QMat> basis;

  std::size_t dim() const { return basis.size(); }
  /// Coefficients of `d` in the basis, or nullopt if outside the span.
  std::optional<QVec> coordinates(const QMat& d) const;
  QMat combination(const QVec& coeffs) const;
};

bool is_derivation(const LieAlgebra& L, const QMat& d);
bool is_skew(const QMat& gram, const QMat& a);

/// G^{-1} A^T G.
QMat metric_adjoint(const QMat& gram, const QMat& a);
QMat metric_adjoint(const MetricLieAlgebra& M, const QMat& a);

DerivationSpace derivation_algebra(const LieAlgebra& L);
/// Derivations D with G D + D^T G = 0; closure under the commutator is verified.
DerivationSpace skew_derivations(const MetricLieAlgebra& M);
/// Elements of the space commuting with all of it.
DerivationSpace center_of(const DerivationSpace& D);
/// True if every commutator of basis elements lies in the span.
bool is_closed_under_commutator(const DerivationSpace& D);

/// 1/4 |(ad y)^* x|^2 for central x. Throws Error(PreconditionFailed) if x is not central.
Rational central_sectional_curvature(const MetricLieAlgebra& M, const QVec& x, const QVec& y);

struct FlatSplit {
  Subspace t;
  Subspace u;  ///< center minus its part in [s,s]: the Euclidean factor
  bool t_admissible = false;
};
/// s = t (+) u orthogonally, with u = z(s) ∩ [s,s]^perp. Ideal properties are checked exactly.
FlatSplit flat_factor_split(const MetricLieAlgebra& M);

}  // namespace solvmetry
