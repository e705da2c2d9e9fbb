#pragma once

// Semidirect products by spaces of derivations, the standard modification
// inside f = N_l(s) x| s, iteration to standard position, and the exact
// normal-modification certificate.

#include "solvmetry/metric.hpp"

#include <string>
#include <vector>

namespace solvmetry {

/// total has basis [D_1, ..., D_d, e_1, ..., e_n].
struct SemidirectProduct {
  LieAlgebra total;
  DerivationSpace derivations;
  Subspace d_part;
  Subspace s_part;

  std::size_t d() const { return derivations.dim(); }
  std::size_t n() const { return total.dim() - derivations.dim(); }
  /// (D-coefficients, s-coordinates) -> vector of total.
  QVec embed(const QVec& d_coeffs, const QVec& s_coords) const;
  QVec embed_s(const QVec& s_coords) const;
};

/// Throws Error(PreconditionFailed) if the derivations are dependent, not closed
/// under the commutator, or the assembled algebra fails validate.
SemidirectProduct semidirect(const DerivationSpace& D, const LieAlgebra& L);

struct ModificationResult {
  SemidirectProduct host;
  /// Basis v_i = phi(e_i) + e_i, indexed like the basis of s.
  Subspace s_prime;
  /// d x n; column i holds the coefficients of phi(e_i) in the derivation basis.
  QMat phi;
  /// s_prime in the basis v_i with the Gram matrix of s (v_i -> e_i is an isometry).
  MetricLieAlgebra induced_metric;

  bool is_trivial() const { return phi.is_zero(); }
};

/// Throws Error(NotSolvable) for non-solvable input and Error(SelectionAmbiguous)
/// if the Killing annihilator of the derivation part is not a complement to it.
ModificationResult standard_modification(const MetricLieAlgebra& M);

struct Certificate {
  bool phi_abelian = true;
  bool derived_in_kernel = true;
  bool normalizes = true;
  bool subalgebra = true;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};
/// Exact check of the normal-modification conditions.
Certificate normal_modification_certificate(const ModificationResult& R);

struct StandardPosition {
  /// The second modification; its induced metric algebra is s''.
  ModificationResult result;
  /// 1 when the second modification is trivial, else 2.
  int iterations = 0;
  bool fixed_point_verified = false;
  /// All three applications, in order.
  std::vector<ModificationResult> steps;

  const MetricLieAlgebra& algebra() const { return result.induced_metric; }
};
/// Throws Error(FixedPointFailure) if a third modification still moves the algebra.
StandardPosition standard_position(const MetricLieAlgebra& M);

/// z(N_l(s)) x| s.
SemidirectProduct r_algebra(const MetricLieAlgebra& M);

struct CenterContainment {
  /// phi of the first step takes values in z(N_l(s)), so s' sits inside r.
  bool s_prime_in_r = false;
  /// Central elements of s'' have no derivation part in the second host.
  bool center_in_s_prime = false;
  /// z(s'') inside [r, r], as subspaces of f = N_l(s) x| s.
  bool holds = false;
  Subspace center_in_f;
  Subspace r_derived;
};
/// z(s'') against [r, r] with s'' carried back into f through both modification steps.
CenterContainment center_in_r_derived(const MetricLieAlgebra& M, const StandardPosition& sp);

}  // namespace solvmetry
