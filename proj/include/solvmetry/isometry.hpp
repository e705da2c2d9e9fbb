#pragma once

// LR-decompositions s = s1 + s2, the recognizable Iwasawa algebras, extension
// of the s1-action on s2 to a representation of g1, assembly of the connected
// isometry algebra g1 + d0(s2) + s2, and the verdicts built on top of it.

#include "solvmetry/metric.hpp"
#include "solvmetry/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solvmetry {

enum class SemisimpleKind { Trivial, Sl2R, SoN1 };

/// g1 with basis [iwasawa..., compact...]: the first iwasawa.dim() basis
/// vectors span a + n, the rest span the maximal compact subalgebra.
struct SemisimpleDescriptor {
  SemisimpleKind kind = SemisimpleKind::Trivial;
  std::size_t n = 0;  ///< so(n,1): n; sl2R: 2; trivial: 0
  LieAlgebra algebra;
  Subspace iwasawa;
  Subspace max_compact;

  /// "trivial", "sl2R" or "so(n,1)".
  std::string label() const;
};

SemisimpleDescriptor trivial_descriptor();
/// Basis [X = H/2, Y = E, K = E - F].
SemisimpleDescriptor sl2r_descriptor();
/// Basis [A, N_1, ..., N_{n-1}, rotations R_ij]; [A, N_i] = N_i. Needs n >= 2.
SemisimpleDescriptor so_n1_descriptor(std::size_t n);

struct IwasawaMatch {
  SemisimpleDescriptor descriptor;
  /// dim g1 x dim s1: an injective homomorphism of s1 onto descriptor.iwasawa.
  QMat embedding;
};
/// nullopt when s1 is not one of the recognizable shapes.
std::optional<IwasawaMatch> recognize_iwasawa(const LieAlgebra& s1);

/// rho on the whole g1 basis, given rho on the Iwasawa basis (square matrices
/// on s2). Throws Error(NoExtension) or Error(AmbiguousExtension).
std::vector<QMat> extend_representation(const SemisimpleDescriptor& g1, const std::vector<QMat>& iwasawa_action);

struct LRDecomposition {
  MetricLieAlgebra base;
  Subspace s1;
  Subspace s2;
  SemisimpleDescriptor descriptor;
  /// dim g1 x dim s1, from recognize_iwasawa applied to s1 in its own basis.
  QMat embedding;
  /// One matrix per g1 basis vector, acting on s2 coordinates.
  std::vector<QMat> rho;

  bool is_trivial() const { return s1.dim() == 0; }
  /// Vector of s mapped to the Iwasawa basis vector i of g1.
  QVec iwasawa_preimage(std::size_t i) const;
};

/// Checks s = s1 (+) s2, s2 ideal, s1 recognized, and extends the action.
/// Throws Error(PreconditionFailed), Error(NoExtension) or Error(AmbiguousExtension).
LRDecomposition make_lr(const MetricLieAlgebra& M, const Subspace& s1, const Subspace& s2);
/// s1 = 0, s2 = s.
LRDecomposition trivial_lr(const MetricLieAlgebra& M);

/// Every (rho x ad)(k), k in the constructed maximal compact, is skew for the
/// inner product carried over from s2 + s1. Exact.
bool check_suitable(const LRDecomposition& lr);

struct LrSearch {
  /// Suitable decompositions, by dim s1 descending; the trivial one is always last.
  std::vector<LRDecomposition> decompositions;
  /// Upper bound on dim s1 over all LR-decompositions, when one could be proved.
  std::optional<std::size_t> dim_bound;
  /// True when no LR-decomposition can have larger s1 than the first entry.
  bool complete = false;
  /// Candidates that were built but rejected, with the reason.
  std::vector<std::string> rejected;
};
/// Throws Error(NotSolvable).
LrSearch enumerate_lr(const MetricLieAlgebra& M, const ToleranceConfig& tol = {});

/// Skew derivations vanishing on s1 and preserving s2.
DerivationSpace d0_space(const LRDecomposition& lr);

/// total has basis [g1..., d0..., s2...].
struct IsometryAlgebra {
  LieAlgebra total;
  SemisimpleDescriptor descriptor;
  Subspace g1;
  Subspace d0;
  Subspace s2;
  /// k(g1) + d0
  Subspace isotropy;
  /// Iwasawa part of g1 plus s2; represents total / isotropy.
  Subspace complement;
  /// Inner product on `complement`, in its basis order.
  QMat transferred_gram;
  /// dim total x dim s: the original solvable algebra inside total.
  QMat solvable_embedding;
};
/// Throws Error(PreconditionFailed) unless check_suitable holds, and
/// Error(InternalCheck) if the assembled algebra fails validate or skewness.
IsometryAlgebra assemble_isometry(const LRDecomposition& lr);

struct StronglySolvableFlag {
  /// true, or nullopt when the sufficient conditions do not apply.
  std::optional<bool> value;
  std::string basis;
  bool acs = false;
  bool admissible = false;
};
StronglySolvableFlag strongly_solvable_flag(const MetricLieAlgebra& M, const ToleranceConfig& tol = {});

/// iwasawa + radical(g) + h == g. Throws Error(PreconditionFailed) naming the
/// failed clause if h is not a subalgebra, iwasawa is not a solvable
/// subalgebra, or iwasawa meets the radical.
bool transitive_solvable_test(const LieAlgebra& g, const Subspace& h, const Subspace& iwasawa);

enum class Rigidity { Symmetric, NoFiniteVolumeQuotient, Inconclusive };
std::string to_string(Rigidity r);

struct RigidityVerdict {
  Rigidity verdict = Rigidity::Inconclusive;
  std::string reason;
  bool acs = false;
  std::optional<bool> positive;
  std::optional<int> standard_position_iterations;
  std::optional<bool> search_complete;
  std::optional<std::string> g1;
  std::optional<std::size_t> s1_dim;
  std::optional<std::size_t> total_dim;
  std::optional<bool> total_unimodular;
};
RigidityVerdict rigidity_verdict(const MetricLieAlgebra& M, const ToleranceConfig& tol = {});

}  // namespace solvmetry
