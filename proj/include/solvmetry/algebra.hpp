#pragma once

// Lie algebras given by exact structure constants, and the subspace calculus
// (spans, ideals, centers, series, Killing forms, quotients) built on them.

#include "solvmetry/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace solvmetry {

/// Ordered, linearly independent rational basis of a subspace of Q^n.
/// The ambient algebra is tracked by dimension only.
class Subspace {
 public:
  Subspace() = default;
  /// Throws Error(InvalidInput) if the vectors are dependent or of the wrong length.
  Subspace(std::size_t ambient_dim, std::vector<QVec> basis);

  /// Span of arbitrary vectors, with the canonical (RREF) basis.
  static Subspace span(std::size_t ambient_dim, const std::vector<QVec>& vecs);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const& { return basis_; }
  std::vector<QVec> basis() && { return std::move(basis_); }
  const QVec& operator[](std::size_t i) const { return basis_[i]; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis, or nullopt if v is outside the span.
  std::optional<QVec> coordinates(const QVec& v) const;
  /// ambient_dim x dim, columns are the basis vectors.
  QMat matrix() const;
  Subspace canonical() const;

  /// Span equality (bases may differ).
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  QVec reduce(QVec v) const;

  std::size_t ambient_dim_ = 0;
  std::vector<QVec> basis_;
  // RREF rows of the span and their pivot columns, for membership tests.
  std::vector<QVec> echelon_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Vectors of `outer` completing a basis of `inner` (inner must lie in outer),
/// chosen greedily from outer's basis order.
std::vector<QVec> complement_in(const Subspace& inner, const Subspace& outer);

/// Symmetric bilinear form on Q^n.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws Error(InvalidInput) unless the matrix is square and exactly symmetric.
  explicit BilinearForm(QMat matrix);

  std::size_t dim() const { return matrix_.rows(); }
  const QMat& matrix() const { return matrix_; }
  Rational operator()(const QVec& x, const QVec& y) const;

 private:
  QMat matrix_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Inertia of a symmetric form by exact congruence diagonalization.
Signature signature(const BilinearForm& form);

/// A real Lie algebra with structure constants c[i][j][k] = coefficient of e_k in [e_i, e_j].
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Takes the dense tensor in (i, j, k) row-major order. No validation; see validate().
  LieAlgebra(std::string name, std::size_t dim, std::vector<Rational> constants);

  struct Bracket {
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Rational coeff;
  };
  /// Builds from [e_i, e_j] = sum coeff e_k entries, filling in antisymmetry.
  static LieAlgebra from_brackets(std::string name, std::size_t dim, const std::vector<Bracket>& brackets);
  static LieAlgebra abelian(std::size_t dim, std::string name = "abelian");
  /// Structure constants of a basis of matrices closed under the commutator.
  /// Throws Error(InvalidInput) if the span is not closed or the basis is dependent.
  static LieAlgebra from_matrix_basis(std::string name, const std::vector<QMat>& basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Rational>& constants() const { return c_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  QVec bracket(const QVec& x, const QVec& y) const;
  QVec bracket_basis(std::size_t i, std::size_t j) const;
  /// Column j of ad x is [x, e_j].
  QMat ad(const QVec& x) const;
  QMat ad_basis(std::size_t i) const;

  LieAlgebra renamed(std::string name) const;

  /// Same dimension and identical structure constants; names are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  void check_length(const QVec& v) const;

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  std::size_t l;  // output index for Jacobi; unused for antisymmetry
  Rational value;  // c[i][j][k] + c[j][i][k], or the Jacobi sum
};

/// Every violated antisymmetry or Jacobi identity; empty iff L is a Lie algebra.
std::vector<Violation> validate(const LieAlgebra& L);
std::string describe(const Violation& v);

/// span of [a, b] for a in A, b in B.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);
Subspace derived_subalgebra(const LieAlgebra& L);
/// L = g0, g1 = [g0, g0], ... until two consecutive terms agree (the last term repeats once).
std::vector<Subspace> derived_series(const LieAlgebra& L);
/// L = g1, g2 = [L, g1], ... until stabilization, same convention.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

struct StructureFlags {
  bool solvable = false;
  bool nilpotent = false;
  bool abelian = false;
};
StructureFlags structure_flags(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
BilinearForm killing_form(const LieAlgebra& L);

bool is_subalgebra(const LieAlgebra& L, const Subspace& V);
bool is_ideal(const LieAlgebra& L, const Subspace& V);
bool is_unimodular(const LieAlgebra& L);

/// Structure constants of a subalgebra in the subspace's own basis.
/// Throws Error(InvalidInput) if V is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& V, std::string name = {});

struct Quotient {
  LieAlgebra algebra;
  /// dim(L/I) x dim(L): coordinates of the image in the quotient basis.
  QMat projection;
  /// Representatives in L of the quotient basis.
  std::vector<QVec> lifts;
};
/// Throws Error(PreconditionFailed) if I is not an ideal.
Quotient quotient(const LieAlgebra& L, const Subspace& I);

struct Orthocomplement {
  Subspace space;
  /// dim(V ∩ V^perp); positive only for degenerate forms.
  std::size_t intersection_dim = 0;
};
/// {w in W : B(w, v) = 0 for all v in V}; the full annihilator even when B is degenerate.
Orthocomplement orthocomplement(const Subspace& V, const Subspace& W, const BilinearForm& B);

/// Killing-orthogonal complement of [L, L], checked to be a solvable ideal.
Subspace radical(const LieAlgebra& L);

/// True if ad x is nilpotent, decided exactly.
bool is_ad_nilpotent(const LieAlgebra& L, const QVec& x);

}  // namespace solvmetry
