#include "solvmetry/metric.hpp"

#include "solvmetry/errors.hpp"

namespace solvmetry {

bool is_positive_definite(const QMat& gram) {
  if (!gram.is_square() || !(gram == gram.transpose())) return false;
  const std::size_t n = gram.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    QMat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, QMat gram)
    : algebra_(std::move(algebra)), gram_(std::move(gram)) {
  if (gram_.rows() != algebra_.dim() || gram_.cols() != algebra_.dim())
    throw Error(ErrorKind::DimensionMismatch, "Gram matrix size does not match algebra dimension");
  if (!(gram_ == gram_.transpose())) throw Error(ErrorKind::InvalidInput, "Gram matrix is not symmetric");
  if (!is_positive_definite(gram_)) throw Error(ErrorKind::InvalidInput, "Gram matrix is not positive definite");
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra)
    : algebra_(std::move(algebra)), gram_(QMat::identity(algebra_.dim())) {}

std::optional<QVec> DerivationSpace::coordinates(const QMat& d) const {
  const std::size_t n2 = ambient_dim * ambient_dim;
  QVec target(n2);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) target[i * ambient_dim + j] = d(i, j);
  if (basis.empty()) return is_zero(target) ? std::optional<QVec>(QVec{}) : std::nullopt;
  QMat m(n2, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < ambient_dim; ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) m(i * ambient_dim + j, b) = basis[b](i, j);
  return solve(m, target);
}

QMat DerivationSpace::combination(const QVec& coeffs) const {
  QMat r(ambient_dim, ambient_dim);
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (sgn(coeffs.at(b)) != 0) r = r + coeffs[b] * basis[b];
  return r;
}

bool is_derivation(const LieAlgebra& L, const QMat& d) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const QVec lhs = d * L.bracket_basis(i, j);
      const QVec rhs = vadd(L.bracket(d.col(i), unit_vector(n, j)), L.bracket(unit_vector(n, i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_skew(const QMat& gram, const QMat& a) { return (gram * a + a.transpose() * gram).is_zero(); }

QMat metric_adjoint(const QMat& gram, const QMat& a) {
  auto inv = inverse(gram);
  if (!inv) throw Error(ErrorKind::InvalidInput, "metric_adjoint: singular Gram matrix");
  return *inv * a.transpose() * gram;
}

QMat metric_adjoint(const MetricLieAlgebra& M, const QMat& a) { return metric_adjoint(M.gram(), a); }

namespace {

// Rows expressing D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0, unknown D(a,b) at column a*n+b.
QMat derivation_equations(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  QMat eq(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t m = 0; m < n; ++m) {
          eq(row, k * n + m) += L.c(i, j, m);
          eq(row, m * n + i) -= L.c(m, j, k);
          eq(row, m * n + j) -= L.c(i, m, k);
        }
  return eq;
}

QMat unflatten(const QVec& v, std::size_t n) {
  QMat d(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d(a, b) = v[a * n + b];
  return d;
}

}  // namespace

DerivationSpace derivation_algebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  DerivationSpace out{n, {}};
  if (n == 0) return out;
  if (n == 1) {
    out.basis.push_back(QMat::identity(1));
    return out;
  }
  for (const auto& v : nullspace(derivation_equations(L))) out.basis.push_back(unflatten(v, n));
  return out;
}

DerivationSpace skew_derivations(const MetricLieAlgebra& M) {
  const LieAlgebra& L = M.algebra();
  const QMat& g = M.gram();
  const std::size_t n = L.dim();
  DerivationSpace out{n, {}};
  if (n <= 1) return out;  // a 1x1 skew matrix is zero
  QMat der = derivation_equations(L);
  const std::size_t skew_rows = n * (n + 1) / 2;
  QMat eq(der.rows() + skew_rows, n * n);
  for (std::size_t r = 0; r < der.rows(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) eq(r, c) = der(r, c);
  std::size_t row = der.rows();
  // (G D)(a,b) + (D^T G)(a,b) = sum_m G(a,m) D(m,b) + D(m,a) G(m,b)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b, ++row)
      for (std::size_t m = 0; m < n; ++m) {
        eq(row, m * n + b) += g(a, m);
        eq(row, m * n + a) += g(m, b);
      }
  for (const auto& v : nullspace(eq)) out.basis.push_back(unflatten(v, n));
  if (!is_closed_under_commutator(out))
    throw Error(ErrorKind::InternalCheck, "skew derivations are not closed under the commutator");
  return out;
}

bool is_closed_under_commutator(const DerivationSpace& D) {
  for (std::size_t i = 0; i < D.dim(); ++i)
    for (std::size_t j = i + 1; j < D.dim(); ++j)
      if (!D.coordinates(commutator(D.basis[i], D.basis[j]))) return false;
  return true;
}

DerivationSpace center_of(const DerivationSpace& D) {
  const std::size_t n = D.ambient_dim;
  const std::size_t m = D.dim();
  DerivationSpace out{n, {}};
  if (m == 0) return out;
  // sum_a x_a [D_a, D_b] = 0 for every b
  QMat eq(m * n * n, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const QMat comm = commutator(D.basis[a], D.basis[b]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eq((b * n + i) * n + j, a) = comm(i, j);
    }
  for (const auto& x : nullspace(eq)) out.basis.push_back(D.combination(x));
  return out;
}

Rational central_sectional_curvature(const MetricLieAlgebra& M, const QVec& x, const QVec& y) {
  if (!center(M.algebra()).contains(x))
    throw Error(ErrorKind::PreconditionFailed, "central_sectional_curvature: x is not central");
  const QVec v = metric_adjoint(M, M.algebra().ad(y)) * x;
  return M.inner(v, v) / 4;
}

FlatSplit flat_factor_split(const MetricLieAlgebra& M) {
  const LieAlgebra& L = M.algebra();
  const std::size_t n = L.dim();
  const BilinearForm g(M.gram());
  const Subspace whole = Subspace::whole(n);
  const Subspace derived_perp = orthocomplement(derived_subalgebra(L), whole, g).space;
  Subspace u = intersection(center(L), derived_perp);
  Subspace t = orthocomplement(u, whole, g).space;
  if (!is_ideal(L, t) || !is_ideal(L, u) || !bracket_span(L, whole, u).basis().empty())
    throw Error(ErrorKind::InternalCheck, "flat factor split: t or u fails the ideal check");
  FlatSplit out{t, u, false};
  const LieAlgebra tl = restrict_to(L, t);
  out.t_admissible = derived_subalgebra(tl).contains(center(tl));
  return out;
}

}  // namespace solvmetry
