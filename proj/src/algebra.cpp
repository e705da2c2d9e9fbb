#include "solvmetry/algebra.hpp"

#include "solvmetry/errors.hpp"

#include <sstream>
#include <utility>

namespace solvmetry {

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim, std::vector<QVec> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_dim_)
      throw Error(ErrorKind::DimensionMismatch, "subspace basis vector has wrong length");
  if (!basis_.empty()) {
    RowEchelon e = rref(QMat::from_rows(basis_, ambient_dim_));
    if (e.pivots.size() != basis_.size())
      throw Error(ErrorKind::InvalidInput, "subspace basis vectors are linearly dependent");
    for (std::size_t r = 0; r < e.pivots.size(); ++r) echelon_.push_back(e.reduced.row(r));
    pivots_ = std::move(e.pivots);
  }
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<QVec>& vecs) {
  for (const auto& v : vecs)
    if (v.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "span: vector has wrong length");
  return Subspace(ambient_dim, canonical_basis(vecs, ambient_dim));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<QVec> b;
  for (std::size_t i = 0; i < ambient_dim; ++i) b.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, std::move(b));
}

QVec Subspace::reduce(QVec v) const {
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon_[r][j];
  }
  return v;
}

bool Subspace::contains(const QVec& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "contains: vector has wrong length");
  return is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "contains: ambient mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "coordinates: vector has wrong length");
  if (basis_.empty()) return is_zero(v) ? std::optional<QVec>(QVec{}) : std::nullopt;
  return solve(matrix(), v);
}

QMat Subspace::matrix() const { return QMat::from_columns(basis_, ambient_dim_); }

Subspace Subspace::canonical() const { return Subspace(ambient_dim_, echelon_); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.echelon_ == b.echelon_;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace sum: ambient mismatch");
  std::vector<QVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "subspace intersection: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // sum x_i a_i - sum y_j b_j = 0
  QMat m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b[j][r];
  std::vector<QVec> vecs;
  for (const auto& z : nullspace(m)) {
    QVec v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) v = vaxpy(v, z[i], a[i]);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

std::vector<QVec> complement_in(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner)) throw Error(ErrorKind::InvalidInput, "complement_in: inner not contained in outer");
  std::vector<QVec> current = inner.basis();
  std::vector<QVec> extra;
  Subspace acc = inner;
  for (const auto& v : outer.basis()) {
    if (acc.contains(v)) continue;
    extra.push_back(v);
    current.push_back(v);
    acc = Subspace::span(outer.ambient_dim(), current);
  }
  return extra;
}

// ------------------------------------------------------------ BilinearForm

BilinearForm::BilinearForm(QMat matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error(ErrorKind::InvalidInput, "bilinear form matrix is not square");
  if (!(matrix_ == matrix_.transpose())) throw Error(ErrorKind::InvalidInput, "bilinear form matrix is not symmetric");
}

Rational BilinearForm::operator()(const QVec& x, const QVec& y) const { return vdot(x, matrix_ * y); }

Signature signature(const BilinearForm& form) {
  QMat a = form.matrix();
  const std::size_t n = a.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (!done[i] && sgn(a(i, i)) != 0) pivot = i;
    if (pivot == n) {
      // No usable diagonal entry: combine two indices with a nonzero off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && sgn(a(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      // row/col pi += row/col pj
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += a(k, pj);
      pivot = pi;
    }
    const Rational d = a(pivot, pivot);
    (sgn(d) > 0 ? sig.positive : sig.negative) += 1;
    done[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a(i, pivot)) == 0) continue;
      const Rational f = a(i, pivot) / d;
      for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(pivot, k);
      for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, pivot);
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

// -------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<Rational> constants)
    : name_(std::move(name)), dim_(dim), c_(std::move(constants)) {
  if (c_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorKind::DimensionMismatch, "structure constant tensor must have dim^3 entries");
}

LieAlgebra LieAlgebra::from_brackets(std::string name, std::size_t dim, const std::vector<Bracket>& brackets) {
  std::vector<Rational> c(dim * dim * dim);
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim || b.k >= dim) throw Error(ErrorKind::InvalidInput, "bracket index out of range");
    if (b.i == b.j) throw Error(ErrorKind::InvalidInput, "bracket [e_i, e_i] must vanish");
    c[(b.i * dim + b.j) * dim + b.k] += b.coeff;
    c[(b.j * dim + b.i) * dim + b.k] -= b.coeff;
  }
  return LieAlgebra(std::move(name), dim, std::move(c));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::string name) {
  return LieAlgebra(std::move(name), dim, std::vector<Rational>(dim * dim * dim));
}

LieAlgebra LieAlgebra::from_matrix_basis(std::string name, const std::vector<QMat>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) return abelian(0, std::move(name));
  const std::size_t rows = basis[0].rows();
  const std::size_t cols = basis[0].cols();
  std::vector<QVec> flat;
  for (const auto& m : basis) {
    if (m.rows() != rows || m.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "matrix basis shapes differ");
    QVec v;
    v.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) v.push_back(m(i, j));
    flat.push_back(std::move(v));
  }
  const Subspace span(rows * cols, flat);
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const QMat comm = commutator(basis[i], basis[j]);
      QVec v;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t s = 0; s < cols; ++s) v.push_back(comm(r, s));
      auto coords = span.coordinates(v);
      if (!coords) throw Error(ErrorKind::InvalidInput, "matrix basis is not closed under the commutator");
      for (std::size_t k = 0; k < n; ++k) {
        c[(i * n + j) * n + k] = (*coords)[k];
        c[(j * n + i) * n + k] = -(*coords)[k];
      }
    }
  return LieAlgebra(std::move(name), n, std::move(c));
}

void LieAlgebra::check_length(const QVec& v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match algebra dimension");
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  check_length(x);
  check_length(y);
  QVec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) r[k] += xy * c(i, j, k);
    }
  }
  return r;
}

QVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  QVec r(dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = c(i, j, k);
  return r;
}

QMat LieAlgebra::ad(const QVec& x) const {
  check_length(x);
  QMat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) m(k, j) += x[i] * c(i, j, k);
  }
  return m;
}

QMat LieAlgebra::ad_basis(std::size_t i) const {
  QMat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
  return m;
}

LieAlgebra LieAlgebra::renamed(std::string name) const { return LieAlgebra(std::move(name), dim_, c_); }

// -------------------------------------------------------------- operations

std::vector<Violation> validate(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational s = L.c(i, j, k) + L.c(j, i, k);
        if (sgn(s) != 0) out.push_back({Violation::Kind::Antisymmetry, i, j, k, 0, s});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) + L.c(k, i, m) * L.c(m, j, l);
          if (sgn(s) != 0) out.push_back({Violation::Kind::Jacobi, i, j, k, l, s});
        }
  return out;
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  if (v.kind == Violation::Kind::Antisymmetry)
    os << "antisymmetry: c[" << v.i << "][" << v.j << "][" << v.k << "] + c[" << v.j << "][" << v.i << "][" << v.k
       << "] = " << to_string(v.value);
  else
    os << "jacobi: (" << v.i << ", " << v.j << ", " << v.k << ") component " << v.l << " = " << to_string(v.value);
  return os.str();
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<QVec> vecs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      QVec z = L.bracket(x, y);
      if (!is_zero(z)) vecs.push_back(std::move(z));
    }
  return Subspace::span(L.dim(), vecs);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  const auto whole = Subspace::whole(L.dim());
  return bracket_span(L, whole, whole);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::whole(L.dim())};
  while (true) {
    Subspace next = bracket_span(L, series.back(), series.back());
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const auto whole = Subspace::whole(L.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(L, whole, series.back());
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

StructureFlags structure_flags(const LieAlgebra& L) {
  StructureFlags f;
  f.solvable = derived_series(L).back().dim() == 0;
  f.nilpotent = lower_central_series(L).back().dim() == 0;
  f.abelian = derived_subalgebra(L).dim() == 0;
  return f;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // x central iff sum_i x_i c[i][j][k] = 0 for all j, k.
  QMat m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = L.c(i, j, k);
  return Subspace(n, nullspace(m));
}

BilinearForm killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  QMat b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(L.c(i, l, k)) != 0 && sgn(L.c(j, k, l)) != 0) t += L.c(i, l, k) * L.c(j, k, l);
      b(i, j) = t;
      b(j, i) = t;
    }
  return BilinearForm(std::move(b));
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& V) { return V.contains(bracket_span(L, V, V)); }

bool is_ideal(const LieAlgebra& L, const Subspace& V) {
  return V.contains(bracket_span(L, Subspace::whole(L.dim()), V));
}

bool is_unimodular(const LieAlgebra& L) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (sgn(trace(L.ad_basis(i))) != 0) return false;
  return true;
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& V, std::string name) {
  const std::size_t m = V.dim();
  std::vector<Rational> c(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto coords = V.coordinates(L.bracket(V[a], V[b]));
      if (!coords) throw Error(ErrorKind::InvalidInput, "restrict_to: subspace is not a subalgebra");
      for (std::size_t k = 0; k < m; ++k) {
        c[(a * m + b) * m + k] = (*coords)[k];
        c[(b * m + a) * m + k] = -(*coords)[k];
      }
    }
  return LieAlgebra(name.empty() ? L.name() + "|sub" : std::move(name), m, std::move(c));
}

Quotient quotient(const LieAlgebra& L, const Subspace& I) {
  if (!is_ideal(L, I)) throw Error(ErrorKind::PreconditionFailed, "quotient: subspace is not an ideal");
  const std::size_t n = L.dim();
  std::vector<QVec> lifts = complement_in(I, Subspace::whole(n));
  const std::size_t m = lifts.size();
  // Coordinates w.r.t. (complement, I); the first m give the projection.
  std::vector<QVec> cols = lifts;
  cols.insert(cols.end(), I.basis().begin(), I.basis().end());
  const QMat change = *inverse(QMat::from_columns(cols, n));
  QMat proj(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < n; ++j) proj(r, j) = change(r, j);
  std::vector<Rational> c(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const QVec img = proj * L.bracket(lifts[a], lifts[b]);
      for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = img[k];
    }
  return Quotient{LieAlgebra(L.name() + "/I", m, std::move(c)), std::move(proj), std::move(lifts)};
}

Orthocomplement orthocomplement(const Subspace& V, const Subspace& W, const BilinearForm& B) {
  if (V.ambient_dim() != B.dim() || W.ambient_dim() != B.dim())
    throw Error(ErrorKind::DimensionMismatch, "orthocomplement: form and subspaces disagree on dimension");
  const std::size_t n = B.dim();
  Subspace result = W;
  if (V.dim() > 0 && W.dim() > 0) {
    QMat m(V.dim(), W.dim());
    for (std::size_t i = 0; i < V.dim(); ++i)
      for (std::size_t j = 0; j < W.dim(); ++j) m(i, j) = B(V[i], W[j]);
    std::vector<QVec> vecs;
    for (const auto& z : nullspace(m)) {
      QVec w(n);
      for (std::size_t j = 0; j < W.dim(); ++j) w = vaxpy(w, z[j], W[j]);
      vecs.push_back(std::move(w));
    }
    result = Subspace::span(n, vecs);
  }
  const std::size_t meet = intersection(V, result).dim();
  return Orthocomplement{std::move(result), meet};
}

Subspace radical(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Subspace r = orthocomplement(derived_subalgebra(L), Subspace::whole(n), killing_form(L)).space;
  if (!is_ideal(L, r)) throw Error(ErrorKind::InternalCheck, "radical candidate is not an ideal");
  if (!structure_flags(restrict_to(L, r)).solvable)
    throw Error(ErrorKind::InternalCheck, "radical candidate is not solvable");
  return r;
}

bool is_ad_nilpotent(const LieAlgebra& L, const QVec& x) { return power(L.ad(x), L.dim()).is_zero(); }

}  // namespace solvmetry
