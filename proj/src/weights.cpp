#include "solvmetry/weights.hpp"

#include "solvmetry/errors.hpp"
#include "solvmetry/lp.hpp"
#include "solvmetry/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace solvmetry {

using CMat = Eigen::MatrixXcd;

void ToleranceConfig::check() const {
  if (!(eps_rank > 0) || !(eps_eig > 0) || snap_denominator_bound <= 0)
    throw Error(ErrorKind::InvalidInput, "tolerances must be positive");
}

std::complex<double> WeightSystem::evaluate(std::size_t j, const Eigen::VectorXd& x) const {
  std::complex<double> s = 0;
  for (Eigen::Index k = 0; k < x.size(); ++k) s += weights.at(j)(k) * x(k);
  return s;
}

CMat WeightSystem::in_flag_basis(const CMat& a) const { return flag_basis.fullPivLu().solve(a * flag_basis); }

std::vector<Eigen::VectorXcd> WeightSystem::distinct_weights(double eps) const {
  std::vector<Eigen::VectorXcd> out;
  for (const auto& w : weights) {
    bool seen = false;
    for (const auto& u : out)
      if ((u - w).cwiseAbs().maxCoeff() <= eps * std::max(1.0, w.cwiseAbs().maxCoeff())) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(w);
  }
  return out;
}

std::optional<Rational> snap_rational(double v, long denominator_bound, double tol) {
  if (!std::isfinite(v) || std::abs(v) > 1e12) return std::nullopt;
  double x = v;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  std::optional<Rational> best;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(x);
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > denominator_bound || k2 <= 0) break;
    best = Rational(mpz_class(h2), mpz_class(k2));
    best->canonicalize();
    if (std::abs(v - static_cast<double>(h2) / static_cast<double>(k2)) <= 1e-13 * std::max(1.0, std::abs(v))) break;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  if (!best || std::abs(v - best->get_d()) > tol) return std::nullopt;
  return best;
}

namespace {

CMat to_complex(const QMat& a) {
  CMat m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).get_d();
  return m;
}

void check_not_degenerate(double value, double threshold) {
  if (value >= threshold / 10 && value <= threshold * 10)
    throw Error(ErrorKind::DegenerateTolerance,
                "rank decision within a factor of 10 of the tolerance (singular value " + std::to_string(value) + ")");
}

// Right singular vectors spanning the numerical kernel of `a`, given the expected dimension.
CMat kernel_of_dim(const CMat& a, std::size_t dim, double threshold) {
  const Eigen::Index n = a.cols();
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Pad the spectrum with zeros for wide-short matrices.
  std::vector<double> s(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index i = 0; i < sv.size(); ++i) s[static_cast<std::size_t>(i)] = sv(i);
  const std::size_t r = static_cast<std::size_t>(n) - dim;
  for (double v : s) check_not_degenerate(v, threshold);
  if (dim > 0 && s[r] > threshold) throw Error(ErrorKind::DegenerateTolerance, "expected kernel not found numerically");
  if (r > 0 && s[r - 1] <= threshold) throw Error(ErrorKind::DegenerateTolerance, "kernel larger than expected");
  return svd.matrixV().rightCols(static_cast<Eigen::Index>(dim));
}

double matrix_scale(const std::vector<CMat>& ms) {
  double s = 1.0;
  for (const auto& m : ms)
    if (m.size() > 0) s = std::max(s, m.cwiseAbs().maxCoeff());
  return s;
}

CMat generalized_eigenspace(const CMat& b, std::complex<double> lambda, std::size_t m, double eps_rank) {
  const Eigen::Index n = b.rows();
  if (static_cast<Eigen::Index>(m) == n) return CMat::Identity(n, n);
  const CMat shifted = b - lambda * CMat::Identity(n, n);
  CMat p = CMat::Identity(n, n);
  for (std::size_t i = 0; i < m; ++i) p = p * shifted;
  const double scale = std::max(1.0, shifted.cwiseAbs().maxCoeff());
  return kernel_of_dim(p, m, eps_rank * std::pow(scale, static_cast<double>(m)));
}

// Orthonormal basis of the common kernel of the matrices (all n columns wide).
CMat common_kernel(const std::vector<CMat>& ms, Eigen::Index n, double threshold) {
  if (ms.empty() || n == 0) return CMat::Identity(n, n);
  CMat stacked(static_cast<Eigen::Index>(ms.size()) * n, n);
  for (std::size_t k = 0; k < ms.size(); ++k) stacked.block(static_cast<Eigen::Index>(k) * n, 0, n, n) = ms[k];
  if (stacked.cwiseAbs().maxCoeff() <= threshold) return CMat::Identity(n, n);
  Eigen::JacobiSVD<CMat> svd(stacked, Eigen::ComputeFullV);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    check_not_degenerate(svd.singularValues()(i), threshold);
    if (svd.singularValues()(i) > threshold) ++r;
  }
  return svd.matrixV().rightCols(n - r);
}

struct EigenCluster {
  std::complex<double> center;  // mean of the members, accurate even when defective
  std::size_t size;
};

// Eigenvalues grouped by single linkage, sorted by (real, imag) of the centers.
std::vector<EigenCluster> eigen_clusters(const CMat& a, double radius) {
  Eigen::ComplexEigenSolver<CMat> solver(a, false);
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::complex<double>> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::vector<int> group(n, -1);
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (group[j] >= 0) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (group[k] == groups && std::abs(ev[j] - ev[k]) <= radius) {
            group[j] = groups;
            grew = true;
            break;
          }
      }
    }
    ++groups;
  }
  std::vector<EigenCluster> out(static_cast<std::size_t>(groups), EigenCluster{0.0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(group[i])].center += ev[i];
    out[static_cast<std::size_t>(group[i])].size++;
  }
  for (auto& c : out) c.center /= static_cast<double>(c.size);
  std::sort(out.begin(), out.end(), [](const EigenCluster& x, const EigenCluster& y) {
    if (std::abs(x.center.real() - y.center.real()) > 1e-12) return x.center.real() < y.center.real();
    return x.center.imag() < y.center.imag();
  });
  return out;
}

// Deterministic coefficients for a generic element of the span.
Rational generic_coefficient(std::size_t k, std::size_t attempt) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  const long num = primes[(k + 3 * attempt) % 20] * static_cast<long>(k + 1) + static_cast<long>(attempt * 7 + 1);
  const long den = primes[(2 * k + attempt + 5) % 20] + static_cast<long>(k);
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

constexpr std::size_t kAttempts = 4;

// A common eigenvector of a solvable family. Such vectors are killed by every
// commutator, and on that common kernel the family commutes, so generalized
// eigenspaces of a generic element are invariant there.
std::optional<Eigen::VectorXcd> common_eigenvector(const std::vector<CMat>& as, std::size_t attempt,
                                                   const ToleranceConfig& tol, double scale) {
  const Eigen::Index n = as[0].rows();
  std::vector<CMat> comms;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j) comms.push_back(as[i] * as[j] - as[j] * as[i]);
  const CMat u = common_kernel(comms, n, tol.eps_rank * scale * scale);
  if (u.cols() == 0) return std::nullopt;
  std::vector<CMat> bs;
  CMat generic = CMat::Zero(u.cols(), u.cols());
  for (std::size_t k = 0; k < as.size(); ++k) {
    bs.push_back(u.adjoint() * as[k] * u);
    generic += generic_coefficient(k, attempt).get_d() * bs.back();
  }
  const double radius = std::max(tol.eps_eig, 1e-5) * std::max(1.0, generic.cwiseAbs().maxCoeff());
  for (const auto& cl : eigen_clusters(generic, radius)) {
    const CMat g = generalized_eigenspace(generic, cl.center, cl.size, tol.eps_rank);
    const auto m = static_cast<Eigen::Index>(cl.size);
    std::vector<CMat> ns;
    for (const auto& b : bs) {
      const CMat block = g.adjoint() * b * g;
      ns.push_back(block - (block.trace() / static_cast<double>(m)) * CMat::Identity(m, m));
    }
    const CMat k = common_kernel(ns, m, tol.eps_rank * scale * 10);
    if (k.cols() > 0) {
      Eigen::VectorXcd v = u * (g * k.col(0));
      return Eigen::VectorXcd(v / v.norm());
    }
  }
  return std::nullopt;
}

// Unitary flag built one common eigenvector at a time, deflating onto the
// orthogonal complement after each step.
std::optional<WeightSystem> unitary_flag(const std::vector<CMat>& acting, std::size_t attempt, const ToleranceConfig& tol) {
  const Eigen::Index n = acting.empty() ? 0 : acting[0].rows();
  const double scale = matrix_scale(acting);
  CMat flag(n, n);
  CMat complement = CMat::Identity(n, n);
  for (Eigen::Index step = 0; step < n; ++step) {
    const Eigen::Index r = complement.cols();
    std::vector<CMat> compressed;
    for (const auto& a : acting) compressed.push_back(complement.adjoint() * a * complement);
    std::optional<Eigen::VectorXcd> v =
        acting.empty() ? std::optional<Eigen::VectorXcd>(Eigen::VectorXcd::Unit(r, 0))
                       : common_eigenvector(compressed, attempt, tol, scale);
    if (!v) return std::nullopt;
    flag.col(step) = complement * *v;
    Eigen::HouseholderQR<CMat> qr(*v);
    const CMat q = qr.householderQ() * CMat::Identity(r, r);
    complement = complement * q.rightCols(r - 1);
  }
  WeightSystem ws;
  ws.ambient_dim = static_cast<std::size_t>(n);
  ws.acting_dim = acting.size();
  ws.flag_basis = flag;
  ws.tolerance = tol.eps_eig * scale;
  ws.weights.assign(static_cast<std::size_t>(n), Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(acting.size())));
  for (std::size_t k = 0; k < acting.size(); ++k) {
    const CMat t = flag.adjoint() * acting[k] * flag;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j)
        if (std::abs(t(i, j)) > ws.tolerance) return std::nullopt;
      ws.weights[static_cast<std::size_t>(i)](static_cast<Eigen::Index>(k)) = t(i, i);
    }
  }
  return ws;
}

WeightSystem flag_with_retries(const std::vector<CMat>& acting, const ToleranceConfig& tol) {
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt)
    if (auto ws = unitary_flag(acting, attempt, tol)) return *ws;
  throw Error(ErrorKind::DegenerateTolerance, "triangularize: no common eigenvector found within tolerance");
}

QVec flatten(const QMat& a) {
  QVec v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

QMat unflatten(const QVec& v, std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

void check_exact_solvable(const std::vector<QMat>& ms, std::size_t n) {
  std::vector<QVec> flat;
  for (const auto& m : ms) flat.push_back(flatten(m));
  Subspace span = Subspace::span(n * n, flat);
  for (std::size_t i = 0; i < span.dim(); ++i)
    for (std::size_t j = i + 1; j < span.dim(); ++j)
      if (!span.contains(flatten(commutator(unflatten(span[i], n), unflatten(span[j], n)))))
        throw Error(ErrorKind::InvalidInput, "matrices do not span a Lie algebra (commutator outside the span)");
  while (span.dim() > 0) {
    std::vector<QVec> comms;
    for (std::size_t i = 0; i < span.dim(); ++i)
      for (std::size_t j = i + 1; j < span.dim(); ++j)
        comms.push_back(flatten(commutator(unflatten(span[i], n), unflatten(span[j], n))));
    Subspace next = Subspace::span(n * n, comms);
    if (next.dim() == span.dim()) throw Error(ErrorKind::NotSolvable, "derived series does not terminate");
    span = std::move(next);
  }
}

// Orthonormal basis (as vectorized columns) of the numerical span of matrices.
Eigen::MatrixXd numeric_span(const std::vector<Eigen::MatrixXd>& ms, Eigen::Index n, double threshold) {
  if (ms.empty()) return Eigen::MatrixXd(n * n, 0);
  Eigen::MatrixXd cols(n * n, static_cast<Eigen::Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k)
    cols.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXd>(ms[k].data(), n * n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    check_not_degenerate(svd.singularValues()(i), threshold);
    if (svd.singularValues()(i) > threshold) ++r;
  }
  return svd.matrixU().leftCols(r);
}

void check_numeric_solvable(const std::vector<Eigen::MatrixXd>& ms, Eigen::Index n, double threshold) {
  auto as_matrix = [n](const Eigen::VectorXd& v) { return Eigen::Map<const Eigen::MatrixXd>(v.data(), n, n).eval(); };
  Eigen::MatrixXd span = numeric_span(ms, n, threshold);
  for (Eigen::Index i = 0; i < span.cols(); ++i)
    for (Eigen::Index j = i + 1; j < span.cols(); ++j) {
      const Eigen::MatrixXd a = as_matrix(span.col(i));
      const Eigen::MatrixXd b = as_matrix(span.col(j));
      const Eigen::MatrixXd c = a * b - b * a;
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(c.data(), n * n);
      if ((v - span * (span.transpose() * v)).norm() > threshold * 10)
        throw Error(ErrorKind::InvalidInput, "matrices do not span a Lie algebra (commutator outside the span)");
    }
  while (span.cols() > 0) {
    std::vector<Eigen::MatrixXd> comms;
    for (Eigen::Index i = 0; i < span.cols(); ++i)
      for (Eigen::Index j = i + 1; j < span.cols(); ++j) {
        const Eigen::MatrixXd a = as_matrix(span.col(i));
        const Eigen::MatrixXd b = as_matrix(span.col(j));
        comms.push_back(a * b - b * a);
      }
    Eigen::MatrixXd next = numeric_span(comms, n, threshold);
    if (next.cols() == span.cols()) throw Error(ErrorKind::NotSolvable, "derived series does not terminate");
    span = std::move(next);
  }
}

}  // namespace

WeightSystem triangularize(const std::vector<QMat>& matrices, const ToleranceConfig& tol) {
  tol.check();
  const std::size_t n = matrices.empty() ? 0 : matrices[0].rows();
  for (const auto& m : matrices)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "triangularize: matrices differ in size");
  check_exact_solvable(matrices, n);
  std::vector<CMat> acting;
  for (const auto& m : matrices) acting.push_back(to_complex(m));
  return flag_with_retries(acting, tol);
}

WeightSystem triangularize(const std::vector<Eigen::MatrixXd>& matrices, const ToleranceConfig& tol) {
  tol.check();
  const Eigen::Index n = matrices.empty() ? 0 : matrices[0].rows();
  for (const auto& m : matrices)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "triangularize: matrices differ in size");
  std::vector<CMat> acting;
  for (const auto& m : matrices) acting.push_back(m.cast<std::complex<double>>());
  check_numeric_solvable(matrices, n, tol.eps_rank * matrix_scale(acting));
  return flag_with_retries(acting, tol);
}

WeightSystem adjoint_weights(const LieAlgebra& L, const ToleranceConfig& tol) {
  std::vector<QMat> ads;
  for (std::size_t i = 0; i < L.dim(); ++i) ads.push_back(L.ad_basis(i));
  return triangularize(ads, tol);
}

std::vector<QVec> snapped_kernel(const Eigen::MatrixXd& rows_in, std::size_t n, const ToleranceConfig& tol) {
  std::vector<QVec> out;
  if (rows_in.rows() == 0) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
    return out;
  }
  const double scale = std::max(1.0, rows_in.cwiseAbs().maxCoeff());
  const double threshold = tol.eps_rank * scale;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows_in);
  std::size_t rnk = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    check_not_degenerate(svd.singularValues()(i), threshold);
    if (svd.singularValues()(i) > threshold) ++rnk;
  }
  // Gauss-Jordan with partial pivoting, columns in order.
  Eigen::MatrixXd r = rows_in;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < r.cols() && row < r.rows(); ++c) {
    Eigen::Index best = row;
    for (Eigen::Index i = row + 1; i < r.rows(); ++i)
      if (std::abs(r(i, c)) > std::abs(r(best, c))) best = i;
    if (std::abs(r(best, c)) <= threshold) continue;
    r.row(row).swap(r.row(best));
    r.row(row) /= r(row, c);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      if (i != row) r.row(i) -= r(i, c) * r.row(row);
    pivots.push_back(c);
    ++row;
  }
  if (pivots.size() != rnk) throw Error(ErrorKind::DegenerateTolerance, "pivot count disagrees with numerical rank");
  for (std::size_t f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), static_cast<Eigen::Index>(f)) != pivots.end()) continue;
    QVec v = zero_vector(n);
    v[f] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      const double value = -r(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(f));
      auto q = snap_rational(value, tol.snap_denominator_bound, tol.eps_eig * std::max(1.0, std::abs(value)));
      if (!q) throw Error(ErrorKind::SnapFailure, "kernel vector entry " + std::to_string(value) + " does not snap to a rational");
      v[static_cast<std::size_t>(pivots[p])] = *q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

Eigen::MatrixXd weight_rows(const std::vector<Eigen::VectorXcd>& ws, std::size_t n, bool with_imag) {
  const auto k = static_cast<Eigen::Index>(ws.size());
  Eigen::MatrixXd rows(with_imag ? 2 * k : k, static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < k; ++i) {
    rows.row(i) = ws[static_cast<std::size_t>(i)].real().transpose();
    if (with_imag) rows.row(k + i) = ws[static_cast<std::size_t>(i)].imag().transpose();
  }
  return rows;
}

bool is_nilpotent_subalgebra(const LieAlgebra& L, const Subspace& V) {
  if (V.dim() == 0) return true;
  return structure_flags(restrict_to(L, V)).nilpotent;
}

}  // namespace

Subspace nilradical(const LieAlgebra& L, const ToleranceConfig& tol) {
  const std::size_t n = L.dim();
  const WeightSystem ws = adjoint_weights(L, tol);
  const auto distinct = ws.distinct_weights(tol.eps_eig);
  const Subspace nil = Subspace::span(n, snapped_kernel(weight_rows(distinct, n, true), n, tol));
  if (!is_ideal(L, nil) || !nil.contains(derived_subalgebra(L)))
    throw Error(ErrorKind::SnapFailure, "snapped nilradical is not an ideal containing [L,L]");
  for (const auto& x : nil.basis())
    if (!is_ad_nilpotent(L, x)) throw Error(ErrorKind::SnapFailure, "snapped nilradical has a non-ad-nilpotent element");
  if (!is_nilpotent_subalgebra(L, nil)) throw Error(ErrorKind::SnapFailure, "snapped nilradical is not nilpotent");
  return nil;
}

AcsResult is_almost_completely_solvable(const LieAlgebra& L, const ToleranceConfig& tol) {
  const std::size_t n = L.dim();
  const WeightSystem ws = adjoint_weights(L, tol);
  const auto distinct = ws.distinct_weights(tol.eps_eig);
  AcsResult out;
  out.v0 = Subspace::span(n, snapped_kernel(weight_rows(distinct, n, false), n, tol));
  if (!out.v0.contains(derived_subalgebra(L)) || !is_ideal(L, out.v0))
    throw Error(ErrorKind::SnapFailure, "snapped V0 is not an ideal containing [L,L]");
  const Subspace nil = nilradical(L, tol);
  if (!out.v0.contains(nil)) throw Error(ErrorKind::SnapFailure, "snapped V0 does not contain the nilradical");
  // On V0 every weight is purely imaginary; they all vanish iff V0 consists of ad-nilpotent elements.
  out.acs = out.v0.dim() == nil.dim();
  if (!out.acs)
    for (const auto& v : out.v0.basis())
      if (!nil.contains(v)) {
        out.witness = v;
        break;
      }
  return out;
}

bool is_admissible(const LieAlgebra& L) { return derived_subalgebra(L).contains(center(L)); }

PositivityResult is_positive(const LieAlgebra& L, const ToleranceConfig& tol) {
  const std::size_t n = L.dim();
  const Subspace nil = nilradical(L, tol);
  PositivityResult out;
  if (nil.dim() == 0) return out;
  std::vector<QMat> restricted;
  for (std::size_t k = 0; k < n; ++k) {
    QMat m(nil.dim(), nil.dim());
    for (std::size_t j = 0; j < nil.dim(); ++j) m.set_col(j, *nil.coordinates(L.bracket(unit_vector(n, k), nil[j])));
    restricted.push_back(std::move(m));
  }
  const WeightSystem ws = triangularize(restricted, tol);
  // maximize t s.t. t <= sum_k r_jk x_k, |x_k| <= 1, with x = u - 1 and t = s - R.
  const std::size_t m = ws.weights.size();
  std::vector<std::vector<double>> rr(m, std::vector<double>(n));
  double big_r = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double row_abs = 0;
    for (std::size_t k = 0; k < n; ++k) {
      rr[j][k] = ws.weights[j](static_cast<Eigen::Index>(k)).real();
      row_abs += std::abs(rr[j][k]);
    }
    big_r = std::max(big_r, row_abs);
  }
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> row(n + 1, 0.0);
    double sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = -rr[j][k];
      sum += rr[j][k];
    }
    row[n] = 1.0;
    a.push_back(std::move(row));
    b.push_back(std::max(0.0, big_r - sum));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> row(n + 1, 0.0);
    row[k] = 1.0;
    a.push_back(std::move(row));
    b.push_back(2.0);
  }
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  const LpResult lp = simplex_max(a, b, c);
  if (!lp.optimal) throw Error(ErrorKind::LpFailure, "positivity LP reported unbounded");
  out.margin = lp.value - big_r;
  const double scale = std::max(1.0, big_r);
  check_not_degenerate(out.margin, tol.eps_rank * scale);
  out.positive = out.margin > tol.eps_rank * scale;
  if (out.positive) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) {
      bool used = false;
      for (std::size_t j = 0; j < m; ++j) used = used || std::abs(rr[j][k]) > tol.eps_rank * scale;
      x[k] = used ? lp.y[k] - 1.0 : 0.0;
    }
    out.witness = std::move(x);
  }
  return out;
}

std::vector<std::complex<double>> eigenvalues_ad(const LieAlgebra& L, const QVec& x) {
  std::vector<std::complex<double>> out;
  for (const auto& c : exact_spectrum(L.ad(x)))
    for (std::size_t i = 0; i < c.multiplicity; ++i) out.push_back(c.value);
  return out;
}

}  // namespace solvmetry
