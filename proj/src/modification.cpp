#include "solvmetry/modification.hpp"

#include "solvmetry/errors.hpp"

namespace solvmetry {

QVec SemidirectProduct::embed(const QVec& d_coeffs, const QVec& s_coords) const {
  QVec v(total.dim());
  for (std::size_t a = 0; a < d(); ++a) v[a] = d_coeffs.at(a);
  for (std::size_t i = 0; i < n(); ++i) v[d() + i] = s_coords.at(i);
  return v;
}

QVec SemidirectProduct::embed_s(const QVec& s_coords) const { return embed(zero_vector(d()), s_coords); }

namespace {

QVec flatten(const QMat& a) {
  QVec v;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

std::vector<QVec> unit_range(std::size_t dim, std::size_t from, std::size_t to) {
  std::vector<QVec> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(unit_vector(dim, i));
  return out;
}

}  // namespace

SemidirectProduct semidirect(const DerivationSpace& D, const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const std::size_t d = D.dim();
  if (D.ambient_dim != n && d > 0) throw Error(ErrorKind::DimensionMismatch, "semidirect: derivations act on the wrong dimension");
  std::vector<QVec> flat;
  for (const auto& m : D.basis) flat.push_back(flatten(m));
  if (Subspace::span(n * n, flat).dim() != d)
    throw Error(ErrorKind::PreconditionFailed, "semidirect: derivation basis is linearly dependent");

  const std::size_t t = d + n;
  std::vector<Rational> c(t * t * t);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * t + j) * t + k]; };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto coords = D.coordinates(commutator(D.basis[a], D.basis[b]));
      if (!coords) throw Error(ErrorKind::PreconditionFailed, "semidirect: derivations not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k) {
        at(a, b, k) = (*coords)[k];
        at(b, a, k) = -(*coords)[k];
      }
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        at(a, d + j, d + k) = D.basis[a](k, j);
        at(d + j, a, d + k) = -D.basis[a](k, j);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(d + i, d + j, d + k) = L.c(i, j, k);

  SemidirectProduct out;
  out.total = LieAlgebra(d == 0 ? L.name() : "Der x| " + L.name(), t, std::move(c));
  if (!validate(out.total).empty())
    throw Error(ErrorKind::PreconditionFailed, "semidirect: assembled algebra violates Jacobi (inputs are not derivations)");
  out.derivations = D;
  out.d_part = Subspace(t, unit_range(t, 0, d));
  out.s_part = Subspace(t, unit_range(t, d, t));
  return out;
}

ModificationResult standard_modification(const MetricLieAlgebra& M) {
  const LieAlgebra& L = M.algebra();
  if (!structure_flags(L).solvable) throw Error(ErrorKind::NotSolvable, "standard modification needs a solvable algebra");
  const std::size_t n = L.dim();
  ModificationResult out;
  out.host = semidirect(skew_derivations(M), L);
  const std::size_t d = out.host.d();
  out.phi = QMat(d, n);
  if (d > 0) {
    const BilinearForm b = killing_form(out.host.total);
    Subspace candidate = orthocomplement(out.host.d_part, Subspace::whole(d + n), b).space;
    QMat bd(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) bd(i, j) = b.matrix()(i, j);
    const auto rad = nullspace(bd);
    if (!rad.empty()) {
      std::vector<QVec> allowed;
      for (const auto& r : rad) allowed.push_back(out.host.embed(r, zero_vector(n)));
      for (const auto& e : unit_range(n, 0, n)) allowed.push_back(out.host.embed_s(e));
      candidate = intersection(candidate, Subspace::span(d + n, allowed));
    }
    if (candidate.dim() != n || intersection(candidate, out.host.d_part).dim() != 0)
      throw Error(ErrorKind::SelectionAmbiguous,
                  "Killing annihilator of the derivation part is not a complement (dim " + std::to_string(candidate.dim()) + ")");
    QMat top(d, n), bottom(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < d; ++a) top(a, j) = candidate[j][a];
      for (std::size_t i = 0; i < n; ++i) bottom(i, j) = candidate[j][d + i];
    }
    const auto inv = inverse(bottom);
    if (!inv) throw Error(ErrorKind::InternalCheck, "complement does not project onto s");
    out.phi = top * *inv;
  }
  std::vector<QVec> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(out.host.embed(out.phi.col(i), unit_vector(n, i)));
  out.s_prime = Subspace(d + n, vs);
  out.induced_metric = MetricLieAlgebra(restrict_to(out.host.total, out.s_prime, L.name()), M.gram());
  return out;
}

Certificate normal_modification_certificate(const ModificationResult& R) {
  Certificate c;
  const SemidirectProduct& h = R.host;
  const std::size_t n = h.n();
  std::vector<QMat> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(h.derivations.combination(R.phi.col(i)));
  for (std::size_t i = 0; i < images.size() && c.phi_abelian; ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (!commutator(images[i], images[j]).is_zero()) {
        c.phi_abelian = false;
        c.failures.push_back("phi(s) is not abelian: [phi(e" + std::to_string(i + 1) + "), phi(e" + std::to_string(j + 1) +
                             ")] != 0");
        break;
      }
  const LieAlgebra s = restrict_to(h.total, h.s_part);
  for (const auto& y : derived_subalgebra(s).basis())
    if (!is_zero(R.phi * y)) {
      c.derived_in_kernel = false;
      c.failures.push_back("[s,s] is not contained in ker phi");
      break;
    }
  for (std::size_t i = 0; i < n && c.normalizes; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!h.s_part.contains(h.total.bracket(h.embed(R.phi.col(i), zero_vector(n)), h.embed_s(unit_vector(n, j))))) {
        c.normalizes = false;
        c.failures.push_back("phi(s) does not normalize s");
        break;
      }
  if (!is_subalgebra(h.total, R.s_prime)) {
    c.subalgebra = false;
    c.failures.push_back("s' is not a subalgebra");
  }
  return c;
}

StandardPosition standard_position(const MetricLieAlgebra& M) {
  StandardPosition sp;
  sp.steps.push_back(standard_modification(M));
  sp.steps.push_back(standard_modification(sp.steps[0].induced_metric));
  sp.steps.push_back(standard_modification(sp.steps[1].induced_metric));
  if (!sp.steps[2].is_trivial())
    throw Error(ErrorKind::FixedPointFailure, "third standard modification moved the algebra");
  sp.result = sp.steps[1];
  sp.iterations = sp.steps[1].is_trivial() ? 1 : 2;
  sp.fixed_point_verified = true;
  return sp;
}

SemidirectProduct r_algebra(const MetricLieAlgebra& M) {
  return semidirect(center_of(skew_derivations(M)), M.algebra());
}

CenterContainment center_in_r_derived(const MetricLieAlgebra& M, const StandardPosition& sp) {
  CenterContainment out;
  const ModificationResult& first = sp.steps.at(0);
  const ModificationResult& second = sp.steps.at(1);
  const SemidirectProduct& f = first.host;
  const std::size_t n = M.dim();
  const DerivationSpace z = center_of(f.derivations);

  out.s_prime_in_r = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!z.coordinates(f.derivations.combination(first.phi.col(i)))) out.s_prime_in_r = false;

  std::vector<QVec> rvecs;
  for (const auto& m : z.basis) rvecs.push_back(f.embed(*f.derivations.coordinates(m), zero_vector(n)));
  for (const auto& e : unit_range(n, 0, n)) rvecs.push_back(f.embed_s(e));
  const Subspace r = Subspace::span(f.total.dim(), rvecs);
  out.r_derived = bracket_span(f.total, r, r);

  out.center_in_s_prime = true;
  std::vector<QVec> central;
  for (const auto& x : center(sp.algebra().algebra()).basis()) {
    if (!is_zero(second.phi * x)) out.center_in_s_prime = false;
    central.push_back(f.embed(first.phi * x, x));
  }
  out.center_in_f = Subspace::span(f.total.dim(), central);
  out.holds = out.center_in_s_prime && out.r_derived.contains(out.center_in_f);
  return out;
}

}  // namespace solvmetry
