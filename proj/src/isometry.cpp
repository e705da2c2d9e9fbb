#include "solvmetry/isometry.hpp"

#include "solvmetry/errors.hpp"
#include "solvmetry/modification.hpp"
#include "solvmetry/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace solvmetry {

namespace {

std::vector<QVec> units(std::size_t dim, std::size_t from, std::size_t to) {
  std::vector<QVec> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(unit_vector(dim, i));
  return out;
}

QMat elementary(std::size_t size, std::size_t i, std::size_t j) {
  QMat m(size, size);
  m(i, j) = 1;
  return m;
}

SemisimpleDescriptor describe(SemisimpleKind kind, std::size_t n, std::string name, const std::vector<QMat>& basis,
                              std::size_t iwasawa_dim) {
  SemisimpleDescriptor d;
  d.kind = kind;
  d.n = n;
  d.algebra = LieAlgebra::from_matrix_basis(std::move(name), basis);
  const std::size_t g = d.algebra.dim();
  d.iwasawa = Subspace(g, units(g, 0, iwasawa_dim));
  d.max_compact = Subspace(g, units(g, iwasawa_dim, g));
  return d;
}

// Coordinates of the square matrix a acting on V (given by a basis), or throws.
QMat restrict_action(const QMat& a, const Subspace& V) {
  QMat out(V.dim(), V.dim());
  for (std::size_t j = 0; j < V.dim(); ++j) {
    const auto c = V.coordinates(a * V[j]);
    if (!c) throw Error(ErrorKind::PreconditionFailed, "action does not preserve the subspace");
    out.set_col(j, *c);
  }
  return out;
}

bool lex_less(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const QVec& x, const QVec& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
}

}  // namespace

std::string SemisimpleDescriptor::label() const {
  switch (kind) {
    case SemisimpleKind::Trivial:
      return "trivial";
    case SemisimpleKind::Sl2R:
      return "sl2R";
    case SemisimpleKind::SoN1:
      return "so(" + std::to_string(n) + ",1)";
  }
  return "unknown";
}

SemisimpleDescriptor trivial_descriptor() {
  SemisimpleDescriptor d;
  d.algebra = LieAlgebra::abelian(0, "trivial");
  d.iwasawa = Subspace::zero(0);
  d.max_compact = Subspace::zero(0);
  return d;
}

SemisimpleDescriptor sl2r_descriptor() {
  QMat x(2, 2);
  x(0, 0) = Rational(1, 2);
  x(1, 1) = Rational(-1, 2);
  const QMat e = elementary(2, 0, 1);
  const QMat k = e - elementary(2, 1, 0);
  return describe(SemisimpleKind::Sl2R, 2, "sl2R", {x, e, k}, 2);
}

SemisimpleDescriptor so_n1_descriptor(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "so(n,1) needs n >= 2");
  const std::size_t size = n + 1;
  // Spatial coordinates 0..n-1, time coordinate n; boosts B_i, rotations R_ij.
  auto boost = [&](std::size_t i) { return elementary(size, i, n) + elementary(size, n, i); };
  auto rotation = [&](std::size_t i, std::size_t j) { return elementary(size, i, j) - elementary(size, j, i); };
  std::vector<QMat> basis{boost(n - 1)};
  for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(boost(i) - rotation(i, n - 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.push_back(rotation(i, j));
  return describe(SemisimpleKind::SoN1, n, "so(" + std::to_string(n) + ",1)", basis, n);
}

std::optional<IwasawaMatch> recognize_iwasawa(const LieAlgebra& s1) {
  const std::size_t m = s1.dim();
  if (m == 0) return IwasawaMatch{trivial_descriptor(), QMat(0, 0)};
  if (m == 1 || !structure_flags(s1).solvable) return std::nullopt;
  const Subspace derived = derived_subalgebra(s1);
  if (derived.dim() != m - 1 || !structure_flags(restrict_to(s1, derived)).abelian) return std::nullopt;

  std::size_t xi = 0;
  while (derived.contains(unit_vector(m, xi))) ++xi;
  const QVec x = unit_vector(m, xi);
  std::vector<QVec> dbasis;
  for (std::size_t j = 0; j < m; ++j)
    if (j != xi && derived.contains(unit_vector(m, j))) dbasis.push_back(unit_vector(m, j));
  if (dbasis.size() != m - 1) dbasis = derived.basis();
  const Subspace D(m, dbasis);

  const QMat act = restrict_action(s1.ad(x), D);
  const Rational c = act(0, 0);
  if (c == 0 || !(act == c * QMat::identity(m - 1))) return std::nullopt;

  IwasawaMatch out;
  out.descriptor = m == 2 ? sl2r_descriptor() : so_n1_descriptor(m);
  const std::size_t g = out.descriptor.algebra.dim();
  // x -> c A and d_j -> N_j, then change to the unit basis of s1.
  std::vector<QVec> source{x}, image{vscale(c, unit_vector(g, 0))};
  for (std::size_t j = 0; j + 1 < m; ++j) {
    source.push_back(dbasis[j]);
    image.push_back(unit_vector(g, j + 1));
  }
  const auto inv = inverse(QMat::from_columns(source, m));
  if (!inv) throw Error(ErrorKind::InternalCheck, "recognize_iwasawa: basis change is singular");
  out.embedding = QMat::from_columns(image, g) * *inv;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (out.embedding * s1.bracket_basis(i, j) !=
          out.descriptor.algebra.bracket(out.embedding.col(i), out.embedding.col(j)))
        throw Error(ErrorKind::InternalCheck, "recognize_iwasawa: embedding is not a homomorphism");
  return out;
}

namespace {

bool is_representation(const LieAlgebra& g, const std::vector<QMat>& rho) {
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      QMat lhs(rho[a].rows(), rho[a].cols());
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (g.c(a, b, k) != 0) lhs = lhs + g.c(a, b, k) * rho[k];
      if (!(lhs == commutator(rho[a], rho[b]))) return false;
    }
  return true;
}

}  // namespace

std::vector<QMat> extend_representation(const SemisimpleDescriptor& g1, const std::vector<QMat>& iwasawa_action) {
  const LieAlgebra& g = g1.algebra;
  const std::size_t m = g1.iwasawa.dim();
  const std::size_t dim = g.dim();
  if (iwasawa_action.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "extend_representation: one matrix per Iwasawa basis vector expected");
  const std::size_t r = m == 0 ? 0 : iwasawa_action[0].rows();
  for (const auto& a : iwasawa_action)
    if (a.rows() != r || a.cols() != r) throw Error(ErrorKind::DimensionMismatch, "extend_representation: matrices must be r x r");
  if (r == 0) return std::vector<QMat>(dim, QMat(0, 0));

  const std::size_t c = dim - m;
  const std::size_t rr = r * r;
  auto var = [&](std::size_t k, std::size_t p, std::size_t q) { return (k - m) * rr + p * r + q; };

  // rho([a,b]) - [rho a, rho b] = 0 for every pair with an Iwasawa member.
  std::vector<QVec> rows;
  QVec rhs;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      if (a >= m && b >= m) continue;
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) {
          QVec row(c * rr);
          Rational constant = 0;
          for (std::size_t k = 0; k < dim; ++k) {
            const Rational& ck = g.c(a, b, k);
            if (ck == 0) continue;
            if (k < m)
              constant += ck * iwasawa_action[k](p, q);
            else
              row[var(k, p, q)] += ck;
          }
          if (b < m) {
            constant -= commutator(iwasawa_action[a], iwasawa_action[b])(p, q);
          } else {
            const QMat& A = iwasawa_action[a];
            for (std::size_t s = 0; s < r; ++s) {
              row[var(b, s, q)] -= A(p, s);
              row[var(b, p, s)] += A(s, q);
            }
          }
          rows.push_back(std::move(row));
          rhs.push_back(-constant);
        }
    }

  auto assemble = [&](const QVec& u) {
    std::vector<QMat> rho(iwasawa_action);
    for (std::size_t k = m; k < dim; ++k) {
      QMat mk(r, r);
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) mk(p, q) = u[var(k, p, q)];
      rho.push_back(mk);
    }
    return rho;
  };

  const QMat system = QMat::from_rows(rows, c * rr);
  const auto particular = c == 0 ? std::optional<QVec>(QVec{}) : solve(system, rhs);
  if (!particular || (c == 0 && !is_zero(rhs)))
    throw Error(ErrorKind::NoExtension, "the s1-action admits no extension to " + g1.label() + " (linear system inconsistent)");
  const auto kernel = c == 0 ? std::vector<QVec>{} : nullspace(system);

  std::vector<QVec> candidates{*particular};
  for (const auto& k : kernel) {
    candidates.push_back(vadd(*particular, k));
    candidates.push_back(vsub(*particular, k));
  }
  for (const auto& u : candidates) {
    auto rho = assemble(u);
    if (is_representation(g, rho)) return rho;
  }
  if (kernel.empty())
    throw Error(ErrorKind::NoExtension, "the s1-action admits no extension to " + g1.label() + " (compact relations fail)");
  throw Error(ErrorKind::AmbiguousExtension, "linear solutions for the compact part form a " + std::to_string(kernel.size()) +
                                                 "-dimensional family and no tried member is a representation");
}

QVec LRDecomposition::iwasawa_preimage(std::size_t i) const {
  const std::size_t m = s1.dim();
  QMat top(m, m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) top(p, q) = embedding(p, q);
  const auto inv = inverse(top);
  if (!inv) throw Error(ErrorKind::InternalCheck, "embedding is not onto the Iwasawa subalgebra");
  return s1.matrix() * inv->col(i);
}

LRDecomposition make_lr(const MetricLieAlgebra& M, const Subspace& s1, const Subspace& s2) {
  const LieAlgebra& L = M.algebra();
  const std::size_t n = L.dim();
  if (s1.ambient_dim() != n || s2.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "make_lr: subspace dimension");
  if (s1.dim() + s2.dim() != n || intersection(s1, s2).dim() != 0)
    throw Error(ErrorKind::PreconditionFailed, "make_lr: s1 and s2 are not complementary");
  if (!is_ideal(L, s2)) throw Error(ErrorKind::PreconditionFailed, "make_lr: s2 is not an ideal");
  if (!is_subalgebra(L, s1)) throw Error(ErrorKind::PreconditionFailed, "make_lr: s1 is not a subalgebra");
  const auto match = recognize_iwasawa(restrict_to(L, s1));
  if (!match) throw Error(ErrorKind::PreconditionFailed, "make_lr: s1 is not a recognized Iwasawa algebra");

  LRDecomposition lr;
  lr.base = M;
  lr.s1 = s1;
  lr.s2 = s2;
  lr.descriptor = match->descriptor;
  lr.embedding = match->embedding;
  std::vector<QMat> action;
  for (std::size_t i = 0; i < s1.dim(); ++i) action.push_back(restrict_action(L.ad(lr.iwasawa_preimage(i)), s2));
  lr.rho = s1.dim() == 0 ? std::vector<QMat>{} : extend_representation(lr.descriptor, action);
  return lr;
}

LRDecomposition trivial_lr(const MetricLieAlgebra& M) {
  return make_lr(M, Subspace::zero(M.dim()), Subspace::whole(M.dim()));
}

namespace {

// s2 basis followed by the preimages of the Iwasawa basis, as columns in s.
QMat quotient_frame(const LRDecomposition& lr) {
  std::vector<QVec> cols = lr.s2.basis();
  for (std::size_t i = 0; i < lr.s1.dim(); ++i) cols.push_back(lr.iwasawa_preimage(i));
  return QMat::from_columns(cols, lr.base.dim());
}

// (rho x ad)(k) on s2 + g1/k(g1), in the order of quotient_frame.
QMat compact_action(const LRDecomposition& lr, std::size_t k) {
  const std::size_t r = lr.s2.dim();
  const std::size_t m = lr.s1.dim();
  QMat out(r + m, r + m);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q) out(p, q) = lr.rho[k](p, q);
  const QMat ad = lr.descriptor.algebra.ad_basis(k);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) out(r + p, r + q) = ad(p, q);
  return out;
}

}  // namespace

bool check_suitable(const LRDecomposition& lr) {
  if (lr.is_trivial()) return true;
  const QMat frame = quotient_frame(lr);
  const QMat gram = frame.transpose() * lr.base.gram() * frame;
  for (std::size_t k = lr.s1.dim(); k < lr.descriptor.algebra.dim(); ++k)
    if (!is_skew(gram, compact_action(lr, k))) return false;
  return true;
}

namespace {

// Lexicographic key for deterministic ordering.
std::vector<QVec> key(const LRDecomposition& lr) {
  std::vector<QVec> k = lr.s1.canonical().basis();
  for (auto& v : lr.s2.canonical().basis()) k.push_back(v);
  return k;
}

std::optional<Rational> rational_root(const std::complex<double>& z, const ToleranceConfig& tol) {
  if (std::abs(z.imag()) > tol.eps_eig * std::max(1.0, std::abs(z.real()))) return std::nullopt;
  return snap_rational(z.real(), tol.snap_denominator_bound, tol.eps_eig * std::max(1.0, std::abs(z.real())));
}

// Orthogonal basis of U by exact Gram-Schmidt, each vector rescaled to the
// length of x when the scale factor is rational.
std::vector<QVec> adapted_basis(const MetricLieAlgebra& M, const QVec& x, const std::vector<QVec>& U) {
  std::vector<QVec> ortho;
  for (const auto& u : U) {
    QVec v = u;
    for (const auto& w : ortho) v = vaxpy(v, -(M.inner(v, w) / M.inner(w, w)), w);
    ortho.push_back(v);
  }
  const Rational xx = M.inner(x, x);
  for (auto& v : ortho) {
    const Rational ratio = xx / M.inner(v, v);
    if (mpz_perfect_square_p(ratio.get_num().get_mpz_t()) && mpz_perfect_square_p(ratio.get_den().get_mpz_t())) {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), ratio.get_num().get_mpz_t());
      mpz_sqrt(den.get_mpz_t(), ratio.get_den().get_mpz_t());
      Rational s{num, den};
      s.canonicalize();
      v = vscale(s, v);
    }
  }
  return ortho;
}

// Spectra of ad on s1 for the rank-one Iwasawa algebras, as (#1, #2) after
// normalizing the simple restricted root to 1: so(n,1), su(n,1), sp(n,1), f4.
std::vector<std::pair<std::size_t, std::size_t>> rank_one_patterns(std::size_t max_dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 1; a + 1 <= max_dim; ++a) out.emplace_back(a, 0);
  for (std::size_t a = 2; a + 2 <= max_dim; a += 2) out.emplace_back(a, 1);
  for (std::size_t a = 4; a + 4 <= max_dim; a += 4) out.emplace_back(a, 3);
  if (16 <= max_dim) out.emplace_back(8, 7);
  return out;
}

// Largest dim s1 compatible with the spectrum of ad X0, where X0 spans s modulo
// the nilradical. s2 carries a g1-representation, so the spectrum of ad X on s2
// is symmetric about 0 for X in the Cartan part.
std::size_t rank_one_bound(const LieAlgebra& L, const QVec& x0, double eps) {
  const auto spec = exact_spectrum(L.ad(x0));
  std::vector<std::complex<double>> values;
  for (const auto& c : spec)
    for (std::size_t i = 0; i < c.multiplicity; ++i) values.push_back(c.value);
  for (const auto& v : values)
    if (std::abs(v.imag()) > eps * std::max(1.0, std::abs(v.real()))) return 0;

  std::size_t best = 0;
  auto near = [&](double a, double b) { return std::abs(a - b) <= eps * std::max(1.0, std::abs(b)); };
  for (const auto& mu : values) {
    if (near(mu.real(), 0.0)) continue;
    std::vector<double> scaled;
    for (const auto& v : values) scaled.push_back(v.real() / mu.real());
    for (const auto& [a, b] : rank_one_patterns(L.dim())) {
      std::vector<double> rest = scaled;
      auto take = [&](double target, std::size_t count) {
        for (std::size_t t = 0; t < count; ++t) {
          auto it = std::find_if(rest.begin(), rest.end(), [&](double v) { return near(v, target); });
          if (it == rest.end()) return false;
          rest.erase(it);
        }
        return true;
      };
      if (!take(0.0, 1) || !take(1.0, a) || !take(2.0, b)) continue;
      std::vector<bool> used(rest.size(), false);
      bool symmetric = true;
      for (std::size_t i = 0; i < rest.size() && symmetric; ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (near(rest[i], 0.0)) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < rest.size(); ++j)
          if (!used[j] && near(rest[j], -rest[i])) {
            used[j] = found = true;
            break;
          }
        symmetric = found;
      }
      if (symmetric) best = std::max(best, 1 + a + b);
    }
  }
  return best;
}

}  // namespace

LrSearch enumerate_lr(const MetricLieAlgebra& M, const ToleranceConfig& tol) {
  const LieAlgebra& L = M.algebra();
  const std::size_t n = L.dim();
  if (!structure_flags(L).solvable) throw Error(ErrorKind::NotSolvable, "enumerate_lr needs a solvable algebra");
  LrSearch out;
  const Subspace nil = nilradical(L, tol);
  std::vector<LRDecomposition> found;
  std::size_t best_unsuitable = 0;

  if (nil.dim() < n) {
    // Candidate generators: the metric complement of the nilradical, the
    // greedy complement, basis vectors, then pairwise sums.
    std::vector<QVec> base;
    auto add = [&](const QVec& v) {
      if (nil.contains(v)) return;
      for (const auto& w : base)
        if (w == v) return;
      base.push_back(v);
    };
    for (const auto& v : orthocomplement(nil, Subspace::whole(n), BilinearForm(M.gram())).space.basis()) add(v);
    for (const auto& v : complement_in(nil, Subspace::whole(n))) add(v);
    for (std::size_t i = 0; i < n; ++i) add(unit_vector(n, i));
    const std::size_t singles = std::min<std::size_t>(base.size(), 6);
    for (std::size_t i = 0; i < singles; ++i)
      for (std::size_t j = i + 1; j < singles; ++j) add(vadd(base[i], base[j]));

    std::vector<std::pair<std::vector<QVec>, std::vector<QVec>>> seen;
    for (const auto& X : base) {
      const QMat adx = L.ad(X);
      for (const auto& cluster : exact_spectrum(adx)) {
        const auto c = rational_root(cluster.value, tol);
        if (!c || *c <= 0) continue;
        const QVec xt = vscale(1 / *c, X);
        const QMat a = (1 / *c) * adx;
        const QMat shifted = a - QMat::identity(n);
        const auto w1 = nullspace(shifted);
        if (w1.empty()) continue;

        std::vector<std::vector<QVec>> us{w1};
        if (w1.size() > 1)
          for (const auto& u : w1) us.push_back({u});
        const Subspace p0 = Subspace::span(n, nullspace(power(a, n)));
        const Subspace p1 = Subspace::span(n, nullspace(power(shifted, n)));
        const QMat rest_map = power(a, n) * power(shifted, n);
        std::vector<QVec> rest_cols;
        for (std::size_t j = 0; j < n; ++j) rest_cols.push_back(rest_map.col(j));
        const Subspace rest = Subspace::span(n, rest_cols);

        for (const auto& U : us) {
          const Subspace uspace = Subspace::span(n, U);
          if (!structure_flags(restrict_to(L, uspace)).abelian) continue;
          QVec x = xt;
          {
            const auto ortho = adapted_basis(M, xt, U);
            for (const auto& u : ortho) x = vaxpy(x, -(M.inner(x, u) / M.inner(u, u)), u);
          }
          std::vector<QVec> s1basis{x};
          for (const auto& u : adapted_basis(M, x, U)) s1basis.push_back(u);
          const Subspace s1(n, s1basis);
          const BilinearForm g(M.gram());

          std::vector<Subspace> p0_parts{intersection(p0, nil),
                                         orthocomplement(Subspace::span(n, {x}), p0, g).space};
          std::vector<Subspace> p1_parts{orthocomplement(uspace, p1, g).space,
                                         Subspace::span(n, complement_in(uspace, p1))};
          for (const auto& q0 : p0_parts)
            for (const auto& q1 : p1_parts) {
              const Subspace s2 = rest + q0 + q1;
              if (s1.dim() + s2.dim() != n || intersection(s1, s2).dim() != 0 || !is_ideal(L, s2)) continue;
              const auto id = std::make_pair(s1.canonical().basis(), s2.canonical().basis());
              if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
              seen.push_back(id);
              try {
                LRDecomposition lr = make_lr(M, s1, s2);
                if (check_suitable(lr)) {
                  found.push_back(std::move(lr));
                } else {
                  best_unsuitable = std::max(best_unsuitable, s1.dim());
                  out.rejected.push_back(lr.descriptor.label() + " with dim s1 = " + std::to_string(s1.dim()) +
                                         ": not suitable w.r.t. the constructed compact");
                }
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::NoExtension && e.kind() != ErrorKind::AmbiguousExtension &&
                    e.kind() != ErrorKind::PreconditionFailed)
                  throw;
                out.rejected.push_back("dim s1 = " + std::to_string(s1.dim()) + ": " + e.what());
              }
            }
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const LRDecomposition& a, const LRDecomposition& b) {
    if (a.s1.dim() != b.s1.dim()) return a.s1.dim() > b.s1.dim();
    return lex_less(key(a), key(b));
  });
  out.decompositions = std::move(found);
  out.decompositions.push_back(trivial_lr(M));

  const std::size_t best = out.decompositions.front().s1.dim();
  if (nil.dim() == n) {
    out.dim_bound = 0;
  } else if (nil.dim() + 1 == n) {
    out.dim_bound = rank_one_bound(L, complement_in(nil, Subspace::whole(n)).front(), std::max(tol.eps_eig, 1e-9));
  } else if (best == n) {
    out.dim_bound = n;
  }
  out.complete = out.dim_bound && *out.dim_bound <= best && best_unsuitable <= best;
  return out;
}

DerivationSpace d0_space(const LRDecomposition& lr) {
  const DerivationSpace skew = skew_derivations(lr.base);
  const std::size_t n = lr.base.dim();
  const std::size_t d = skew.dim();
  DerivationSpace out;
  out.ambient_dim = n;
  if (d == 0) return out;
  // Functionals vanishing exactly on s2.
  const auto annihilator = nullspace(lr.s2.dim() == 0 ? QMat(0, n) : QMat::from_rows(lr.s2.basis(), n));
  std::vector<QVec> rows;
  for (const auto& v : lr.s1.basis())
    for (std::size_t i = 0; i < n; ++i) {
      QVec row(d);
      for (std::size_t a = 0; a < d; ++a) row[a] = (skew.basis[a] * v)[i];
      rows.push_back(row);
    }
  for (const auto& w : lr.s2.basis())
    for (const auto& phi : annihilator) {
      QVec row(d);
      for (std::size_t a = 0; a < d; ++a) row[a] = vdot(phi, skew.basis[a] * w);
      rows.push_back(row);
    }
  const auto coeffs = rows.empty() ? units(d, 0, d) : nullspace(QMat::from_rows(rows, d));
  for (const auto& c : coeffs) out.basis.push_back(skew.combination(c));
  return out;
}

IsometryAlgebra assemble_isometry(const LRDecomposition& lr) {
  if (!check_suitable(lr)) throw Error(ErrorKind::PreconditionFailed, "assemble_isometry: LR-decomposition is not suitable");
  const LieAlgebra& L = lr.base.algebra();
  const LieAlgebra& g1 = lr.descriptor.algebra;
  const DerivationSpace d0 = d0_space(lr);
  const LieAlgebra s2alg = restrict_to(L, lr.s2);
  const std::size_t g = g1.dim(), d = d0.dim(), r = lr.s2.dim(), m = lr.s1.dim();
  const std::size_t t = g + d + r;
  std::vector<QMat> d0_on_s2;
  for (const auto& D : d0.basis) d0_on_s2.push_back(restrict_action(D, lr.s2));

  std::vector<Rational> c(t * t * t);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    c[(i * t + j) * t + k] = v;
    c[(j * t + i) * t + k] = -v;
  };
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) set(i, j, k, g1.c(i, j, k));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) set(i, g + d + j, g + d + k, lr.rho[i](k, j));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const auto coords = d0.coordinates(commutator(d0.basis[a], d0.basis[b]));
      if (!coords) throw Error(ErrorKind::InternalCheck, "assemble_isometry: d0 is not closed under the commutator");
      for (std::size_t k = 0; k < d; ++k) set(g + a, g + b, g + k, (*coords)[k]);
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) set(g + a, g + d + j, g + d + k, d0_on_s2[a](k, j));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) set(g + d + i, g + d + j, g + d + k, s2alg.c(i, j, k));

  IsometryAlgebra out;
  const std::string name = lr.is_trivial() ? "d0 x| " + L.name() : lr.descriptor.label() + " + d0 + s2";
  out.total = LieAlgebra(name, t, std::move(c));
  const auto violations = validate(out.total);
  if (!violations.empty())
    throw Error(ErrorKind::InternalCheck, "assembled isometry algebra fails validate: " + describe(violations.front()));
  out.descriptor = lr.descriptor;
  out.g1 = Subspace(t, units(t, 0, g));
  out.d0 = Subspace(t, units(t, g, g + d));
  out.s2 = Subspace(t, units(t, g + d, t));
  out.isotropy = Subspace(t, units(t, m, g + d));
  std::vector<QVec> comp = units(t, 0, m);
  for (auto& v : units(t, g + d, t)) comp.push_back(v);
  out.complement = Subspace(t, comp);
  if (!is_ideal(out.total, out.s2)) throw Error(ErrorKind::InternalCheck, "assembled isometry algebra: s2 is not an ideal");

  // The frame of check_suitable lists s2 first; the complement lists g1/k first.
  std::vector<QVec> frame;
  for (std::size_t i = 0; i < m; ++i) frame.push_back(lr.iwasawa_preimage(i));
  for (const auto& w : lr.s2.basis()) frame.push_back(w);
  const QMat P = QMat::from_columns(frame, L.dim());
  out.transferred_gram = P.transpose() * lr.base.gram() * P;
  for (const auto& k : out.isotropy.basis()) {
    QMat act(m + r, m + r);
    for (std::size_t q = 0; q < m + r; ++q) {
      const QVec image = out.total.bracket(k, out.complement[q]);
      for (std::size_t p = 0; p < m; ++p) act(p, q) = image[p];
      for (std::size_t p = 0; p < r; ++p) act(m + p, q) = image[g + d + p];
    }
    if (!is_skew(out.transferred_gram, act))
      throw Error(ErrorKind::InternalCheck, "isotropy does not act skew-symmetrically on the transferred metric");
  }

  // s = s1 + s2 inside total: s1 through the embedding into g1, s2 as itself.
  std::vector<QVec> split = lr.s1.basis();
  for (const auto& w : lr.s2.basis()) split.push_back(w);
  const Subspace sbasis(L.dim(), split);
  out.solvable_embedding = QMat(t, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const QVec coords = *sbasis.coordinates(unit_vector(L.dim(), i));
    QVec image(t);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t p = 0; p < g; ++p) image[p] += coords[j] * lr.embedding(p, j);
    for (std::size_t j = 0; j < r; ++j) image[g + d + j] = coords[m + j];
    out.solvable_embedding.set_col(i, image);
  }
  return out;
}

StronglySolvableFlag strongly_solvable_flag(const MetricLieAlgebra& M, const ToleranceConfig& tol) {
  const LieAlgebra& L = M.algebra();
  if (!structure_flags(L).solvable) throw Error(ErrorKind::NotSolvable, "strongly_solvable_flag needs a solvable algebra");
  StronglySolvableFlag f;
  f.acs = is_almost_completely_solvable(L, tol).acs;
  f.admissible = is_admissible(L);
  if (f.acs && f.admissible) {
    f.value = true;
    f.basis = "almost completely solvable and admissible: linear isometry group";
  } else {
    std::string missing = !f.acs && !f.admissible ? "not almost completely solvable, not admissible"
                          : !f.acs                ? "not almost completely solvable"
                                                  : "not admissible";
    f.basis = "unknown: " + missing + " (the conditions are sufficient, not necessary)";
  }
  return f;
}

bool transitive_solvable_test(const LieAlgebra& g, const Subspace& h, const Subspace& iwasawa) {
  const std::size_t n = g.dim();
  if (h.ambient_dim() != n || iwasawa.ambient_dim() != n)
    throw Error(ErrorKind::DimensionMismatch, "transitive test: subspace dimension does not match the algebra");
  if (!is_subalgebra(g, h)) throw Error(ErrorKind::PreconditionFailed, "transitive test: h is not a subalgebra");
  if (!is_subalgebra(g, iwasawa)) throw Error(ErrorKind::PreconditionFailed, "transitive test: iwasawa is not a subalgebra");
  if (!structure_flags(restrict_to(g, iwasawa)).solvable)
    throw Error(ErrorKind::PreconditionFailed, "transitive test: iwasawa is not solvable");
  const Subspace rad = radical(g);
  if (intersection(iwasawa, rad).dim() != 0)
    throw Error(ErrorKind::PreconditionFailed, "transitive test: iwasawa meets the radical");
  return (iwasawa + rad + h).dim() == n;
}

std::string to_string(Rigidity r) {
  switch (r) {
    case Rigidity::Symmetric:
      return "Symmetric";
    case Rigidity::NoFiniteVolumeQuotient:
      return "NoFiniteVolumeQuotient";
    case Rigidity::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

RigidityVerdict rigidity_verdict(const MetricLieAlgebra& M, const ToleranceConfig& tol) {
  if (!structure_flags(M.algebra()).solvable) throw Error(ErrorKind::NotSolvable, "rigidity_verdict needs a solvable algebra");
  RigidityVerdict v;
  v.acs = is_almost_completely_solvable(M.algebra(), tol).acs;
  if (!v.acs) {
    v.reason = "not almost completely solvable";
    return v;
  }
  v.positive = is_positive(M.algebra(), tol).positive;
  if (!*v.positive) {
    v.reason = "not positive";
    return v;
  }
  const StandardPosition sp = standard_position(M);
  v.standard_position_iterations = sp.iterations;
  const LrSearch search = enumerate_lr(sp.algebra(), tol);
  v.search_complete = search.complete;
  const LRDecomposition& best = search.decompositions.front();
  v.g1 = best.descriptor.label();
  v.s1_dim = best.s1.dim();
  const IsometryAlgebra iso = assemble_isometry(best);
  v.total_dim = iso.total.dim();
  v.total_unimodular = is_unimodular(iso.total);
  if (!search.complete) {
    v.reason = "LR search could not certify maximality";
    return v;
  }
  v.verdict = *v.total_unimodular ? Rigidity::Symmetric : Rigidity::NoFiniteVolumeQuotient;
  v.reason = *v.total_unimodular ? "isometry algebra is unimodular" : "isometry algebra is not unimodular";
  if (v.verdict == Rigidity::Symmetric && best.s2.dim() != 0)
    throw Error(ErrorKind::InternalCheck, "unimodular isometry algebra with nontrivial s2");
  return v;
}

}  // namespace solvmetry
