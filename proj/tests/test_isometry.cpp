#include "oracles.hpp"
#include "solvmetry/catalog.hpp"
#include "solvmetry/errors.hpp"
#include "solvmetry/isometry.hpp"
#include "solvmetry/modification.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace solvmetry;

namespace {

std::string param_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string s = info.param;
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

QMat mat2(int a, int b, int c, int d) {
  QMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

bool is_rep(const LieAlgebra& g, const std::vector<QMat>& rho) {
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      QMat lhs(rho[0].rows(), rho[0].cols());
      for (std::size_t k = 0; k < g.dim(); ++k) lhs = lhs + g.c(a, b, k) * rho[k];
      if (!(lhs == commutator(rho[a], rho[b]))) return false;
    }
  return true;
}

LieAlgebra random_basis_change(const LieAlgebra& L, std::mt19937_64& rng) {
  for (;;) {
    std::vector<QVec> vs;
    for (std::size_t i = 0; i < L.dim(); ++i) vs.push_back(oracle::random_rational(rng, L.dim(), 3));
    if (Subspace::span(L.dim(), vs).dim() == L.dim()) return restrict_to(L, Subspace(L.dim(), vs));
  }
}

}  // namespace

TEST(Descriptor, Sl2RMatchesSl2Oracle) {
  const auto d = sl2r_descriptor();
  EXPECT_EQ(d.algebra.dim(), 3u);
  EXPECT_TRUE(validate(d.algebra).empty());
  EXPECT_EQ(oracle::killing_signature(d.algebra), std::make_pair(2, 1));
  // [X, Y] = Y, [X, K] = 2Y - K, [Y, K] = -2X
  EXPECT_EQ(d.algebra.bracket_basis(0, 1), (QVec{0, 1, 0}));
  EXPECT_EQ(d.algebra.bracket_basis(0, 2), (QVec{0, 2, -1}));
  EXPECT_EQ(d.algebra.bracket_basis(1, 2), (QVec{-2, 0, 0}));
}

class SoN1 : public ::testing::TestWithParam<std::size_t> {};

TEST_P(SoN1, StructureAndSignature) {
  const std::size_t n = GetParam();
  const auto d = so_n1_descriptor(n);
  const LieAlgebra& g = d.algebra;
  EXPECT_EQ(g.dim(), n * (n + 1) / 2);
  EXPECT_TRUE(validate(g).empty());
  EXPECT_EQ(oracle::killing_signature(g), std::make_pair(static_cast<int>(n), static_cast<int>(n * (n - 1) / 2)));
  for (std::size_t i = 1; i < n; ++i) {
    EXPECT_EQ(g.bracket_basis(0, i), unit_vector(g.dim(), i));
    for (std::size_t j = 1; j < n; ++j) EXPECT_TRUE(is_zero(g.bracket_basis(i, j)));
  }
  EXPECT_TRUE(is_subalgebra(g, d.max_compact));
  EXPECT_TRUE(structure_flags(restrict_to(g, d.iwasawa)).solvable);
  EXPECT_EQ((d.iwasawa + d.max_compact).dim(), g.dim());
  // The maximal compact part is negative definite for the Killing form.
  const QMat P = d.max_compact.matrix();
  const Signature kc = signature(BilinearForm(P.transpose() * killing_form(g).matrix() * P));
  EXPECT_EQ(kc.positive, 0u);
  EXPECT_EQ(kc.zero, 0u);
}

INSTANTIATE_TEST_SUITE_P(Ranks, SoN1, ::testing::Values(2, 3, 4, 5));

TEST(Recognize, Examples) {
  const auto aff = recognize_iwasawa(catalog("aff1").algebra());
  ASSERT_TRUE(aff);
  EXPECT_EQ(aff->descriptor.kind, SemisimpleKind::Sl2R);
  EXPECT_EQ(aff->descriptor.algebra.dim(), 3u);

  const auto hyp = recognize_iwasawa(catalog("hyperbolic:3").algebra());
  ASSERT_TRUE(hyp);
  EXPECT_EQ(hyp->descriptor.kind, SemisimpleKind::SoN1);
  EXPECT_EQ(hyp->descriptor.algebra.dim(), 6u);
  EXPECT_EQ(oracle::killing_signature(hyp->descriptor.algebra), std::make_pair(3, 3));

  EXPECT_FALSE(recognize_iwasawa(catalog("heisenberg3").algebra()));
  EXPECT_FALSE(recognize_iwasawa(catalog("diag_solv:1,2").algebra()));
  EXPECT_FALSE(recognize_iwasawa(catalog("abelian:2").algebra()));
  EXPECT_FALSE(recognize_iwasawa(catalog("aff1_std4").algebra()));

  const auto trivial = recognize_iwasawa(LieAlgebra::abelian(0));
  ASSERT_TRUE(trivial);
  EXPECT_EQ(trivial->descriptor.kind, SemisimpleKind::Trivial);
}

TEST(Recognize, InvariantUnderBasisChange) {
  std::mt19937_64 rng(11);
  for (const char* name : {"aff1", "hyperbolic:3", "hyperbolic:4"}) {
    const LieAlgebra L = catalog(name).algebra();
    for (int trial = 0; trial < 5; ++trial) {
      const LieAlgebra moved = random_basis_change(L, rng);
      const auto match = recognize_iwasawa(moved);
      ASSERT_TRUE(match) << name;
      EXPECT_EQ(match->descriptor.algebra.dim(), L.dim() == 2 ? 3u : L.dim() * (L.dim() + 1) / 2);
      // The embedding is a homomorphism onto the Iwasawa part.
      for (std::size_t i = 0; i < moved.dim(); ++i)
        for (std::size_t j = 0; j < moved.dim(); ++j)
          EXPECT_EQ(match->embedding * moved.bracket_basis(i, j),
                    match->descriptor.algebra.bracket(match->embedding.col(i), match->embedding.col(j)));
      std::vector<QVec> cols;
      for (std::size_t j = 0; j < moved.dim(); ++j) cols.push_back(match->embedding.col(j));
      EXPECT_EQ(Subspace::span(match->descriptor.algebra.dim(), cols), match->descriptor.iwasawa);
    }
  }
}

TEST(Extend, StandardRepresentation) {
  QMat x(2, 2);
  x(0, 0) = Rational(1, 2);
  x(1, 1) = Rational(-1, 2);
  const auto d = sl2r_descriptor();
  const auto rho = extend_representation(d, {x, mat2(0, 1, 0, 0)});
  ASSERT_EQ(rho.size(), 3u);
  // rho(F) from [H,F] = -2F and [E,F] = H: rho(K) = E - F.
  EXPECT_EQ(rho[2], mat2(0, 1, -1, 0));
  EXPECT_TRUE(is_rep(d.algebra, rho));
}

TEST(Extend, AdjointRepresentation) {
  const auto d = sl2r_descriptor();
  const auto rho = extend_representation(d, {d.algebra.ad_basis(0), d.algebra.ad_basis(1)});
  EXPECT_EQ(rho[2], d.algebra.ad_basis(2));
}

TEST(Extend, SoN1Adjoint) {
  const auto d = so_n1_descriptor(3);
  std::vector<QMat> action;
  for (std::size_t i = 0; i < 3; ++i) action.push_back(d.algebra.ad_basis(i));
  const auto rho = extend_representation(d, action);
  for (std::size_t k = 0; k < d.algebra.dim(); ++k) EXPECT_EQ(rho[k], d.algebra.ad_basis(k));
}

TEST(Extend, Failures) {
  const auto d = sl2r_descriptor();
  QMat one(1, 1), zero(1, 1);
  one(0, 0) = 1;
  // Not even a representation of aff(1).
  EXPECT_THROW(
      {
        try {
          extend_representation(d, {one, one});
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::NoExtension);
          throw;
        }
      },
      Error);
  // A representation of aff(1) whose X-weight is not symmetric.
  try {
    extend_representation(d, {one, zero});
    FAIL() << "expected NoExtension";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoExtension);
  }
  EXPECT_EQ(extend_representation(d, {QMat(0, 0), QMat(0, 0)}).size(), 3u);
}

TEST(Suitable, Aff1IdentityAndAdversarial) {
  const MetricLieAlgebra M = catalog("aff1");
  const auto lr = make_lr(M, Subspace::whole(2), Subspace::zero(2));
  EXPECT_TRUE(check_suitable(lr));
  EXPECT_TRUE(check_suitable(trivial_lr(M)));

  QMat g(2, 2);
  g(0, 0) = 1;
  g(0, 1) = g(1, 0) = 1;
  g(1, 1) = 2;
  const MetricLieAlgebra bad(M.algebra(), g);
  EXPECT_FALSE(check_suitable(make_lr(bad, Subspace::whole(2), Subspace::zero(2))));
  // The search adapts the embedding to the metric and still finds sl2R.
  const auto search = enumerate_lr(bad);
  EXPECT_EQ(search.decompositions.front().descriptor.kind, SemisimpleKind::Sl2R);
  EXPECT_TRUE(search.complete);
}

TEST(MakeLr, Preconditions) {
  const MetricLieAlgebra M = catalog("hyperbolic:3");
  EXPECT_THROW(make_lr(M, Subspace::whole(3), Subspace::span(3, {unit_vector(3, 1)})), Error);
  // s2 = span(X) is not an ideal.
  EXPECT_THROW(make_lr(M, Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)}), Subspace::span(3, {unit_vector(3, 0)})),
               Error);
  // s1 = span(X, e1) with s2 = span(e2): X acts by 1 on a line, no sl2 extension.
  try {
    make_lr(M, Subspace(3, {unit_vector(3, 0), unit_vector(3, 1)}), Subspace::span(3, {unit_vector(3, 2)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoExtension);
  }
}

TEST(Enumerate, Examples) {
  const auto h3 = enumerate_lr(catalog("heisenberg3"));
  ASSERT_EQ(h3.decompositions.size(), 1u);
  EXPECT_TRUE(h3.decompositions[0].is_trivial());
  EXPECT_TRUE(h3.complete);

  const auto aff = enumerate_lr(catalog("aff1"));
  EXPECT_EQ(aff.decompositions.front().s1.dim(), 2u);
  EXPECT_EQ(aff.decompositions.front().descriptor.kind, SemisimpleKind::Sl2R);
  EXPECT_TRUE(aff.decompositions.back().is_trivial());
  EXPECT_TRUE(aff.complete);

  const auto hyp = enumerate_lr(catalog("hyperbolic:3"));
  EXPECT_EQ(hyp.decompositions.front().descriptor.label(), "so(3,1)");
  EXPECT_TRUE(hyp.complete);

  const auto diag = enumerate_lr(catalog("diag_solv:1,2"));
  EXPECT_EQ(diag.decompositions.size(), 1u);
  EXPECT_EQ(diag.dim_bound, std::optional<std::size_t>(0));
  EXPECT_TRUE(diag.complete);

  const auto std4 = enumerate_lr(catalog("aff1_std4"));
  EXPECT_EQ(std4.decompositions.front().s1.dim(), 2u);
  EXPECT_EQ(std4.decompositions.front().s2.dim(), 2u);
  EXPECT_TRUE(std4.complete);

  const auto ah = enumerate_lr(catalog("aff1xh3"));
  EXPECT_EQ(ah.decompositions.front().descriptor.kind, SemisimpleKind::Sl2R);
  EXPECT_TRUE(ah.complete);
}

TEST(D0, Examples) {
  const MetricLieAlgebra aff = catalog("aff1");
  EXPECT_EQ(d0_space(make_lr(aff, Subspace::whole(2), Subspace::zero(2))).dim(), 0u);

  const MetricLieAlgebra h3 = catalog("heisenberg3");
  EXPECT_EQ(d0_space(trivial_lr(h3)).dim(), skew_derivations(h3).dim());

  const auto entry = catalog_entry("nilpotent5");
  ASSERT_TRUE(entry.expected_skew_derivation);
  EXPECT_TRUE(d0_space(trivial_lr(entry.algebra)).coordinates(*entry.expected_skew_derivation));
}

TEST(Assemble, Aff1IsSl2) {
  const auto iso = assemble_isometry(make_lr(catalog("aff1"), Subspace::whole(2), Subspace::zero(2)));
  EXPECT_EQ(iso.total.dim(), 3u);
  EXPECT_EQ(iso.isotropy.dim(), 1u);
  EXPECT_EQ(oracle::killing_signature(iso.total), std::make_pair(2, 1));
  const Signature s = signature(killing_form(iso.total));
  EXPECT_EQ(s.positive, 2u);
  EXPECT_EQ(s.negative, 1u);
}

TEST(Assemble, HyperbolicThreeIsSo31) {
  const auto search = enumerate_lr(catalog("hyperbolic:3"));
  const auto iso = assemble_isometry(search.decompositions.front());
  EXPECT_EQ(iso.total.dim(), 6u);
  EXPECT_EQ(iso.isotropy.dim(), 3u);
  EXPECT_EQ(oracle::killing_signature(iso.total), std::make_pair(3, 3));
  EXPECT_TRUE(is_unimodular(iso.total));
}

TEST(Assemble, HeisenbergTrivial) {
  const auto iso = assemble_isometry(trivial_lr(catalog("heisenberg3")));
  EXPECT_EQ(iso.total.dim(), 4u);
  EXPECT_EQ(iso.isotropy.dim(), 1u);
}

TEST(Assemble, Aff1xH3) {
  const auto search = enumerate_lr(catalog("aff1xh3"));
  const auto iso = assemble_isometry(search.decompositions.front());
  EXPECT_EQ(iso.total.dim(), 7u);
  EXPECT_EQ(iso.d0.dim(), 1u);
}

TEST(Assemble, RejectsUnsuitable) {
  QMat g(2, 2);
  g(0, 0) = 1;
  g(0, 1) = g(1, 0) = 1;
  g(1, 1) = 2;
  const MetricLieAlgebra bad(catalog("aff1").algebra(), g);
  EXPECT_THROW(assemble_isometry(make_lr(bad, Subspace::whole(2), Subspace::zero(2))), Error);
}

class IsometryCatalog : public ::testing::TestWithParam<std::string> {};

TEST_P(IsometryCatalog, AssemblyInvariants) {
  const MetricLieAlgebra M = catalog(GetParam());
  const LieAlgebra& L = M.algebra();
  const auto search = enumerate_lr(M);
  ASSERT_FALSE(search.decompositions.empty());
  EXPECT_TRUE(search.decompositions.back().is_trivial());
  for (std::size_t i = 1; i < search.decompositions.size(); ++i)
    EXPECT_GE(search.decompositions[i - 1].s1.dim(), search.decompositions[i].s1.dim());

  for (const auto& lr : search.decompositions) {
    EXPECT_EQ((lr.s1 + lr.s2).dim(), L.dim());
    EXPECT_TRUE(is_ideal(L, lr.s2));
    if (!lr.is_trivial()) {
      EXPECT_TRUE(is_rep(lr.descriptor.algebra, lr.rho));
    }
    const auto iso = assemble_isometry(lr);
    const LieAlgebra& T = iso.total;
    EXPECT_TRUE(validate(T).empty());
    EXPECT_EQ(T.dim(), lr.descriptor.algebra.dim() + iso.d0.dim() + lr.s2.dim());
    EXPECT_TRUE(bracket_span(T, iso.g1, iso.d0).dim() == 0);
    EXPECT_TRUE(is_ideal(T, iso.s2));
    EXPECT_TRUE(is_subalgebra(T, iso.isotropy));
    // s sits inside total as a subalgebra, and s + isotropy = total.
    const QMat& E = iso.solvable_embedding;
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (std::size_t b = 0; b < L.dim(); ++b)
        EXPECT_EQ(E * L.bracket_basis(a, b), T.bracket(E.col(a), E.col(b)));
    std::vector<QVec> cols;
    for (std::size_t j = 0; j < L.dim(); ++j) cols.push_back(E.col(j));
    const Subspace image = Subspace::span(T.dim(), cols);
    EXPECT_EQ(image.dim(), L.dim());
    EXPECT_EQ((image + iso.isotropy).dim(), T.dim());
    if (lr.is_trivial()) {
      EXPECT_EQ(T, semidirect(skew_derivations(M), L).total);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Solvable, IsometryCatalog, ::testing::ValuesIn(solvable_catalog_names()), param_name);

TEST(Rigidity, Verdicts) {
  EXPECT_EQ(rigidity_verdict(catalog("hyperbolic:3")).verdict, Rigidity::Symmetric);
  EXPECT_EQ(rigidity_verdict(catalog("hyperbolic:4")).verdict, Rigidity::Symmetric);
  EXPECT_EQ(rigidity_verdict(catalog("aff1")).verdict, Rigidity::Symmetric);
  EXPECT_EQ(rigidity_verdict(catalog("spiral3")).verdict, Rigidity::Symmetric);
  EXPECT_EQ(rigidity_verdict(catalog("diag_solv:1,2")).verdict, Rigidity::NoFiniteVolumeQuotient);
  EXPECT_EQ(rigidity_verdict(catalog("aff1_std4")).verdict, Rigidity::Inconclusive);  // weight -1/2 on the nilradical

  const auto h3 = rigidity_verdict(catalog("heisenberg3"));
  EXPECT_EQ(h3.verdict, Rigidity::Inconclusive);
  EXPECT_EQ(h3.positive, std::optional<bool>(false));
  EXPECT_EQ(rigidity_verdict(catalog("oscillator4")).verdict, Rigidity::Inconclusive);
  EXPECT_THROW(rigidity_verdict(catalog("sl2")), Error);
}

TEST(Rigidity, SymmetricImpliesUnimodular) {
  for (const auto& name : solvable_catalog_names()) {
    const auto v = rigidity_verdict(catalog(name));
    if (v.verdict == Rigidity::Symmetric) {
      EXPECT_EQ(v.total_unimodular, std::optional<bool>(true)) << name;
    }
    if (v.verdict != Rigidity::Inconclusive) {
      EXPECT_EQ(v.search_complete, std::optional<bool>(true)) << name;
    }
  }
}

TEST(StronglySolvable, Flags) {
  EXPECT_EQ(strongly_solvable_flag(catalog("heisenberg3")).value, std::optional<bool>(true));
  const auto h2xr = strongly_solvable_flag(catalog("h2xR"));
  EXPECT_FALSE(h2xr.value);
  EXPECT_TRUE(h2xr.acs);
  EXPECT_FALSE(h2xr.admissible);
  const auto osc = strongly_solvable_flag(catalog("oscillator4"));
  EXPECT_FALSE(osc.value);
  EXPECT_FALSE(osc.acs);
}

TEST(Transitive, Examples) {
  const LieAlgebra sl2 = catalog("sl2").algebra();  // H, E, F
  const Subspace so2 = Subspace::span(3, {QVec{0, 1, -1}});
  const Subspace borel = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
  EXPECT_TRUE(transitive_solvable_test(sl2, so2, borel));
  EXPECT_FALSE(transitive_solvable_test(sl2, Subspace::zero(3), borel));
  const LieAlgebra aff = catalog("aff1").algebra();
  EXPECT_TRUE(transitive_solvable_test(aff, Subspace::zero(2), Subspace::zero(2)));
}

TEST(Transitive, Preconditions) {
  const LieAlgebra sl2 = catalog("sl2").algebra();
  const Subspace borel = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
  EXPECT_THROW(transitive_solvable_test(sl2, Subspace::span(3, {QVec{1, 1, 0}, unit_vector(3, 2)}), borel), Error);
  EXPECT_THROW(transitive_solvable_test(sl2, Subspace::zero(3), Subspace::whole(3)), Error);
  const LieAlgebra lr = catalog("sl2_plus_R2").algebra();
  EXPECT_THROW(transitive_solvable_test(lr, Subspace::zero(5), Subspace::span(5, {unit_vector(5, 3)})), Error);
}
