#include <gtest/gtest.h>

#include "dualz/diffstruct.hpp"
#include "dualz/errors.hpp"
#include "dualz/fuzz.hpp"
#include "dualz/normal_form.hpp"
#include "dualz/quotients.hpp"

using namespace dualz;

namespace {

DiffStructure lower(long u) { return DiffStructure::make(2, IntMatrix{{0, 0}, {u, 0}}); }

void expect_valid_normal_form(const DiffStructure& d) {
  const NormalForm nf = normalize(d);
  EXPECT_EQ(nf.im_rank + nf.ker_rank, d.rank());
  ASSERT_TRUE(is_unimodular(nf.certificate));
  EXPECT_EQ(nf.certificate * d.e(), nf.differential() * nf.certificate);
  EXPECT_EQ(rank(nf.mu), nf.im_rank);
}

}  // namespace

TEST(DiffStructure, Validation) {
  EXPECT_THROW(DiffStructure::make(2, IntMatrix{{1, 0}, {0, 0}}), InvalidStructureError);
  EXPECT_THROW(DiffStructure::make(3, IntMatrix{{0}}), DimensionError);
  EXPECT_NO_THROW(DiffStructure::make(0, IntMatrix(0, 0)));
}

TEST(Normalize, Examples) {
  const NormalForm a = normalize(lower(2));
  EXPECT_EQ(a.im_rank, 1u);
  EXPECT_EQ(a.ker_rank, 1u);
  EXPECT_EQ(a.mu, IntMatrix{{2}});
  EXPECT_EQ(a.certificate, IntMatrix::identity(2));

  const NormalForm b = normalize(DiffStructure::make(2, IntMatrix{{2, 4}, {-1, -2}}));
  EXPECT_EQ(b.im_rank, 1u);
  EXPECT_EQ(b.ker_rank, 1u);
  EXPECT_EQ(b.mu, IntMatrix{{1}});

  const NormalForm c = normalize(DiffStructure::make(2, IntMatrix(2, 2)));
  EXPECT_EQ(c.im_rank, 0u);
  EXPECT_EQ(c.ker_rank, 2u);
  EXPECT_EQ(c.mu.cols(), 0u);
}

TEST(Normalize, FuzzedCertificates) {
  Rng rng(31);
  for (int k = 0; k < 200; ++k) expect_valid_normal_form(random_diff_structure(rng, 8, 30));
}

TEST(Normalize, TorsionOfDirectSum) {
  Rng rng(32);
  for (int k = 0; k < 60; ++k) {
    const auto d1 = random_diff_structure(rng, 4, 12);
    const auto d2 = random_diff_structure(rng, 4, 12);
    const auto sum = cokernel_invariants(normalize(direct_sum(d1, d2)).mu).torsion;
    const auto parts = cokernel_invariants(normalize(d1).mu).torsion.merged(
        cokernel_invariants(normalize(d2).mu).torsion);
    EXPECT_EQ(sum, parts);
  }
}

TEST(IsProjective, Examples) {
  EXPECT_TRUE(is_projective(lower(1)));
  EXPECT_FALSE(is_projective(lower(2)));
  EXPECT_FALSE(is_projective(DiffStructure::make(1, IntMatrix{{0}})));
  EXPECT_TRUE(is_projective(DiffStructure::projective(3)));
}

TEST(IsProjective, AgreesWithNullHomotopicIdentity) {
  Rng rng(33);
  for (int k = 0; k < 150; ++k) {
    const auto d = random_diff_structure(rng, 6, 6);
    EXPECT_EQ(is_projective(d), is_null_homotopic(DiffMorphism::identity(d)).has_value()) << d.e();
  }
}

TEST(Embedding, RoundTrips) {
  EXPECT_EQ(from_embedding(SubgroupEmbedding::from_divisors({2})), lower(2));
  EXPECT_EQ(to_embedding(lower(2)), SubgroupEmbedding::from_divisors({2}));
  const auto p = to_embedding(DiffStructure::make(2, IntMatrix{{2, 4}, {-1, -2}}));
  EXPECT_TRUE(iso_embeddings(p, SubgroupEmbedding::from_divisors({1})).isomorphic);

  Rng rng(34);
  for (int k = 0; k < 100; ++k) {
    const auto e = random_embedding(rng, {5, 20, false, false});
    EXPECT_TRUE(iso_embeddings(to_embedding(from_embedding(e)), e).isomorphic);
    const auto d = random_diff_structure(rng, 6, 12);
    const auto back = from_embedding(to_embedding(d));
    EXPECT_EQ(back.rank(), d.rank());
    EXPECT_TRUE(iso_embeddings(to_embedding(back), to_embedding(d)).isomorphic);
  }
}

TEST(Morphism, Checks) {
  EXPECT_TRUE(check_morphism(lower(2), lower(2), IntMatrix::identity(2)));
  EXPECT_TRUE(check_morphism(lower(2), lower(3), IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_FALSE(check_morphism(lower(2), lower(3), IntMatrix::identity(2)));
  EXPECT_THROW(check_morphism(lower(2), lower(3), IntMatrix::identity(3)), DimensionError);
  EXPECT_THROW(DiffMorphism::make(lower(2), lower(3), IntMatrix::identity(2)), InvalidStructureError);
}

TEST(Morphism, Compose) {
  const auto f = DiffMorphism::make(lower(2), lower(6), IntMatrix{{1, 0}, {0, 3}});
  const auto g = DiffMorphism::make(lower(6), lower(6), IntMatrix{{1, 0}, {5, 1}});
  const auto h = compose(g, f);
  EXPECT_EQ(h.f(), g.f() * f.f());
  EXPECT_THROW(compose(f, g), DimensionError);
}

TEST(Intertwiners, BasisSpansAll) {
  Rng rng(35);
  for (int k = 0; k < 60; ++k) {
    const auto d1 = random_diff_structure(rng, 4, 9);
    const auto d2 = random_diff_structure(rng, 4, 9);
    const IntMatrix b = intertwiner_basis(d1, d2);
    for (std::size_t j = 0; j < b.cols(); ++j)
      EXPECT_TRUE(check_morphism(d1, d2, unflatten(b.col(j), d2.rank(), d1.rank())));
    EXPECT_TRUE(Lattice::from_columns(b).saturated());
  }
}

TEST(Epivalence, ExtractsDiagonalBlocks) {
  const auto src = lower(2);
  const auto tgt = lower(6);
  // a = 1, b = 3, c = 7
  const auto f = DiffMorphism::make(src, tgt, IntMatrix{{1, 0}, {7, 3}});
  const auto img = epivalence_image(f, 1, 1);
  EXPECT_EQ(img.a, IntMatrix{{1}});
  EXPECT_EQ(img.b, IntMatrix{{3}});
  EXPECT_EQ(img.c, IntMatrix{{7}});
  EXPECT_TRUE(img.square_commutes());

  const auto id = epivalence_image(DiffMorphism::identity(src), 1, 1);
  EXPECT_EQ(id.a, IntMatrix::identity(1));
  EXPECT_EQ(id.b, IntMatrix::identity(1));
}

TEST(Epivalence, ForgetsLowerBlock) {
  const auto d = lower(2);
  const auto f1 = epivalence_image(DiffMorphism::make(d, d, IntMatrix{{1, 0}, {0, 1}}), 1, 1);
  const auto f2 = epivalence_image(DiffMorphism::make(d, d, IntMatrix{{1, 0}, {5, 1}}), 1, 1);
  EXPECT_EQ(f1.a, f2.a);
  EXPECT_EQ(f1.b, f2.b);
  EXPECT_NE(f1.c, f2.c);
}

TEST(Epivalence, ReflectsIsomorphisms) {
  Rng rng(36);
  int isos = 0;
  for (int k = 0; k < 200; ++k) {
    const auto d = random_diff_structure(rng, 5, 9);
    const auto w = random_unimodular(rng, d.rank(), 6);
    const auto d2 = DiffStructure::make(d.rank(), w.matrix * d.e() * w.inverse);
    IntMatrix f = random_intertwiner(rng, d, d2, 1);
    if (rng.chance(1, 2)) f = w.matrix;
    const auto m = DiffMorphism::make(d, d2, f);
    const auto img = epivalence_image(m);
    EXPECT_TRUE(img.square_commutes());
    const bool iso = is_isomorphism(m);
    isos += iso;
    EXPECT_EQ(iso, is_unimodular(img.a) && is_unimodular(img.b));
  }
  EXPECT_GT(isos, 0);
}

TEST(Epivalence, RejectsNonNormalShape) {
  const auto d = DiffStructure::make(2, IntMatrix{{2, 4}, {-1, -2}});
  EXPECT_THROW(epivalence_image(DiffMorphism::identity(d), 1, 1), InvalidStructureError);
}

TEST(Resolution, Examples) {
  const auto a = complete_resolution(SubgroupEmbedding::from_divisors({2}), 3);
  EXPECT_EQ(a.module.rank(), 4u);
  EXPECT_EQ(a.positions.size(), 3u);
  EXPECT_TRUE(a.verified());

  EXPECT_TRUE(complete_resolution(SubgroupEmbedding::from_divisors({1}), 2).verified());

  const auto s = complete_resolution(SubgroupEmbedding::stalks(1), 2);
  EXPECT_TRUE(s.verified());
  EXPECT_EQ(s.differential, (IntMatrix{{0, 0}, {1, 0}}));

  EXPECT_THROW(complete_resolution(SubgroupEmbedding::stalks(1), 0), DimensionError);
}

TEST(Resolution, FuzzedWindows) {
  Rng rng(37);
  for (int k = 0; k < 60; ++k) {
    const auto e = random_embedding(rng, {5, 9, false, false});
    const auto w = complete_resolution(e, 3);
    EXPECT_TRUE(w.verified());
    EXPECT_TRUE(is_projective(w.module));
  }
}

TEST(Resolution, ExactnessCatchesFiniteIndex) {
  // Ker of [2] on Z is 0; ker of the zero map is Z but Im 2 has index 2.
  EXPECT_FALSE(exact_at(IntMatrix{{2}}, IntMatrix{{0}}));
  EXPECT_TRUE(exact_at(IntMatrix{{1}}, IntMatrix{{0}}));
}
