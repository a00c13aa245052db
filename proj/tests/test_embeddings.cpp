#include <gtest/gtest.h>

#include "dualz/embedding.hpp"
#include "dualz/errors.hpp"
#include "dualz/fuzz.hpp"
#include "dualz/normal_form.hpp"
#include "oracles.hpp"

using namespace dualz;

namespace {

const SubgroupEmbedding kSixOne = SubgroupEmbedding::make(2, IntMatrix{{6, 0}, {0, 1}});
const SubgroupEmbedding kTwoThree = SubgroupEmbedding::make(2, IntMatrix{{2, 0}, {0, 3}});

SubgroupEmbedding cyclic(long g) { return SubgroupEmbedding::from_divisors({Int(g)}); }

}  // namespace

TEST(MakeEmbedding, Validation) {
  EXPECT_NO_THROW(SubgroupEmbedding::make(2, IntMatrix{{6, 0}, {0, 1}}));
  EXPECT_THROW(SubgroupEmbedding::make(1, IntMatrix{{0}}), NotInjectiveError);
  EXPECT_THROW(SubgroupEmbedding::make(3, IntMatrix{{1}, {2}}), DimensionError);
  EXPECT_THROW(SubgroupEmbedding::make(2, IntMatrix{{1, 2}, {2, 4}}), NotInjectiveError);
  const auto e = SubgroupEmbedding::make(2, IntMatrix(2, 0));
  EXPECT_EQ(e.ambient_rank(), 2u);
  EXPECT_EQ(e.sub_rank(), 0u);
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_embedding(kSixOne).divisors, (IntVector{1, 6}));
  EXPECT_EQ(decompose_embedding(cyclic(2)).divisors, (IntVector{2}));
  EXPECT_EQ(decompose_embedding(SubgroupEmbedding::stalks(2)).divisors, (IntVector{0, 0}));
  EXPECT_EQ(decompose_embedding(SubgroupEmbedding::make(3, IntMatrix{{4}, {0}, {6}})).divisors,
            (IntVector{0, 0, 2}));
}

TEST(Decompose, ShapeAndReassembly) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto e = random_embedding(rng, {8, 99, false, true});
    const auto d = decompose_embedding(e);
    ASSERT_EQ(d.divisors.size(), e.ambient_rank());
    EXPECT_EQ(std::count(d.divisors.begin(), d.divisors.end(), Int(0)),
              long(e.ambient_rank() - e.sub_rank()));
    const auto rebuilt = SubgroupEmbedding::from_divisors(d.divisors);
    const auto iso = iso_embeddings(rebuilt, e);
    ASSERT_TRUE(iso.isomorphic);
    EXPECT_TRUE(verify_certificate(rebuilt, e, *iso.certificate));
  }
}

TEST(Decompose, InvariantUnderBaseChange) {
  Rng rng(22);
  for (int k = 0; k < 100; ++k) {
    const auto e = random_embedding(rng, {5, 30, false, false});
    const auto b = random_unimodular(rng, e.ambient_rank(), 10);
    const auto a = random_unimodular(rng, e.sub_rank(), 10);
    const auto moved = SubgroupEmbedding::make(e.ambient_rank(), b.matrix * e.matrix() * a.matrix);
    EXPECT_EQ(decompose_embedding(moved), decompose_embedding(e));
  }
}

TEST(Decompose, TorsionMatchesMinorOracle) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto e = random_embedding(rng, {4, 9, false, false});
    EXPECT_EQ(cokernel_torsion(e).factors(),
              FiniteAbGroupInv::from_cyclic_orders(oracle::cokernel_torsion_factors(e.matrix())).factors());
  }
}

TEST(Iso, KrsExample) {
  const auto r = iso_embeddings(kSixOne, kTwoThree);
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(verify_certificate(kSixOne, kTwoThree, *r.certificate));
  const EmbeddingIsomorphism fixed{IntMatrix{{1, 2}, {1, 3}}, IntMatrix{{3, 1}, {2, 1}}};
  EXPECT_TRUE(verify_certificate(kSixOne, kTwoThree, fixed));
}

TEST(Iso, CrossPairsAreNotIsomorphic) {
  for (long l : {6, 1})
    for (long r : {2, 3}) EXPECT_FALSE(iso_embeddings(cyclic(l), cyclic(r)).isomorphic) << l << " " << r;
  EXPECT_FALSE(iso_embeddings(cyclic(6), cyclic(2)).isomorphic);
}

TEST(Iso, SelfHasIdentityCertificateUpToBasis) {
  const auto r = iso_embeddings(kSixOne, kSixOne);
  ASSERT_TRUE(r.isomorphic);
  EXPECT_TRUE(verify_certificate(kSixOne, kSixOne, *r.certificate));
  const EmbeddingIsomorphism id{IntMatrix::identity(2), IntMatrix::identity(2)};
  EXPECT_TRUE(verify_certificate(kSixOne, kSixOne, id));
}

TEST(Iso, RankMismatch) {
  EXPECT_FALSE(iso_embeddings(SubgroupEmbedding::stalks(1), cyclic(1)).isomorphic);
  EXPECT_FALSE(iso_embeddings(SubgroupEmbedding::stalks(1), SubgroupEmbedding::stalks(2)).isomorphic);
}

TEST(Iso, EquivalenceRelation) {
  Rng rng(24);
  for (int k = 0; k < 80; ++k) {
    const auto e = random_embedding(rng, {4, 12, false, false});
    const auto b = random_unimodular(rng, e.ambient_rank(), 6);
    const auto a = random_unimodular(rng, e.sub_rank(), 6);
    const auto f = SubgroupEmbedding::make(e.ambient_rank(), b.matrix * e.matrix() * a.matrix);
    const auto b2 = random_unimodular(rng, e.ambient_rank(), 6);
    const auto g = SubgroupEmbedding::make(e.ambient_rank(), b2.matrix * f.matrix());
    EXPECT_TRUE(iso_embeddings(e, e).isomorphic);
    const auto ef = iso_embeddings(e, f);
    const auto fe = iso_embeddings(f, e);
    ASSERT_TRUE(ef.isomorphic && fe.isomorphic);
    EXPECT_TRUE(verify_certificate(e, f, *ef.certificate));
    EXPECT_TRUE(verify_certificate(f, e, *fe.certificate));
    EXPECT_TRUE(iso_embeddings(f, g).isomorphic && iso_embeddings(e, g).isomorphic);
    const auto other = random_embedding(rng, {4, 12, false, false});
    EXPECT_EQ(iso_embeddings(e, other).isomorphic, iso_embeddings(other, e).isomorphic);
  }
}

TEST(SplitOffFree, Examples) {
  const auto s = split_off_free(SubgroupEmbedding::make(2, IntMatrix{{2}, {0}}));
  EXPECT_EQ(s.stalk_multiplicity, 1u);
  EXPECT_TRUE(iso_embeddings(s.reduced, cyclic(2)).isomorphic);

  const auto full = split_off_free(kSixOne);
  EXPECT_EQ(full.stalk_multiplicity, 0u);
  EXPECT_TRUE(iso_embeddings(full.reduced, kSixOne).isomorphic);

  const auto empty = split_off_free(SubgroupEmbedding::stalks(1));
  EXPECT_EQ(empty.stalk_multiplicity, 1u);
  EXPECT_EQ(empty.reduced.ambient_rank(), 0u);
}

TEST(SplitOffFree, PartsReassemble) {
  Rng rng(25);
  for (int k = 0; k < 100; ++k) {
    const auto e = random_embedding(rng, {6, 20, false, true});
    const auto s = split_off_free(e);
    EXPECT_EQ(s.reduced.sub_rank(), s.reduced.ambient_rank());
    EXPECT_EQ(s.stalk_multiplicity + s.reduced.ambient_rank(), e.ambient_rank());
    const auto whole = direct_sum(s.reduced, SubgroupEmbedding::stalks(s.stalk_multiplicity));
    EXPECT_TRUE(iso_embeddings(whole, e).isomorphic);
  }
}

TEST(SummandInvariants, Examples) {
  const auto a = summand_invariants(kSixOne);
  EXPECT_EQ(a.total_summands, 2u);
  EXPECT_EQ(a.stalk_multiplicity, 0u);
  const auto b = summand_invariants(SubgroupEmbedding::stalks(2));
  EXPECT_EQ(b.total_summands, 2u);
  EXPECT_EQ(b.stalk_multiplicity, 2u);
  const auto c = summand_invariants(SubgroupEmbedding::make(2, IntMatrix{{2}, {0}}));
  EXPECT_EQ(c.total_summands, 2u);
  EXPECT_EQ(c.stalk_multiplicity, 1u);
}
