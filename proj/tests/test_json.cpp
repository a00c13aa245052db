#include <gtest/gtest.h>

#include "dualz/errors.hpp"
#include "dualz/fuzz.hpp"
#include "dualz/json_io.hpp"

using namespace dualz;

TEST(JsonInt, BigValuesAsStrings) {
  const Int big("123456789012345678901234567890");
  const Json j = to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(int_from_json(j), big);
  EXPECT_EQ(int_from_json(Json(-17)), -17);
  EXPECT_THROW(int_from_json(Json("12x")), ParseError);
  EXPECT_THROW(int_from_json(Json(1.5)), ParseError);
}

TEST(JsonMatrix, Shapes) {
  const IntMatrix m{{1, -2}, {3, 4}};
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  const IntMatrix empty(3, 0);
  const Json j = to_json(empty);
  EXPECT_EQ(j["rows"], 3);
  EXPECT_EQ(matrix_from_json(j), empty);
  EXPECT_EQ(matrix_from_json(Json::parse("[[1,-2],[3,4]]")), m);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1,2],[3]]")), ParseError);
}

TEST(JsonEmbedding, EmptyMatrixMeansNoGenerators) {
  const auto e = embedding_from_json(Json::parse(R"({"ambient_rank": 2, "matrix": []})"));
  EXPECT_EQ(e.ambient_rank(), 2u);
  EXPECT_EQ(e.sub_rank(), 0u);
  EXPECT_THROW(embedding_from_json(Json::parse(R"({"ambient_rank": 1, "matrix": [[0]]})")), NotInjectiveError);
}

TEST(JsonRoundTrip, Fuzzed) {
  Rng r(21);
  for (int k = 0; k < 60; ++k) {
    const auto e = random_embedding(r, {4, 9, false, true});
    EXPECT_EQ(embedding_from_json(Json::parse(to_json(e).dump())), e);
    const auto d = random_diff_structure(r, 6, 9);
    EXPECT_EQ(diff_from_json(to_json(d)), d);
    const auto x = random_complex(r, {3, 3, 9, -1, 1});
    EXPECT_EQ(complex_from_json(to_json(x)), x);
    const auto y = random_complex(r, {3, 3, 9, -1, 1});
    const auto f = random_chain_map(r, x, y, 2);
    EXPECT_EQ(chain_map_from_json(to_json(f)), f);
    const auto g = random_orbit_morphism(r, x, y, 2);
    EXPECT_EQ(orbit_morphism_from_json(to_json(g)), g);
  }
}

TEST(JsonObject, EmbeddingOrComplex) {
  const auto x = object_from_json(Json::parse(R"({"ambient_rank": 1, "matrix": [[2]]})"));
  EXPECT_EQ(x, BoundedComplex::from_embedding(SubgroupEmbedding::from_divisors({2})));
  EXPECT_THROW(object_from_json(Json::parse("[1]")), ParseError);
}

TEST(JsonAbGroup, RoundTrip) {
  const auto g = FiniteAbGroupInv::from_cyclic_orders({4, 6});
  EXPECT_EQ(ab_group_from_json(to_json(g)), g);
}
