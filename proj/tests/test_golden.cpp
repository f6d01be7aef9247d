#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "glr/golden.hpp"
#include "oracles.hpp"

using namespace glr;

TEST(Golden, EmbeddedCopyMatchesDataFile) {
  std::ifstream in(std::string(GLR_DATA_DIR) + "/facets_2_6.json", std::ios::binary);
  ASSERT_TRUE(in) << "cannot open the data file";
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string file = ss.str();
  EXPECT_EQ(file, std::string(kFacets26Json));
}

TEST(Golden, Shape) {
  const auto& g = facets_2_6_golden();
  EXPECT_EQ(g.n, 2);
  EXPECT_EQ(g.m, 6);
  EXPECT_EQ(g.schemas.size(), 14u);
  EXPECT_EQ(g.texts.size(), 14u);
  EXPECT_EQ(g.appendix.size(), 14u);
  EXPECT_EQ(g.cells.front(), (std::vector<std::int64_t>{1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(g.layout.front(), (std::pair<int, int>{1, 3}));
  EXPECT_EQ(golden_closure(g).size(), 63u);
}

TEST(Golden, TextsAndAppendixAgree) {
  const auto& g = facets_2_6_golden();
  const SunQuiver q(2, 3);
  for (std::size_t k = 0; k < g.schemas.size(); ++k) {
    EXPECT_EQ(g.schemas[k].str(), g.texts[k]);
    EXPECT_EQ(beta_from_subsets(g.schemas[k].tuple, q), g.appendix[k]) << "row " << k;
  }
}

TEST(Golden, InequalitiesHoldOnNonvanishingWeights) {
  const auto& g = facets_2_6_golden();
  const auto closure = golden_closure(g);
  const auto ones = RationalTuple::from_integers(std::vector<IntSequence>(6, IntSequence{1, 0}), 2);
  for (const auto& I : closure) EXPECT_TRUE(HornInequality{I}.holds(ones)) << I.str();

  std::mt19937 rng(103);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 25; ++trial) {
    std::vector<IntSequence> t;
    for (int i = 0; i < 6; ++i) t.push_back(oracle::random_partition(rng, 2, 2));
    if (oracle::f_sun(t, 2) == 0) continue;
    ++seen;
    const auto r = RationalTuple::from_integers(t, 2);
    for (const auto& I : closure) ASSERT_TRUE(HornInequality{I}.holds(r)) << I.str();
  }
  EXPECT_GE(seen, 10);
}

TEST(Golden, RegularFacetsReproduceTheList) {
  const auto derived = regular_facets(2, 6, GenerateOptions{.parallel = true});
  const auto cmp = compare_with_golden(derived);
  EXPECT_TRUE(cmp.missing.empty());
  EXPECT_TRUE(cmp.extra.empty());
  EXPECT_EQ(cmp.derived, 63u);
  EXPECT_TRUE(cmp.passed());
}

TEST(Golden, RejectsForeignData) {
  EXPECT_THROW(parse_golden_facets("{"), Error);
  EXPECT_THROW(parse_golden_facets(R"({"format":"other","version":1})"), Error);
}
