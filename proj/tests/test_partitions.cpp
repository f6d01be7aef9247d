#include <gtest/gtest.h>

#include <random>

#include "glr/partitions.hpp"
#include "oracles.hpp"

using namespace glr;

TEST(Partitions, ConjugateExamples) {
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
}

TEST(Partitions, TrailingZerosCompareEqual) {
  EXPECT_EQ((IntSequence{2, 1, 0, 0}), (IntSequence{2, 1}));
  EXPECT_EQ((Partition{0, 0}), Partition{});
  EXPECT_EQ((IntSequence{1, 0, -1}).length(), 3u);
  EXPECT_EQ(std::hash<IntSequence>{}(IntSequence{3, 0}), std::hash<IntSequence>{}(IntSequence{3}));
}

TEST(Partitions, RejectsIncreasingAndNegativePartition) {
  EXPECT_THROW((IntSequence{0, 1}), Error);
  EXPECT_THROW((Partition{1, -1}), Error);
  EXPECT_FALSE(as_partition(IntSequence{1, -1}).has_value());
}

TEST(Partitions, Padded) {
  EXPECT_EQ((IntSequence{2}).padded(3), (std::vector<Part>{2, 0, 0}));
  EXPECT_THROW((IntSequence{2, 1}).padded(1), Error);
}

TEST(Partitions, LambdaOfSetExamples) {
  EXPECT_EQ(lambda_of_set(Subset(4, {1, 2, 3})), (Partition{0, 0, 0}));
  EXPECT_EQ(lambda_of_set(Subset(3, {2, 3})), (Partition{1, 1}));
  EXPECT_EQ(lambda_of_set(Subset(3, {})), Partition{});
  EXPECT_EQ(lambda_of_set(Subset(5, {2, 5})), (Partition{3, 1}));
}

TEST(Partitions, SubsetValidation) {
  EXPECT_THROW(Subset(3, {4}), Error);
  EXPECT_THROW(Subset(3, {0}), Error);
  EXPECT_THROW(Subset(3, {1, 1}), Error);
  EXPECT_EQ(Subset(3, {3, 1}).elements(), (std::vector<int>{1, 3}));
  EXPECT_EQ(Subset::from_mask(3, 0b101), Subset(3, {1, 3}));
}

TEST(Partitions, ContainsExamples) {
  EXPECT_TRUE(contains(Partition{1}, Partition{2, 1}));
  EXPECT_FALSE(contains(Partition{2, 2}, Partition{2, 1}));
  EXPECT_TRUE(contains(Partition{}, Partition{5, 3}));
}

TEST(Partitions, StretchExamples) {
  EXPECT_EQ(stretch(IntSequence{2, 1}, 3), (IntSequence{6, 3}));
  EXPECT_EQ(stretch(IntSequence{}, 5), IntSequence{});
  EXPECT_EQ(stretch(IntSequence{1, 0, -1}, 2), (IntSequence{2, 0, -2}));
  EXPECT_THROW(stretch(IntSequence{1}, 0), Error);
  EXPECT_THROW(stretch(IntSequence{1}, -2), Error);
}

TEST(Partitions, ConjugateIsInvolutionAndKeepsSize) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Partition p = oracle::random_partition(rng, 8, 8);
    EXPECT_EQ(conjugate(conjugate(p)), p);
    EXPECT_EQ(conjugate(p).size(), p.size());
  }
}

TEST(Partitions, LambdaOfSetAlwaysAPartition) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const Subset s = Subset::from_mask(n, mask);
      const Partition p = lambda_of_set(s);
      EXPECT_LE(p.length(), static_cast<std::size_t>(s.size()));
      EXPECT_LE(p[0], n - s.size());
    }
}

TEST(Partitions, ContainsIsAPartialOrder) {
  const auto box = all_partitions_in(rectangle(3, 3));
  for (const auto& a : box) {
    EXPECT_TRUE(contains(a, a));
    for (const auto& b : box) {
      if (contains(a, b) && contains(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : box)
        if (contains(a, b) && contains(b, c)) EXPECT_TRUE(contains(a, c));
    }
  }
}

TEST(Partitions, EnumerationMatchesBox) {
  EXPECT_EQ(all_partitions_in(rectangle(3, 3)).size(), oracle::all_in_box(3, 3).size());
  std::size_t total = 0;
  for (Part s = 0; s <= 9; ++s) total += partitions_in(rectangle(3, 3), s).size();
  EXPECT_EQ(total, 20u);  // C(6,3)
  EXPECT_EQ(meet(Partition{3, 1}, Partition{2, 2}), (Partition{2, 1}));
}
