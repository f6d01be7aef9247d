#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "glr/lr.hpp"
#include "oracles.hpp"

using namespace glr;

TEST(Lr, SpecExamples) {
  EXPECT_EQ(lr_coefficient(LrTriple{{1}, {1, 1}, {2, 1}, 3}), 1u);
  EXPECT_EQ(lr_coefficient(LrTriple{{3, 1}, {}, {3, 1}, 2}), 1u);
  EXPECT_EQ(lr_coefficient(LrTriple{{1}, {1}, {2, 1}, 2}), 0u);
  EXPECT_EQ(lr_coefficient(LrTriple{{0, -1}, {1, 1}, {1, 0}, 2}), 1u);
  EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}), 2u);
}

TEST(Lr, HiveExamples) {
  EXPECT_EQ(lr_hive_count(LrTriple{{1}, {1, 1}, {2, 1}, 3}), 1u);
  EXPECT_EQ(lr_hive_count(LrTriple{{}, {}, {}, 1}), 1u);
  EXPECT_EQ(lr_hive_count(LrTriple{{1}, {1}, {3}, 3}), 0u);
  EXPECT_EQ(lr_hive_count(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3), 2u);
}

TEST(Lr, RectangularExamples) {
  EXPECT_EQ(rectangular_lr(Partition{2, 1}, Partition{1}, 2, 2), 1u);
  EXPECT_EQ(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{2, 2}), 1u);
  EXPECT_EQ(rectangular_lr(Partition{3, 3}, Partition{}, 3, 2), 1u);
  EXPECT_EQ(rectangular_lr(Partition{2, 2}, Partition{1}, 2, 2), 0u);
  EXPECT_EQ(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{2, 2}), 0u);
}

TEST(Lr, MoreThanNRowsVanishes) {
  EXPECT_EQ(lr_coefficient(LrTriple{{1, 1, 1}, {}, {1, 1, 1}, 2}), 0u);
  EXPECT_EQ(lr_coefficient(LrTriple{{1}, {1}, {1, 1}, 1}), 0u);
}

TEST(Lr, NotDecreasingIsAnError) {
  EXPECT_THROW(lr_coefficient(LrTriple{IntSequence(std::vector<Part>{0, 1}), {1}, {1, 1}, 2}), Error);
}

TEST(Lr, TableauxAgreeWithBruteForceFillings) {
  const auto box = all_partitions_in(rectangle(3, 3));
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : all_partitions_in(rectangle(5, 3))) {
        if (c.size() != a.size() + b.size()) continue;
        ASSERT_EQ(lr_coefficient(a, b, c), oracle::lr(a, b, c)) << a.str() << b.str() << c.str();
      }
}

TEST(Lr, HivesAgreeWithTableauxUpToFour) {
  const auto box = all_partitions_in(rectangle(4, 3));
  std::size_t checked = 0;
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : box) {
        if (c.size() != a.size() + b.size()) continue;
        ASSERT_EQ(lr_coefficient(a, b, c), lr_hive_count(a, b, c, 3)) << a.str() << b.str() << c.str();
        ++checked;
      }
  EXPECT_GT(checked, 1000u);
}

TEST(Lr, Symmetric) {
  const auto box = all_partitions_in(rectangle(3, 3));
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : all_partitions_in(rectangle(4, 3)))
        EXPECT_EQ(lr_coefficient(a, b, c), lr_coefficient(b, a, c));
}

TEST(Lr, ShiftInvariance) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Part> shift(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3;
    const Partition l = oracle::random_partition(rng, 3, 3), m = oracle::random_partition(rng, 3, 3);
    const Partition nu = oracle::random_partition(rng, 3, 5);
    const Part a = shift(rng);
    auto add = [&](const Partition& p) {
      auto v = p.padded(3);
      for (auto& x : v) x += a;
      return IntSequence(v);
    };
    EXPECT_EQ(lr_coefficient(LrTriple{add(l), m, add(nu), n}), lr_coefficient(LrTriple{l, m, nu, n}));
  }
}

TEST(Lr, ClassicalSaturation) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition l = oracle::random_partition(rng, 3, 3), m = oracle::random_partition(rng, 3, 3);
    const Partition nu = oracle::random_partition(rng, 3, 5);
    const bool base = lr_coefficient(l, m, nu) != 0;
    for (Part r : {2, 3}) EXPECT_EQ(lr_coefficient(stretch(l, r), stretch(m, r), stretch(nu, r)) != 0, base);
  }
}

TEST(Lr, RectangleAgreesWithTableaux) {
  for (int n = 1; n <= 3; ++n)
    for (Part N = 0; N <= 4; ++N) {
      const auto box = all_partitions_in(rectangle(N, static_cast<std::size_t>(n)));
      for (const auto& a : box)
        for (const auto& b : box)
          EXPECT_EQ(rectangular_lr(a, b, N, n), lr_coefficient(a, b, rectangle(N, static_cast<std::size_t>(n))));
    }
}

TEST(Lr, HiveLabelsSatisfyRhombi) {
  std::size_t seen = 0;
  for_each_lr_hive(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, 3, [&](const TriangularHive& h) {
    EXPECT_TRUE(satisfies_rhombus(h));
    EXPECT_EQ(h.base(), (std::vector<std::int64_t>{3, 2, 1}));
    ++seen;
  });
  EXPECT_EQ(seen, 2u);
}

TEST(Lr, MemoIsConsistentUnderThreads) {
  clear_lr_cache();
  const auto box = all_partitions_in(rectangle(3, 3));
  std::vector<Count> serial;
  for (const auto& a : box)
    for (const auto& b : box) serial.push_back(lr_coefficient(a, b, Partition{4, 3, 2}));
  clear_lr_cache();
  std::vector<std::thread> pool;
  std::vector<std::vector<Count>> results(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (const auto& a : box)
        for (const auto& b : box) results[t].push_back(lr_coefficient(a, b, Partition{4, 3, 2}));
    });
  for (auto& th : pool) th.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
  EXPECT_GT(lr_cache_size(), 0u);
}
