#include <gtest/gtest.h>

#include <random>

#include "glr/hive.hpp"
#include "glr/linear_system.hpp"

using namespace glr;

TEST(LinearSystem, EmptyIsFeasible) {
  LinearSystem s;
  EXPECT_TRUE(fm_feasible(s));
  EXPECT_TRUE(simplex_feasible(s).feasible);
}

TEST(LinearSystem, SimpleContradiction) {
  LinearSystem s;
  const auto x = s.add_variable("x");
  s.add_le({{x, 1}}, Rational(1), "x<=1");
  s.add_ge({{x, 1}}, Rational(2), "x>=2");
  EXPECT_FALSE(fm_feasible(s));
  EXPECT_FALSE(simplex_feasible(s).feasible);
}

TEST(LinearSystem, RationalVertexOnly) {
  // 2x = 1 has a rational but no integral solution; feasibility is over Q.
  LinearSystem s;
  const auto x = s.add_variable("x"), y = s.add_variable("y");
  s.add_eq({{x, 1}, {y, 1}}, Rational(1), "sum");
  s.add_eq({{x, 1}, {y, -1}}, Rational(0), "diff");
  const auto r = simplex_feasible(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.witness[0], Rational(1, 2));
  EXPECT_TRUE(s.satisfied_by(r.witness));
  EXPECT_TRUE(fm_feasible(s));
}

TEST(LinearSystem, RandomSystemsAgree) {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> coef(-1, 1), rhs(-3, 3), vars(1, 5), rows(1, 9);
  for (int trial = 0; trial < 400; ++trial) {
    LinearSystem s;
    const int V = vars(rng);
    for (int v = 0; v < V; ++v) s.add_variable("v" + std::to_string(v));
    const int R = rows(rng);
    for (int r = 0; r < R; ++r) {
      LinearSystem::Terms t;
      for (int v = 0; v < V; ++v) t.emplace_back(static_cast<std::size_t>(v), coef(rng));
      if (trial % 4 == 0 && r == 0) s.add_eq(t, Rational(rhs(rng)), "e");
      else s.add_le(t, Rational(rhs(rng), 1 + trial % 3), "r" + std::to_string(r));
    }
    const auto sx = simplex_feasible(s);
    FmStats st;
    ASSERT_EQ(fm_feasible(s, &st), sx.feasible) << "trial " << trial;
    if (sx.feasible) EXPECT_TRUE(s.satisfied_by(sx.witness));
  }
}

TEST(LinearSystem, ConeContains) {
  using V = std::vector<Rational>;
  const std::vector<V> gens{{1, 0}, {0, 1}};
  EXPECT_TRUE(cone_contains(gens, {}, V{2, 3}));
  EXPECT_FALSE(cone_contains(gens, {}, V{-1, 3}));
  EXPECT_TRUE(cone_contains(gens, {V{1, 0}}, V{-1, 3}));
  EXPECT_TRUE(cone_contains({}, {}, V{0, 0}));
  EXPECT_FALSE(cone_contains({}, {}, V{0, 1}));
}

TEST(LinearSystem, ExportLp) {
  LinearSystem s;
  const auto x = s.add_variable("a1_1"), y = s.add_variable("h1_e0_1");
  s.add_le({{x, 1}, {y, -1}}, Rational(3, 2), "row");
  const auto text = export_lp(s, "demo");
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find("2 x0_a1_1 - 2 x1_h1_e0_1 <= 3"), std::string::npos) << text;
  EXPECT_NE(text.find(" free"), std::string::npos) << text;
  EXPECT_NE(text.find("End"), std::string::npos);
}

TEST(LinearSystem, HiveSystemBackendsAgree) {
  const std::vector<IntSequence> lam{{2, 1}, {2, 1}, {1, 1}, {2}, {1}, {1, 1}};
  const auto s = build_linear_system(lam, 2, 6);
  const auto sx = simplex_feasible(s);
  EXPECT_EQ(fm_feasible(s), sx.feasible);
  if (sx.feasible) EXPECT_TRUE(s.satisfied_by(sx.witness));
}
