#include <gtest/gtest.h>

#include "bwalg/rootsys.hpp"

using namespace bwalg;

TEST(RootSystem, RootCountsAndDualCoxeter) {
  struct Row {
    RootSystem rs;
    size_t roots;
    int h;
  };
  std::vector<Row> rows{{build_A(1), 2, 2},    {build_A(4), 20, 5},    {build_D(4), 24, 6},
                        {build_D(5), 40, 8},   {build_E7(), 126, 18},  {build_E8(), 240, 30}};
  for (auto& r : rows) {
    EXPECT_EQ(r.rs.roots.size(), r.roots);
    EXPECT_EQ(r.rs.positive.size() * 2, r.roots);
    EXPECT_EQ(r.rs.h_dual, r.h);
    EXPECT_TRUE(strange_formula_holds(r.rs));
  }
}

TEST(RootSystem, CartanDeterminants) {
  // det of the Cartan matrix: n+1, 4, 2, 1
  EXPECT_EQ(determinant(build_A(5).cartan), rat(6));
  EXPECT_EQ(determinant(build_D(6).cartan), rat(4));
  EXPECT_EQ(determinant(build_E7().cartan), rat(2));
  EXPECT_EQ(determinant(build_E8().cartan), rat(1));
}

TEST(RootSystem, RhoIsHalfPositiveSum) {
  auto rs = build_D(5);
  Weight sum(rs.dim, 0);
  for (auto& a : rs.positive) sum = sum + a;
  EXPECT_EQ(rs.rho, rat(1, 2) * sum);
  for (int i = 0; i < rs.rank; ++i) EXPECT_EQ(dot(rs.rho, rs.simple[i]) * 2, dot(rs.simple[i], rs.simple[i]));
}

TEST(Weyl, RootToRootMapsEveryRootToTheHighest) {
  auto rs = build_E8();
  for (size_t k = 0; k < rs.roots.size(); k += 17) {
    auto y = root_to_root(rs, rs.roots[k], rs.theta);
    EXPECT_EQ(act(y.matrix, rs.roots[k]), rs.theta);
  }
}

TEST(Weyl, DominantRepresentativeIsDominant) {
  auto rs = build_A(3);
  Weight v{rat(3), rat(-1), rat(0), rat(-2)};
  auto [d, w] = dominant_rep(rs, v);
  for (auto& a : rs.simple) EXPECT_GE(dot(d, a), 0);
  EXPECT_EQ(act(w.matrix, v), d);
}

TEST(Weyl, GroupOrderAndAlternation) {
  EXPECT_EQ(weyl_group_elements(build_A(3)).size(), 24u);
  EXPECT_EQ(weyl_group_elements(build_D(4)).size(), 192u);
  auto rs = build_A(2);
  EXPECT_TRUE(alternation_identity(rs, Weight{rat(5), rat(1), rat(-6)}));
}
