#include <gtest/gtest.h>

#include <random>

#include "bwalg/e8sub.hpp"

using namespace bwalg;

TEST(E8Table, GoldenFileShape) {
  auto t = load_e8_table();
  EXPECT_EQ(t.size(), 44u);
  EXPECT_EQ(t.neg29h.size(), 44u);
  EXPECT_EQ(t.entries.size(), 10u);
  EXPECT_EQ(t.neg29h[t.vacuum], 0);
  for (auto& e : t.entries) EXPECT_TRUE(t.polys.count(e.poly)) << e.poly;
  EXPECT_THROW(load_e8_table("/nonexistent/e8.txt"), std::runtime_error);
}

TEST(E8Geometry, CosetCounts) {
  auto g = build_e8_geometry();
  EXPECT_EQ(g.e7.roots.size(), 126u);
  EXPECT_EQ(g.chain.size(), 7u);
  EXPECT_EQ(g.sigma.size(), 57u);
  EXPECT_EQ(g.tau_inv.size(), 72u);
  // roots pairing to 1 with alpha, plus alpha itself
  int ones = 0;
  for (auto& c : g.sigma) ones += c.weight == 1;
  EXPECT_EQ(ones, 56);
}

TEST(E8Invariants, CentralChargeAndDimensions) {
  auto d = e8_setup();
  EXPECT_EQ(d.c, rat(-5350, 29));
  ASSERT_EQ(d.h.size(), 44u);
  for (size_t i = 0; i < d.h.size(); ++i) EXPECT_EQ(-29 * d.h[i], Rational(d.table.neg29h[i])) << i;
}

TEST(E8Invariants, BetaLandsOnAlpha) {
  auto d = e8_setup();
  for (auto& b : d.betas) {
    Rational ba = dot(b.beta, d.geo.alpha);
    EXPECT_EQ(den(ba), 1);
    EXPECT_EQ(to_ll(num(ba)) % 29, 0);
  }
}

TEST(Determinant, WeylSumEqualsBruteForce) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> dist(-40, 40);
  for (int n = 2; n <= 6; ++n) {
    std::vector<long long> l(n), m(n);
    for (auto& x : l) x = dist(rng);
    for (auto& x : m) x = dist(rng);
    EXPECT_LT(std::abs(det_weyl_sum(l, m, 29) - brute_weyl_sum(l, m, 29)), 1e-9) << n;
  }
}

TEST(Polynomials, RootChecks) {
  std::vector<BigInt> x2m2{1, 0, -2};
  EXPECT_LT(poly_root_distance(x2m2, std::sqrt(2.0)), 1e-12);
  EXPECT_GT(poly_root_distance(x2m2, 1.5), 0.05);
  auto q = quadratic_roots(x2m2);
  ASSERT_TRUE(q);
  EXPECT_NEAR(q->second, std::sqrt(2.0), 1e-15);
  EXPECT_FALSE(quadratic_roots({1, 0, -4}));
}
