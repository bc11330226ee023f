#include <gtest/gtest.h>

#include "bwalg/pyramid.hpp"

using namespace bwalg;

TEST(Pyramid, Shape) {
  auto p = build_pyramid(8, 3, 1);
  EXPECT_EQ(p.n, 11);
  EXPECT_EQ(p.bottom.size(), 8u);
  int tall = 0;
  for (int h : p.heights) tall += h == 2;
  EXPECT_EQ(tall, 3);
  auto q = build_pyramid(5, 2, 0);
  EXPECT_EQ(q.n, 2);
}

TEST(Pyramid, GradedDimsSumToDimension) {
  for (auto [u, s, m] : std::vector<std::tuple<int, int, int>>{{5, 2, 0}, {8, 3, 1}, {7, 3, 2}}) {
    auto p = build_pyramid(u, s, m);
    long long total = 0;
    for (int k = -u; k <= u; ++k) {
      total += graded_dims(p, k);
      EXPECT_EQ(graded_dims(p, k), graded_dims(p, -k));
    }
    EXPECT_EQ(total, (long long)p.n * p.n - 1);
  }
}

TEST(Pyramid, DeltaMatchesClosedForm) {
  for (int u = 2; u <= 9; ++u)
    for (int s = 1; s < u; ++s) {
      if (std::gcd(u, s) != 1) continue;
      for (int m = 0; m <= 2; ++m) {
        if (m * u + s < 2) continue;
        auto a = build_pyramid(u, s, m), b = build_pyramid(u, s, m + 1);
        for (int k = 1; k <= u; ++k)
          EXPECT_EQ(graded_dims(b, k) - graded_dims(a, k), delta_closed(u, s, m, k)) << u << s << m << k;
      }
    }
}

TEST(Pyramid, GradingElementPairings) {
  auto p = build_pyramid(7, 3, 1);
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j)
      if (i != j) EXPECT_EQ(dot(p.root(i, j), p.x0), rat(p.col[j] - p.col[i]));
}

TEST(Permutations, Sign) {
  EXPECT_EQ(perm_sign({0, 1, 2}), 1);
  EXPECT_EQ(perm_sign({1, 0, 2}), -1);
  EXPECT_EQ(perm_sign({1, 2, 0}), 1);
  EXPECT_EQ(perm_sign({3, 2, 1, 0}), 1);
}
