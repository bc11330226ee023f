#include <gtest/gtest.h>

#include "bwalg/weights.hpp"

using namespace bwalg;

namespace {

// orbits of labelings with sum u, found by exhaustive search
size_t brute_orbits(const Pyramid& p) {
  std::set<std::vector<int>> seen;
  std::vector<int> lab(p.n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == p.n - 1) {
      lab[i] = left;
      auto L = make_labeling(lab);
      if (is_replete(p, L)) seen.insert(canonical(L).labels);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      lab[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, p.u);
  return seen.size();
}

}  // namespace

TEST(Labeling, ParseRoundTrip) {
  auto L = parse_labeling("(6,1|1)");
  EXPECT_EQ(L.n(), 3);
  EXPECT_EQ(L.u, 8);
  EXPECT_EQ(to_string(L), "(6,1|1)");
  EXPECT_THROW(parse_labeling("6,1"), std::invalid_argument);
}

TEST(Labeling, CanonicalIsRotationInvariant) {
  auto L = parse_labeling("1,1,1,0,1,1,1,0,1,1|0");
  for (int k = 0; k < L.n(); ++k) EXPECT_EQ(canonical(rotate(L, k)), canonical(L));
}

TEST(Enumeration, EightThreeHasSevenOrbitsAtEachHeight) {
  for (int m = 0; m <= 2; ++m) {
    auto p = build_pyramid(8, 3, m);
    auto list = enumerate_replete(p);
    EXPECT_EQ(list.size(), 7u);
    for (auto& L : list) EXPECT_TRUE(is_replete(p, L));
  }
}

TEST(Enumeration, AgreesWithExhaustiveSearch) {
  for (auto [u, s, m] : std::vector<std::tuple<int, int, int>>{{5, 2, 0}, {5, 2, 1}, {7, 3, 1}, {8, 3, 1}, {5, 3, 2}, {6, 1, 1}}) {
    auto p = build_pyramid(u, s, m);
    EXPECT_EQ(enumerate_replete(p).size(), brute_orbits(p)) << u << "," << s << "," << m;
  }
}

TEST(Counting, ThreeFormulasAgree) {
  for (int u = 2; u <= 12; ++u)
    for (int s = 1; s < u; ++s) {
      if (std::gcd(u, s) != 1) continue;
      for (int m = 0; m <= 2; ++m) {
        if (m * u + s < 2) continue;
        auto c = count_modules(u, s, m);
        EXPECT_EQ(c.binomial, c.burnside);
        EXPECT_EQ(c.binomial, c.weyl);
      }
    }
  EXPECT_EQ(count_modules(8, 3, 1).binomial, 7);
}

TEST(Necklace, AListRoundTrip) {
  auto p = build_pyramid(8, 3, 1);
  for (auto& L : enumerate_replete(p)) {
    auto a = orbit_alist(L, 1, 3);
    EXPECT_TRUE(valid_alist(a, 3));
    EXPECT_EQ(canonical(alist_to_labeling(a, 1)), canonical(L));
    EXPECT_EQ(necklace_to_alist(alist_to_necklace(a)), a);
  }
}

TEST(Transport, BetweenHeightsIsABijection) {
  auto l0 = enumerate_replete(build_pyramid(8, 3, 0));
  auto p2 = build_pyramid(8, 3, 2);
  std::set<std::vector<int>> image;
  for (auto& L : l0) {
    auto t = transport(L, 0, 3, 2);
    EXPECT_TRUE(is_replete(p2, t));
    image.insert(t.labels);
    EXPECT_EQ(transport(t, 2, 3, 0), canonical(L));
  }
  EXPECT_EQ(image.size(), l0.size());
}

TEST(Beta, ValueMultisetMatchesPyramid) {
  auto p = build_pyramid(7, 3, 1);
  for (auto& L : enumerate_replete(p)) {
    auto b = construct_beta(p, L);
    auto v = -finite_weight(p.rs, b.eta);
    for (int k = 0; k < p.n; ++k) EXPECT_EQ(b.beta[b.y[k]], v[k]);
  }
}
