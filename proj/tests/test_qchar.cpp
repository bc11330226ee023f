#include <gtest/gtest.h>

#include "bwalg/qchar.hpp"
#include "bwalg/pyramid.hpp"

using namespace bwalg;

TEST(QSeries, PentagonalNumberTheorem) {
  const int order = 60;
  auto e = pochhammer(1, 1, order);
  std::vector<long long> want(order + 1, 0);
  for (int k = -10; k <= 10; ++k) {
    int g = k * (3 * k - 1) / 2;
    if (g <= order) want[g] += (k % 2 == 0) ? 1 : -1;
  }
  for (int i = 0; i <= order; ++i) EXPECT_EQ(e.c[i], want[i]) << i;
}

TEST(QSeries, PartitionCounts) {
  auto p = pochhammer(1, 1, 30).inverse();
  EXPECT_EQ(p.c[10], 42);
  EXPECT_EQ(p.c[30], 5604);
}

TEST(QSeries, InverseIsInverse) {
  auto a = pochhammer(2, 3, 25) * pochhammer(1, 5, 25);
  EXPECT_EQ(a * a.inverse(), QSeries::one(25));
}

TEST(QSeries, Printing) {
  auto a = pochhammer(1, 1, 5);
  EXPECT_EQ(to_string(a), "1 - q - q^2 + q^5");
}

TEST(Virasoro, FiveCollapsesToRogersRamanujanSquare) {
  // (q;q) splits into the five residue classes mod 5
  const int order = 40;
  auto rr = (pochhammer(2, 5, order) * pochhammer(3, 5, order)).inverse();
  EXPECT_EQ(virasoro_product(5, order), rr * rr);
}

TEST(Characters, DnPairingsCoverAllRoots) {
  for (int n = 4; n <= 7; ++n) {
    auto pr = dn_rho_pairings(n, dn_principal_dim);
    EXPECT_EQ((long long)pr.size(), 2LL * n * (n - 1));
  }
}

TEST(Characters, RejectsNonRepleteInput) {
  EXPECT_THROW(character_product(5, 1, 2, {5, -5}, 10), std::invalid_argument);
}
