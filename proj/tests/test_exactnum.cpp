#include <gtest/gtest.h>

#include "bwalg/exactnum.hpp"

using namespace bwalg;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(rat(-22, 5)), "-22/5");
  EXPECT_EQ(parse_rational("-22/5"), rat(-22, 5));
  EXPECT_EQ(parse_rational("7"), rat(7));
  EXPECT_EQ(floor_rat(rat(-1, 3)), rat(-1));
}

TEST(Modular, InverseMod) {
  EXPECT_EQ(inverse_mod(11, 348) * 11 % 348, 1);
  EXPECT_EQ(inverse_mod(-3, 7), 2);
  EXPECT_THROW(inverse_mod(6, 9), std::invalid_argument);
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(detail::cyclotomic(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(detail::cyclotomic(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(detail::cyclotomic(5).size(), 5u);
}

TEST(CycSum, RootsOfUnityRelations) {
  auto i = CycSum::e(1, 4);
  EXPECT_TRUE((i * i).equals(CycSum::e(1, 2)));
  EXPECT_TRUE((CycSum::e(1, 2) + CycSum::e(0, 1)).is_zero());
  CycSum five;
  for (int k = 0; k < 5; ++k) five = five + CycSum::e(k, 5);
  EXPECT_TRUE(five.is_zero());
  // zeta_3 + zeta_3^2 = -1
  EXPECT_TRUE((CycSum::e(1, 3) + CycSum::e(2, 3) + CycSum::e(0, 1)).is_zero());
}

TEST(CycSum, GaloisAndConjugation) {
  auto z = CycSum::e(1, 7) + CycSum::e(3, 7).scaled(rat(2));
  EXPECT_TRUE(z.galois(-1).equals(z.conj()));
  EXPECT_TRUE(z.galois(3).equals(CycSum::e(3, 7) + CycSum::e(9, 7).scaled(rat(2))));
  auto v = z.eval(), w = z.conj().eval();
  EXPECT_NEAR(std::abs(v - std::conj(w)), 0, 1e-14);
}

TEST(CycSum, MatchesFloatingPoint) {
  // sqrt(5) = zeta5 - zeta5^2 - zeta5^3 + zeta5^4
  auto r5 = CycSum::e(1, 5) - CycSum::e(2, 5) - CycSum::e(3, 5) + CycSum::e(4, 5);
  EXPECT_NEAR(r5.eval().real(), std::sqrt(5.0), 1e-13);
  EXPECT_NEAR(r5.eval().imag(), 0, 1e-13);
  EXPECT_TRUE((r5 * r5).equals(CycSum::e(0, 1).scaled(rat(5))));
}

TEST(PhaseAccumulator, AgreesWithDirectSum) {
  PhaseAccumulator acc(12);
  CycSum direct;
  for (int k = 0; k < 12; k += 5) {
    acc.add(k, 1);
    direct = direct + CycSum::e(k, 12);
  }
  EXPECT_TRUE(acc.to_cycsum().equals(direct));
}
