#include <gtest/gtest.h>

#include "bwalg/report.hpp"
#include "bwalg/suites.hpp"

using namespace bwalg;

namespace {

// W_s minimal model central charge at (s, u)
Rational ws_central_charge(int s, int u) {
  return Rational(s - 1) * (1 - Rational((long long)s * (s + 1) * (u - s) * (u - s)) / Rational((long long)s * u));
}

}  // namespace

TEST(Invariants, CentralChargeMatchesMinimalModelFormula) {
  for (auto [u, s] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}, {11, 5}}) {
    EXPECT_EQ(boundary_central_charge(u, s), ws_central_charge(s, u));
    for (int m = 0; m <= 2; ++m) EXPECT_EQ(boundary_case(u, s, m).c, ws_central_charge(s, u)) << u << s << m;
  }
  EXPECT_EQ(boundary_central_charge(8, 3), rat(-23));
}

TEST(Invariants, LeeYangConformalDimensions) {
  auto bc = boundary_case(5, 2, 0);
  std::set<Rational> h(bc.h.begin(), bc.h.end());
  EXPECT_EQ(h, (std::set<Rational>{rat(0), rat(-1, 5)}));
}

TEST(Invariants, NInvariantClosedFormMatchesDirect) {
  for (int u = 2; u <= 8; ++u)
    for (int s = 1; s < u; ++s) {
      if (std::gcd(u, s) != 1 || s < 2) continue;
      for (auto& L : enumerate_replete(build_pyramid(u, s, 0))) {
        auto a = orbit_alist(L, 0, s);
        auto direct = n_invariant_direct(a, u, s, 0);
        EXPECT_EQ(n_invariant_closed(a, u, s), direct);
        for (int m = 1; m <= 2; ++m) EXPECT_EQ(n_invariant_direct(a, u, s, m), direct);
      }
    }
}

TEST(Invariants, FlippedSignDisagreesWithDirect) {
  auto a = orbit_alist(parse_labeling("6,1|1"), 0, 3);
  EXPECT_NE(n_invariant_closed_flipped(a, 8, 3), n_invariant_direct(a, 8, 3, 0));
}

TEST(SMatrix, LeeYangAgainstClosedForm) {
  auto d = boundary_datum(boundary_case(5, 2, 0), Backend::exact);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.axioms.ok);
  const double pi = std::acos(-1.0), k = 2 / std::sqrt(5.0);
  std::multiset<long> want{std::lround(1e6 * k * std::sin(2 * pi / 5)), std::lround(1e6 * k * std::sin(4 * pi / 5)),
                           std::lround(1e6 * k * std::sin(4 * pi / 5)), std::lround(1e6 * k * std::sin(2 * pi / 5))};
  std::multiset<long> got;
  for (auto& row : d.S)
    for (auto& z : row) {
      got.insert(std::lround(1e6 * std::abs(z.real())));
      EXPECT_NEAR(z.imag(), 0, 1e-12);
    }
  EXPECT_EQ(got, want);
  auto f = verlinde(d);
  int v = d.vacuum, x = 1 - v;
  EXPECT_EQ(f.at(x, x, v), 1);
  EXPECT_EQ(f.at(x, x, x), 1);
}

TEST(SMatrix, ReducedAndGeneralAreProportional) {
  for (auto [u, s, m] : std::vector<std::tuple<int, int, int>>{{5, 2, 1}, {7, 3, 0}}) {
    auto bc = boundary_case(u, s, m);
    std::vector<long long> xi(bc.pyr.n);
    std::iota(xi.begin(), xi.end(), 1);
    auto g = smatrix_general(bc.pyr, bc.pyr.n, u, rho_modules(bc), xi, Backend::exact);
    auto r = smatrix_boundary_reduced(bc.pyr, bc.reps, Backend::exact);
    EXPECT_TRUE(proportional(g, r, true).ok) << u << s << m;
  }
}

TEST(SMatrix, HeightDoesNotChangeModularData) {
  auto d0 = boundary_datum(boundary_case(7, 3, 0));
  auto d1 = boundary_datum(boundary_case(7, 3, 1));
  ASSERT_EQ(d0.size(), d1.size());
  auto perm = transport_map(boundary_case(7, 3, 0), boundary_case(7, 3, 1));
  EXPECT_LT(smax_diff(d0, d1, perm), 1e-9);
}

TEST(SMatrix, ParallelMatchesSerial) {
  auto bc = boundary_case(8, 3, 0);
  auto a = smatrix_boundary_reduced(bc.pyr, bc.reps, Backend::exact, 1);
  auto b = smatrix_boundary_reduced(bc.pyr, bc.reps, Backend::exact, 3);
  for (size_t i = 0; i < a.ex.size(); ++i)
    for (size_t j = 0; j < a.ex.size(); ++j) EXPECT_TRUE(a.ex[i][j].equals(b.ex[i][j]));
}

TEST(Normalization, RejectsBrokenMatrix) {
  auto bc = boundary_case(5, 2, 0);
  auto raw = smatrix_boundary_reduced(bc.pyr, bc.reps, Backend::float_);
  raw.approx[0][1] *= 2.0;
  EXPECT_THROW(normalize_datum(raw, bc.h, bc.c), std::runtime_error);
}

TEST(Report, JsonRoundTrip) {
  auto d = boundary_datum(boundary_case(7, 2, 0));
  auto r = make_report(d);
  auto back = modular_report_from_json(json::parse(to_json(r).dump()));
  EXPECT_EQ(back.indices, r.indices);
  EXPECT_EQ(back.h, r.h);
  EXPECT_EQ(back.c, r.c);
  EXPECT_EQ(back.T, r.T);
  EXPECT_EQ(back.S, r.S);
}

TEST(Report, FusionCsvRoundTrip) {
  auto d = boundary_datum(boundary_case(8, 3, 0));
  auto f = verlinde(d);
  auto csv = fusion_csv(f);
  EXPECT_EQ(csv.rfind("i,j,k,N\n", 0), 0u);
  EXPECT_EQ(fusion_from_csv(csv, f.n), f);
  EXPECT_THROW(fusion_from_csv("a,b\n", 2), std::invalid_argument);
}

TEST(Fusion, RingAxioms) {
  auto d = boundary_datum(boundary_case(7, 3, 0));
  auto f = verlinde(d);
  EXPECT_EQ(fusion_ring_defect(f, d.vacuum), "");
  auto dims = fp_dimensions(d);
  for (int i = 0; i < f.n; ++i) EXPECT_NEAR(perron_root(f, i), dims[i], 1e-8);
}

TEST(Galois, LeeYangPermutation) {
  auto d = boundary_datum(boundary_case(5, 2, 0));
  auto N = t_conductor(d);
  auto g = galois_symmetry(d, 7, N);
  EXPECT_LT(g.residual, 1e-9);
}
