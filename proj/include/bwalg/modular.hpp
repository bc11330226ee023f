#pragma once
// S and T matrices, normalization, Verlinde fusion, Galois symmetry, and the
// affine factorization checks.

#include <Eigen/Dense>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <thread>

#include "weights.hpp"

namespace bwalg {

using CMatrix = std::vector<std::vector<ComplexApprox>>;

// ---------------------------------------------------------------- invariants

inline Rational conformal_dimension(const Weight& nu, const Weight& eta, const Weight& x0, const Weight& rho,
                                    int p, int u) {
  Rational q = rat(p, u);
  Weight a = nu - q * eta, b = rho - q * x0;
  return rat(u, 2 * p) * (dot(a, a) - dot(b, b));
}
inline Rational conformal_dimension(const RootSystem& rs, const Weight& eta, const Weight& x0, int p, int u) {
  return conformal_dimension(rs.rho, eta, x0, rs.rho, p, u);
}
// type A with a labeling
inline Rational conformal_dimension(const AffineLabeling& eta, const Weight& x0, int p, int u, const RootSystem& rs) {
  return conformal_dimension(rs, finite_weight(rs, eta), x0, p, u);
}

inline Rational central_charge(const RootSystem& rs, long long dim_g0, const Weight& x0, int p, int u) {
  Weight b = rs.rho - rat(p, u) * x0;
  return Rational(dim_g0) - 12 * rat(u, p) * dot(b, b);
}
inline Rational central_charge(const Pyramid& pyr, int p, int u) {
  return central_charge(pyr.rs, (long long)pyr.dim_g0(), pyr.x0, p, u);
}
inline Rational boundary_central_charge(int u, int s) {
  return -rat((long long)(s - 1) * (u - s - 1) * (u + (long long)u * s - (long long)s * s), u);
}

// A_{n-1} is rebuilt often by the invariant checks
inline const RootSystem& cached_A(int rank) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_unique<RootSystem>(build_A(rank));
  return *slot;
}

inline Rational n_invariant_direct(const AList& a, int u, int s, int m) {
  int n = m * u + s;
  const auto& rs = cached_A(n - 1);
  Weight eta = finite_weight(rs, alist_to_labeling(a, m));
  Weight v = rs.rho - rat(n, u) * eta;
  return rat(u, 2 * n) * dot(v, v) - rat((long long)n * n, 24LL * u);
}
struct AListSums {
  Rational S = 0, S2 = 0, M = 0;
};
inline AListSums alist_sums(const AList& a) {
  AListSums r;
  int u = (int)a.size();
  for (int x : a) r.S += x, r.S2 += (long long)x * x;
  for (int k = 1; k <= u; ++k) r.M += Rational((long long)k * a[u - k]);
  return r;
}
// (rho, eta) = (sS - S2)/2 and |eta|^2 = 2M - S - S^2/s at m = 0, which fixes the sign of the first term.
inline Rational n_invariant_closed(const AList& a, int u, int s) {
  auto [S, S2, M] = alist_sums(a);
  return -(S * S + Rational((long long)s * (u + 1)) * S - Rational(u) * S2 - Rational(2LL * s) * M) / Rational(2LL * u) +
         rat((long long)s * s * ((long long)u * u - 1) - (long long)u * u, 24LL * u);
}
// same expression with a + on the first term; disagrees with the direct value
inline Rational n_invariant_closed_flipped(const AList& a, int u, int s) {
  auto [S, S2, M] = alist_sums(a);
  return (S * S + Rational((long long)s * (u + 1)) * S - Rational(u) * S2 - Rational(2LL * s) * M) / Rational(2LL * u) +
         rat((long long)s * s * ((long long)u * u - 1) - (long long)u * u, 24LL * u);
}

inline bool rho_only_check(const RootSystem& rs, int p) {
  Rational mn = *std::min_element(rs.marks.begin(), rs.marks.end());
  return Rational(p - rs.h_dual) < mn;
}

// ---------------------------------------------------------------- raw S

enum class Provenance { general, reduced, factorized, kac_peterson, double_coset };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::general: return "general";
    case Provenance::reduced: return "reduced";
    case Provenance::factorized: return "factorized";
    case Provenance::kac_peterson: return "kac-peterson";
    case Provenance::double_coset: return "double-coset";
  }
  return "?";
}

struct SMatrixRaw {
  std::vector<std::string> labels;
  Provenance provenance = Provenance::general;
  bool exact = false;
  std::vector<std::vector<CycSum>> ex;  // filled when exact
  CMatrix approx;                       // always filled
  CycSum global = CycSum(Rational(1));  // constant factor left out of the entries
  double real_scale = 1.0;              // positive real factor left out as well

  size_t size() const { return approx.size(); }
};

inline void fill_approx(SMatrixRaw& r) {
  size_t k = r.ex.size();
  r.approx.assign(k, std::vector<ComplexApprox>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) r.approx[i][j] = r.ex[i][j].eval();
}

inline int default_threads() {
  if (const char* e = std::getenv("BWALG_THREADS")) {
    int t = std::atoi(e);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(0..count-1); each index is independent, so results do not depend on threading.
inline void parallel_for(size_t count, const std::function<void(size_t)>& f, int threads = 0) {
  if (threads <= 0) threads = default_threads();
  threads = (int)std::min<size_t>(threads, std::max<size_t>(count, 1));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t i; (i = next++) < count;) f(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

// Heap's algorithm over S_k: visit(perm, sign).
inline void for_each_signed_perm(int k, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> a(k), c(k, 0);
  std::iota(a.begin(), a.end(), 0);
  int sign = 1;
  visit(a, sign);
  for (int i = 1; i < k;) {
    if (c[i] < i) {
      std::swap(a[i % 2 == 0 ? 0 : c[i]], a[i]);
      sign = -sign;
      visit(a, sign);
      ++c[i];
      i = 1;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

// Weight with coordinates in (1/n)Z, as integers n*x.
inline std::vector<long long> scaled_ints(const Weight& v, long long n) {
  std::vector<long long> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational x = v[i] * n;
    if (den(x) != 1) throw std::invalid_argument("weight coordinate outside (1/n)Z");
    r[i] = to_ll(num(x));
  }
  return r;
}

struct TypeAModule {
  Weight nu;
  BetaRep rep;
  std::string label;
};

// Shortest coset representatives of W/W_0 with the xi-product folded into an integer coefficient.
struct WGamma {
  int n = 0;
  std::vector<uint8_t> perm;       // w[label] = position, n bytes per element
  std::vector<long long> coeff;    // eps(w) * prod (w alpha, xi)
  long long denom = 1;             // prod (alpha, xi)
  size_t size() const { return coeff.size(); }
};

inline WGamma enumerate_wgamma(const Pyramid& pyr, const std::vector<long long>& xi) {
  int n = pyr.n;
  if ((int)xi.size() != n) throw std::invalid_argument("xi has wrong length");
  WGamma g;
  g.n = n;
  long long spread = 1;
  for (auto [i, j] : pyr.delta0_pos) {
    long long d = xi[i - 1] - xi[j - 1];
    if (d == 0) throw std::invalid_argument("xi lies on a wall of Delta_0");
    g.denom *= d;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) spread = std::max(spread, std::llabs(xi[i] - xi[j]));
  std::vector<int> cols(n);
  for (int i = 1; i <= n; ++i) cols[i - 1] = pyr.col[i];
  std::vector<std::vector<int>> col_labels(pyr.heights.size());
  for (int i = 1; i <= n; ++i) col_labels[pyr.col[i]].push_back(i - 1);
  // overflow guard for the int64 accumulators
  long double bound = std::pow((long double)spread, (long double)pyr.delta0_pos.size());
  std::vector<int> arr = cols;
  std::vector<int> w(n), cursor(col_labels.size());
  do {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int t = 0; t < n; ++t) {
      int c = arr[t];
      w[col_labels[c][cursor[c]++]] = t;
    }
    long long prod = perm_sign(w);
    for (auto [i, j] : pyr.delta0_pos) prod *= xi[w[i - 1]] - xi[w[j - 1]];
    for (int t = 0; t < n; ++t) g.perm.push_back((uint8_t)w[t]);
    g.coeff.push_back(prod);
  } while (std::next_permutation(arr.begin(), arr.end()));
  if (bound * (long double)g.size() > 4e18L) throw std::overflow_error("xi too large for exact accumulation");
  return g;
}

// sum over S_n of eps(w) e^{-2 pi i (u/p)(w nu, nu')}, exact
inline CycSum nu_sum(const std::vector<long long>& V, const std::vector<long long>& Vp, long long n, int p, int u) {
  long long N = (long long)p * n * n;
  PhaseAccumulator acc(N);
  int k = (int)V.size();
  for_each_signed_perm(k, [&](const std::vector<int>& w, int sg) {
    long long d = 0;
    for (int j = 0; j < k; ++j) d += V[w[j]] * Vp[j];
    acc.add(-(long long)u * d, sg);
  });
  return acc.to_cycsum();
}

inline int count_positive_degree(const Pyramid& pyr) {
  int c = 0;
  for (int i = 1; i <= pyr.n; ++i)
    for (int j = i + 1; j <= pyr.n; ++j)
      if (pyr.col[j] > pyr.col[i]) ++c;
  return c;
}

inline SMatrixRaw smatrix_general(const Pyramid& pyr, int p, int u, const std::vector<TypeAModule>& mods,
                                  const std::vector<long long>& xi, Backend backend = Backend::exact,
                                  int threads = 0) {
  int n = pyr.n;
  WGamma wg = enumerate_wgamma(pyr, xi);
  long long N = (long long)u * n * n;
  size_t k = mods.size();
  std::vector<std::vector<long long>> B(k), V(k);
  for (size_t a = 0; a < k; ++a) {
    B[a] = scaled_ints(mods[a].rep.beta, n);
    V[a] = scaled_ints(mods[a].nu, n);
  }
  bool nu_const = std::all_of(mods.begin(), mods.end(), [&](const TypeAModule& m) { return m.nu == mods[0].nu; });
  std::map<std::pair<std::vector<long long>, std::vector<long long>>, CycSum> kcache;
  auto K = [&](size_t a, size_t b) -> const CycSum& {
    auto key = std::make_pair(V[a], V[b]);
    auto it = kcache.find(key);
    if (it == kcache.end()) it = kcache.emplace(key, nu_sum(V[a], V[b], n, p, u)).first;
    return it->second;
  };
  if (!nu_const)
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) K(a, b);

  SMatrixRaw r;
  r.provenance = Provenance::general;
  r.exact = backend == Backend::exact;
  for (auto& m : mods) r.labels.push_back(m.label);
  r.ex.assign(k, std::vector<CycSum>(k));
  r.approx.assign(k, std::vector<ComplexApprox>(k));
  int quarter = (n * (n - 1) / 2 + count_positive_degree(pyr)) % 4;
  r.global = CycSum::e(quarter, 4);
  if (nu_const) r.global = r.global * K(0, 0);
  r.real_scale = 1.0 / std::sqrt((double)n * std::pow((double)p * u, n - 1));

  parallel_for(k * k, [&](size_t idx) {
    size_t a = idx / k, b = idx % k;
    std::vector<long long> Z(n);
    for (int j = 0; j < n; ++j) Z[j] = (long long)p * B[a][j] + (long long)u * V[a][j];
    const auto& Bp = B[b];
    long long cross = 0;  // u (nu', beta) in units of 1/N
    for (int j = 0; j < n; ++j) cross += (long long)u * V[b][j] * B[a][j];
    PhaseAccumulator acc(N);
    const uint8_t* w = wg.perm.data();
    for (size_t t = 0; t < wg.size(); ++t, w += n) {
      long long d = cross;
      for (int j = 0; j < n; ++j) d += Z[w[j]] * Bp[j];
      acc.add(-d, wg.coeff[t]);
    }
    int sign = mods[a].rep.sign * mods[b].rep.sign;
    CycSum e = acc.to_cycsum(rat(sign, 1) / Rational(wg.denom));
    if (!nu_const) e = e * kcache.at({V[a], V[b]});
    r.approx[a][b] = e.eval();
    if (r.exact) r.ex[a][b] = std::move(e);
  }, threads);
  if (!r.exact) r.ex.clear();
  return r;
}

// Boundary reduced form: product over rows of signed S_{n_r} sums with exponent n/u.
inline SMatrixRaw smatrix_boundary_reduced(const Pyramid& pyr, const std::vector<BetaRep>& reps,
                                           Backend backend = Backend::exact, int threads = 0) {
  int n = pyr.n, u = pyr.u;
  long long N = (long long)u * n;
  size_t k = reps.size();
  std::vector<std::vector<long long>> B(k);
  for (size_t a = 0; a < k; ++a) B[a] = scaled_ints(reps[a].beta, n);
  struct RowPerms {
    std::vector<int> labels;
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
  };
  std::vector<RowPerms> rows;
  for (auto& L : pyr.rows) {
    RowPerms rp;
    for (int l : L) rp.labels.push_back(l - 1);
    for_each_signed_perm((int)L.size(), [&](const std::vector<int>& w, int sg) {
      rp.perms.push_back(w);
      rp.signs.push_back(sg);
    });
    rows.push_back(std::move(rp));
  }
  SMatrixRaw r;
  r.provenance = Provenance::reduced;
  r.exact = backend == Backend::exact;
  for (auto& b : reps) r.labels.push_back(to_string(b.eta));
  r.ex.assign(k, std::vector<CycSum>(k));
  r.approx.assign(k, std::vector<ComplexApprox>(k));
  parallel_for(k * k, [&](size_t idx) {
    size_t a = idx / k, b = idx % k;
    CycSum e(Rational(1));
    for (auto& rp : rows) {
      PhaseAccumulator acc(N);
      size_t len = rp.labels.size();
      for (size_t t = 0; t < rp.perms.size(); ++t) {
        long long d = 0;
        for (size_t q = 0; q < len; ++q) d += B[a][rp.labels[rp.perms[t][q]]] * B[b][rp.labels[q]];
        acc.add(-d, rp.signs[t]);
      }
      e = e * acc.to_cycsum();
    }
    r.approx[a][b] = e.eval();
    if (r.exact) r.ex[a][b] = std::move(e);
  }, threads);
  if (!r.exact) r.ex.clear();
  return r;
}

// Sign of the element taking pi_r beta to rho^(r) inside the row's A_{u-1}.
inline int row_orbit_sign(const Pyramid& pyr, const Weight& beta, int r) {
  const auto& L = pyr.rows[r];
  int len = (int)L.size();
  Rational mean = 0;
  for (int l : L) mean += beta[l - 1];
  mean /= len;
  Weight v(len);
  for (int q = 0; q < len; ++q) v[q] = beta[L[q] - 1] - mean;
  auto rs = build_A(len - 1);
  auto [d, w] = dominant_rep(rs, v);
  if (d != rs.rho) throw std::logic_error("row projection is not in the Weyl orbit of rho");
  return w.sign;
}

inline Rational bracket_form(const Pyramid& pyr, const Weight& b1, const Weight& b2) {
  Weight s1 = project(pyr, b1, Part::s_part), s2 = project(pyr, b2, Part::s_part);
  Weight f1 = project(pyr, b1, Part::f_part), f2 = project(pyr, b2, Part::f_part);
  return Rational(pyr.m) * dot(s1, s2) + rat(pyr.n, pyr.u) * dot(f1, f2);
}

inline SMatrixRaw smatrix_boundary_factorized(const Pyramid& pyr, const std::vector<BetaRep>& reps,
                                              Backend backend = Backend::exact) {
  int u = pyr.u, s = pyr.s;
  size_t k = reps.size();
  int srow = pyr.s_row();
  const auto& top = pyr.rows[srow];
  std::vector<Weight> ps(k);
  std::vector<int> eps_u(k, 1);
  for (size_t a = 0; a < k; ++a) {
    ps[a] = project(pyr, reps[a].beta, Part::s_part);
    for (int r : pyr.u_rows()) eps_u[a] *= row_orbit_sign(pyr, reps[a].beta, r);
  }
  SMatrixRaw res;
  res.provenance = Provenance::factorized;
  res.exact = backend == Backend::exact;
  for (auto& b : reps) res.labels.push_back(to_string(b.eta));
  res.ex.assign(k, std::vector<CycSum>(k));
  std::vector<std::pair<std::vector<int>, int>> sperm;
  for_each_signed_perm(s, [&](const std::vector<int>& w, int sg) { sperm.push_back({w, sg}); });
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Rational br = bracket_form(pyr, reps[a].beta, reps[b].beta);
      CycSum e;
      for (auto& [w, sg] : sperm) {
        Rational d = 0;
        for (int q = 0; q < s; ++q) d += ps[a][top[w[q]] - 1] * ps[b][top[q] - 1];
        e.add_term(Phase(-(br + rat(s, u) * d)), Rational(sg * eps_u[a] * eps_u[b]));
      }
      res.ex[a][b] = std::move(e);
    }
  // fixed u-row factor: one signed S_u sum per row of length u
  if (pyr.m > 0) {
    PhaseAccumulator acc(4LL * u);
    std::vector<long long> R(u);
    for (int q = 0; q < u; ++q) R[q] = u - 1 - 2 * q;  // 2 rho^(u)
    for_each_signed_perm(u, [&](const std::vector<int>& w, int sg) {
      long long d = 0;
      for (int q = 0; q < u; ++q) d += R[w[q]] * R[q];
      acc.add(-(long long)pyr.n * d, sg);
    });
    CycSum one_row = acc.to_cycsum();
    if (one_row.is_zero()) throw std::logic_error("vanishing u-row constant");
    for (size_t r = 0; r < pyr.u_rows().size(); ++r) res.global = res.global * one_row;
  }
  fill_approx(res);
  if (!res.exact) res.ex.clear();
  return res;
}

// Kac-Peterson sum for L_level(sl_s): entries sum_w eps(w) e^{-2 pi i (w nu, nu')/p}, nu = lambda + rho.
struct AffineWeights {
  int s = 0, level = 0, p = 0;
  std::vector<std::vector<int>> labels;  // finite Dynkin labels of lambda
  std::vector<Weight> nu;
};

inline AffineWeights affine_weights(int s, int level) {
  AffineWeights aw;
  aw.s = s;
  aw.level = level;
  aw.p = level + s;
  auto rs = build_A(s - 1);
  std::vector<int> cur(s - 1, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == s - 1) {
      aw.labels.push_back(cur);
      std::vector<Rational> c(cur.begin(), cur.end());
      aw.nu.push_back(rs.from_labels(c) + rs.rho);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, level);
  return aw;
}

inline SMatrixRaw kac_peterson_raw(const AffineWeights& aw) {
  int s = aw.s;
  size_t k = aw.nu.size();
  SMatrixRaw r;
  r.provenance = Provenance::kac_peterson;
  r.exact = true;
  r.ex.assign(k, std::vector<CycSum>(k));
  for (size_t a = 0; a < k; ++a) {
    std::string lab = "(";
    for (size_t i = 0; i < aw.labels[a].size(); ++i) lab += (i ? "," : "") + std::to_string(aw.labels[a][i]);
    r.labels.push_back(lab + ")");
  }
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      r.ex[a][b] = nu_sum(scaled_ints(aw.nu[a], s), scaled_ints(aw.nu[b], s), s, aw.p, 1);
  r.global = CycSum::e(s * (s - 1) / 2, 4);
  r.real_scale = 1.0 / std::sqrt((double)s * std::pow((double)aw.p, s - 1));
  fill_approx(r);
  return r;
}

// ---------------------------------------------------------------- normalization

struct AxiomReport {
  bool ok = true;
  double unitary = 0, symmetric = 0, modular = 0, conjugation = 0, vacuum_real = 0;
  double min_positive = 0;
  std::string failure;
};

struct ModularDatum {
  std::vector<std::string> labels;
  int vacuum = 0, minimal = 0;
  CMatrix S;
  std::vector<Rational> h;
  Rational c;
  std::vector<Rational> t;  // h - c/24
  std::vector<int> signs;   // per-index signs applied to the raw matrix
  ComplexApprox scale;      // S = scale * signs * raw * signs
  AxiomReport axioms;
  size_t size() const { return S.size(); }
  ComplexApprox T(size_t i, long long power = 1) const { return Phase(t[i] * power).eval(); }
};

inline CMatrix cmul(const CMatrix& a, const CMatrix& b) {
  size_t n = a.size();
  CMatrix r(n, std::vector<ComplexApprox>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == ComplexApprox(0)) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}
inline CMatrix times_diag(const CMatrix& a, const std::vector<ComplexApprox>& d) {
  CMatrix r = a;
  for (auto& row : r)
    for (size_t j = 0; j < row.size(); ++j) row[j] *= d[j];
  return r;
}
inline double max_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

inline AxiomReport check_axioms(const ModularDatum& d, double tol = 1e-9) {
  AxiomReport r;
  size_t n = d.size();
  CMatrix Sh(n, std::vector<ComplexApprox>(n)), ST(n, std::vector<ComplexApprox>(n)), I(n, std::vector<ComplexApprox>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    I[i][i] = 1;
    for (size_t j = 0; j < n; ++j) {
      Sh[i][j] = std::conj(d.S[j][i]);
      ST[i][j] = d.S[j][i];
    }
  }
  r.unitary = max_diff(cmul(d.S, Sh), I);
  r.symmetric = max_diff(d.S, ST);
  std::vector<ComplexApprox> T(n);
  for (size_t i = 0; i < n; ++i) T[i] = d.T(i);
  CMatrix S2 = cmul(d.S, d.S);
  CMatrix M = times_diag(d.S, T);
  r.modular = max_diff(cmul(cmul(M, M), M), S2);
  // C is a permutation matrix with C^2 = I
  double cdev = 0;
  CMatrix C(n, std::vector<ComplexApprox>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    int ones = 0;
    for (size_t j = 0; j < n; ++j) {
      double x = std::round(S2[i][j].real());
      cdev = std::max(cdev, std::abs(S2[i][j] - ComplexApprox(x)));
      if (x == 1) ++ones, C[i][j] = 1;
      else if (x != 0) cdev = std::max(cdev, 1.0);
    }
    if (ones != 1) cdev = std::max(cdev, 1.0);
  }
  cdev = std::max(cdev, max_diff(cmul(C, C), I));
  r.conjugation = cdev;
  r.min_positive = 1e300;
  for (size_t i = 0; i < n; ++i) {
    r.vacuum_real = std::max(r.vacuum_real, std::abs(d.S[d.vacuum][i].imag()));
    r.min_positive = std::min(r.min_positive, d.S[i][d.minimal].real());
    r.vacuum_real = std::max(r.vacuum_real, std::abs(d.S[i][d.minimal].imag()));
  }
  auto fail = [&](bool bad, const std::string& what, double v) {
    if (bad && r.ok) {
      r.ok = false;
      r.failure = what + " residual " + std::to_string(v);
    }
  };
  fail(r.unitary > tol, "unitarity", r.unitary);
  fail(r.symmetric > tol, "symmetry", r.symmetric);
  fail(r.modular > tol, "(ST)^3 = S^2", r.modular);
  fail(r.conjugation > tol, "charge conjugation", r.conjugation);
  fail(r.vacuum_real > tol, "vacuum row reality", r.vacuum_real);
  fail(r.min_positive <= tol, "positivity of the minimal column", r.min_positive);
  return r;
}

struct AxiomFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ModularDatum normalize_datum(const SMatrixRaw& raw, const std::vector<Rational>& h, const Rational& c,
                                    double tol = 1e-9, bool require = true) {
  size_t n = raw.size();
  if (h.size() != n) throw std::invalid_argument("h-list size mismatch");
  ModularDatum d;
  d.labels = raw.labels;
  d.h = h;
  d.c = c;
  for (auto& x : h) d.t.push_back(x - c / 24);
  auto mn = std::min_element(h.begin(), h.end());
  if (std::count(h.begin(), h.end(), *mn) != 1) throw std::invalid_argument("minimal conformal dimension not unique");
  d.minimal = (int)(mn - h.begin());
  auto vac = std::find(h.begin(), h.end(), Rational(0));
  if (vac == h.end() || std::count(h.begin(), h.end(), Rational(0)) != 1)
    throw std::invalid_argument("no unique vacuum (h = 0)");
  d.vacuum = (int)(vac - h.begin());
  std::vector<double> norms(n);
  for (size_t i = 0; i < n; ++i) {
    double s = 0;
    for (size_t j = 0; j < n; ++j) s += std::norm(raw.approx[i][j]);
    norms[i] = std::sqrt(s);
  }
  for (size_t i = 0; i < n; ++i)
    if (std::abs(norms[i] - norms[0]) > 1e-9 * norms[0])
      throw std::runtime_error("raw S rows have unequal norms (row " + std::to_string(i) + ")");
  int o = d.minimal;
  ComplexApprox z = raw.approx[o][o];
  if (std::abs(z) < 1e-12 * norms[0]) throw std::runtime_error("vanishing S at the minimal index");
  d.scale = std::conj(z) / std::abs(z) / norms[0];
  d.signs.assign(n, 1);
  for (size_t i = 0; i < n; ++i) {
    ComplexApprox x = d.scale * raw.approx[o][i];
    if (std::abs(x.real()) < 1e-12) throw std::runtime_error("vanishing entry in the minimal row");
    d.signs[i] = x.real() > 0 ? 1 : -1;
  }
  d.S.assign(n, std::vector<ComplexApprox>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d.S[i][j] = d.scale * double(d.signs[i] * d.signs[j]) * raw.approx[i][j];
  d.axioms = check_axioms(d, tol);
  if (require && !d.axioms.ok) throw AxiomFailure("modular datum axiom failure: " + d.axioms.failure);
  return d;
}

// ---------------------------------------------------------------- fusion

struct FusionTable {
  int n = 0;
  std::vector<long long> N;  // N[(i n + j) n + k]
  double max_dev = 0;
  long long at(int i, int j, int k) const { return N[((size_t)i * n + j) * n + k]; }
  bool operator==(const FusionTable& o) const { return n == o.n && N == o.N; }
};

struct FusionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline FusionTable verlinde(const ModularDatum& d, double tol = 1e-6) {
  int n = (int)d.size(), v = d.vacuum;
  FusionTable f;
  f.n = n;
  f.N.assign((size_t)n * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ComplexApprox s = 0;
        for (int x = 0; x < n; ++x) s += d.S[i][x] * d.S[j][x] * std::conj(d.S[k][x]) / d.S[v][x];
        double r = std::round(s.real());
        double dev = std::abs(s - ComplexApprox(r));
        f.max_dev = std::max(f.max_dev, dev);
        if (dev > tol || r < 0)
          throw FusionError("non-integral fusion coefficient N_{" + std::to_string(i) + "," + std::to_string(j) +
                            "}^" + std::to_string(k) + " = " + std::to_string(s.real()));
        f.N[((size_t)i * n + j) * n + k] = (long long)r;
      }
  return f;
}

inline std::vector<double> fp_dimensions(const ModularDatum& d) {
  std::vector<double> r;
  for (size_t i = 0; i < d.size(); ++i) r.push_back(d.S[i][d.minimal].real() / d.S[d.vacuum][d.minimal].real());
  return r;
}

inline double perron_root(const FusionTable& f, int i) {
  Eigen::MatrixXd M(f.n, f.n);
  for (int j = 0; j < f.n; ++j)
    for (int k = 0; k < f.n; ++k) M(j, k) = (double)f.at(i, j, k);
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  double best = 0;
  for (int q = 0; q < f.n; ++q) best = std::max(best, std::abs(es.eigenvalues()[q]));
  return best;
}

// unit, commutativity, associativity
inline std::string fusion_ring_defect(const FusionTable& f, int vacuum) {
  int n = f.n;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (f.at(vacuum, j, k) != (j == k)) return "vacuum is not a unit";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (f.at(i, j, k) != f.at(j, i, k)) return "not commutative";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          long long l = 0, r = 0;
          for (int x = 0; x < n; ++x) {
            l += f.at(a, b, x) * f.at(x, c, e);
            r += f.at(b, c, x) * f.at(a, x, e);
          }
          if (l != r) return "not associative";
        }
  return "";
}

// ---------------------------------------------------------------- Galois

inline long long t_conductor(const ModularDatum& d) {
  long long N = 1;
  for (auto& t : d.t) N = lcm_ll(N, Phase(t).order());
  return N;
}

struct GaloisResult {
  std::vector<int> sigma;
  std::vector<int> eps;
  double residual = 0;
};

inline GaloisResult galois_symmetry(const ModularDatum& d, long long ell, long long N) {
  if (N % t_conductor(d) != 0) throw std::invalid_argument("N is not a multiple of the T conductor");
  long long inv = inverse_mod(ell, N);
  size_t n = d.size();
  std::vector<ComplexApprox> Tl(n), Ti(n);
  for (size_t i = 0; i < n; ++i) {
    Tl[i] = d.T(i, ell);
    Ti[i] = d.T(i, inv);
  }
  CMatrix C = cmul(d.S, d.S);
  for (auto& row : C)
    for (auto& x : row) x = std::round(x.real());
  CMatrix G = cmul(C, d.S);
  G = times_diag(G, Ti);
  G = cmul(G, d.S);
  G = times_diag(G, Tl);
  G = cmul(G, d.S);
  G = times_diag(G, Ti);
  GaloisResult r;
  r.sigma.assign(n, -1);
  r.eps.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double re = std::round(G[i][j].real());
      r.residual = std::max(r.residual, std::abs(G[i][j] - ComplexApprox(re)));
      if (re != 0) {
        if (r.sigma[i] != -1 || std::abs(re) != 1) throw std::runtime_error("G is not a signed permutation");
        r.sigma[i] = (int)j;
        r.eps[i] = (int)re;
      }
    }
  for (size_t i = 0; i < n; ++i)
    if (r.sigma[i] < 0) throw std::runtime_error("G is not a signed permutation");
  if (r.residual > 1e-6) throw std::runtime_error("G deviates from a signed permutation");
  return r;
}

// S_{Sigma(i),j} = eps(i) sigma(S_ij), where sigma(S) = kappa * E sigma(raw) E for one
// unknown unit constant kappa. Returns the max residual after fitting kappa.
inline double galois_entry_residual(const ModularDatum& d, const GaloisResult& g, const CMatrix& sigma_raw) {
  size_t n = d.size();
  ComplexApprox kappa = 0;
  double best = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ComplexApprox x = sigma_raw[i][j] * double(d.signs[i] * d.signs[j]);
      if (std::abs(x) > best) best = std::abs(x), kappa = d.S[g.sigma[i]][j] * double(g.eps[i]) / x;
    }
  double res = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ComplexApprox x = kappa * sigma_raw[i][j] * double(d.signs[i] * d.signs[j]);
      res = std::max(res, std::abs(d.S[g.sigma[i]][j] * double(g.eps[i]) - x));
    }
  return res;
}

inline CMatrix galois_raw(const SMatrixRaw& r, long long ell) {
  if (!r.exact) throw std::invalid_argument("Galois action needs exact entries");
  CMatrix m(r.size(), std::vector<ComplexApprox>(r.size()));
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) m[i][j] = r.ex[i][j].galois(ell).eval();
  return m;
}

// ---------------------------------------------------------------- comparisons

// A = const * E B E for signs E. Exact when both are exact, else float to tol.
struct Proportionality {
  bool ok = false;
  std::vector<int> eps;
  double residual = 0;
  std::string detail;
};

inline Proportionality proportional(const SMatrixRaw& A, const SMatrixRaw& B, bool exact, double tol = 1e-9) {
  Proportionality pr;
  size_t n = A.size();
  if (B.size() != n) {
    pr.detail = "size mismatch";
    return pr;
  }
  // pivot: largest diagonal entry of A
  size_t r = 0;
  for (size_t i = 0; i < n; ++i)
    if (std::abs(A.approx[i][i]) > std::abs(A.approx[r][r])) r = i;
  ComplexApprox arr = A.approx[r][r], brr = B.approx[r][r];
  pr.eps.assign(n, 0);
  pr.eps[r] = 1;
  double scale = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(A.approx[i][j] * brr));
  for (size_t i = 0; i < n; ++i) {
    if (i == r) continue;
    for (size_t q = 0; q < n && !pr.eps[i]; ++q) {
      // need eps_q known and A_iq nonzero
      size_t qq = q == 0 ? r : q;
      if (!pr.eps[qq]) continue;
      ComplexApprox x = A.approx[i][qq] * brr, y = B.approx[i][qq] * arr;
      if (std::abs(y) < 1e-9 * scale) continue;
      double re = (x / y).real();
      pr.eps[i] = (re > 0 ? 1 : -1) * pr.eps[qq];
    }
    if (!pr.eps[i]) {
      pr.detail = "could not determine sign of index " + std::to_string(i);
      return pr;
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ComplexApprox d = A.approx[i][j] * brr - double(pr.eps[i] * pr.eps[j]) * B.approx[i][j] * arr;
      pr.residual = std::max(pr.residual, std::abs(d) / scale);
    }
  if (pr.residual > tol) {
    pr.detail = "float residual " + std::to_string(pr.residual);
    return pr;
  }
  if (exact) {
    if (!A.exact || !B.exact) {
      pr.detail = "exact comparison requested on float matrices";
      return pr;
    }
    long long M = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) M = lcm_ll(M, lcm_ll(A.ex[i][j].conductor(), B.ex[i][j].conductor()));
    CycCanon Arr = A.ex[r][r].canon(M), Brr = B.ex[r][r].canon(M);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        CycCanon lhs = A.ex[i][j].canon(M) * Brr;
        CycCanon rhs = B.ex[i][j].scaled(pr.eps[i] * pr.eps[j]).canon(M) * Arr;
        if (!(lhs == rhs)) {
          pr.detail = "exact mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return pr;
        }
      }
  }
  pr.ok = true;
  return pr;
}

// ---------------------------------------------------------------- type A drivers

struct BoundaryCase {
  Pyramid pyr;
  std::vector<AffineLabeling> etas;
  std::vector<BetaRep> reps;
  std::vector<Rational> h;
  Rational c;
};

inline BoundaryCase boundary_case(int u, int s, int m) {
  BoundaryCase bc;
  bc.pyr = build_pyramid(u, s, m);
  bc.etas = enumerate_replete(bc.pyr);
  for (auto& e : bc.etas) {
    bc.reps.push_back(construct_beta(bc.pyr, e));
    bc.h.push_back(conformal_dimension(e, bc.pyr.x0, bc.pyr.n, u, bc.pyr.rs));
  }
  bc.c = central_charge(bc.pyr, bc.pyr.n, u);
  return bc;
}

inline std::vector<TypeAModule> rho_modules(const BoundaryCase& bc) {
  std::vector<TypeAModule> mods;
  for (size_t i = 0; i < bc.reps.size(); ++i) mods.push_back({bc.pyr.rs.rho, bc.reps[i], to_string(bc.etas[i])});
  return mods;
}

inline ModularDatum boundary_datum(const BoundaryCase& bc, Backend backend = Backend::float_) {
  return normalize_datum(smatrix_boundary_reduced(bc.pyr, bc.reps, backend), bc.h, bc.c);
}

// Non-boundary levels p > n: modules (nu, eta) with nu regular dominant at level p and eta
// one representative per replete orbit.
struct TypeACase {
  Pyramid pyr;
  int p = 0;
  std::vector<TypeAModule> mods;
  std::vector<Rational> h;
  Rational c;
};

inline TypeACase type_a_case(int u, int s, int m, int p) {
  TypeACase tc;
  tc.pyr = build_pyramid(u, s, m);
  tc.p = p;
  int n = tc.pyr.n;
  if (p < n || std::gcd(p, u) != 1) throw std::invalid_argument("need p >= n and gcd(p, u) = 1");
  auto etas = enumerate_replete(tc.pyr);
  auto aw = affine_weights(n, p - n);
  for (size_t a = 0; a < aw.nu.size(); ++a)
    for (auto& e : etas) {
      auto rep = construct_beta(tc.pyr, e);
      std::string lab = to_string(e);
      if (p > n) {
        lab = "[";
        for (size_t i = 0; i < aw.labels[a].size(); ++i) lab += (i ? "," : "") + std::to_string(aw.labels[a][i]);
        lab += "]" + to_string(e);
      }
      tc.mods.push_back({aw.nu[a], rep, lab});
      tc.h.push_back(conformal_dimension(aw.nu[a], finite_weight(tc.pyr.rs, e), tc.pyr.x0, tc.pyr.rs.rho, p, u));
    }
  tc.c = central_charge(tc.pyr, p, u);
  return tc;
}

inline SMatrixRaw type_a_raw(const TypeACase& tc, Backend backend, int threads = 0) {
  std::vector<long long> xi(tc.pyr.n);
  std::iota(xi.begin(), xi.end(), 1);
  if (tc.p == tc.pyr.n) {
    std::vector<BetaRep> reps;
    for (auto& m : tc.mods) reps.push_back(m.rep);
    auto r = smatrix_boundary_reduced(tc.pyr, reps, backend, threads);
    for (size_t i = 0; i < r.labels.size(); ++i) r.labels[i] = tc.mods[i].label;
    return r;
  }
  return smatrix_general(tc.pyr, tc.p, tc.pyr.u, tc.mods, xi, backend, threads);
}

struct AffineData {
  AffineWeights weights;
  SMatrixRaw raw;
  ModularDatum datum;
  FusionTable fusion;
  std::vector<int> restricted;  // indices with lambda in the root lattice
  FusionTable restricted_fusion;
};

inline AffineData affine_smatrix(int s_rank, int level, bool restrict_to_root_lattice) {
  AffineData ad;
  ad.weights = affine_weights(s_rank, level);
  ad.raw = kac_peterson_raw(ad.weights);
  auto rs = build_A(s_rank - 1);
  std::vector<Rational> h;
  for (auto& nu : ad.weights.nu) h.push_back((dot(nu, nu) - dot(rs.rho, rs.rho)) / (2 * ad.weights.p));
  Rational c = Rational((long long)level * (s_rank * s_rank - 1)) / ad.weights.p;
  ad.datum = normalize_datum(ad.raw, h, c);
  ad.fusion = verlinde(ad.datum);
  for (size_t a = 0; a < ad.weights.labels.size(); ++a) {
    long long t = 0;
    for (size_t i = 0; i < ad.weights.labels[a].size(); ++i) t += (long long)(i + 1) * ad.weights.labels[a][i];
    if (!restrict_to_root_lattice || t % s_rank == 0) ad.restricted.push_back((int)a);
  }
  int r = (int)ad.restricted.size();
  ad.restricted_fusion.n = r;
  ad.restricted_fusion.N.assign((size_t)r * r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        ad.restricted_fusion.N[((size_t)i * r + j) * r + k] =
            ad.fusion.at(ad.restricted[i], ad.restricted[j], ad.restricted[k]);
  return ad;
}

// Is f2 the relabeling of f1 by perm (f2[perm i][perm j][perm k] = f1[i][j][k])?
inline bool fusion_matches(const FusionTable& f1, const FusionTable& f2, const std::vector<int>& perm) {
  if (f1.n != f2.n) return false;
  for (int i = 0; i < f1.n; ++i)
    for (int j = 0; j < f1.n; ++j)
      for (int k = 0; k < f1.n; ++k)
        if (f1.at(i, j, k) != f2.at(perm[i], perm[j], perm[k])) return false;
  return true;
}

inline std::optional<std::vector<int>> fusion_isomorphism_search(const FusionTable& f1, const FusionTable& f2) {
  if (f1.n != f2.n || f1.n > 9) return std::nullopt;
  std::vector<int> perm(f1.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (fusion_matches(f1, f2, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// boundary principal modules eta (level u) -> affine weights eta - rho at level u - s, rotated into Q
struct PrincipalAffineMatch {
  bool explicit_map_ok = false, search_ok = false;
  std::vector<int> map;  // boundary index -> restricted affine index
  std::string detail;
};

inline PrincipalAffineMatch principal_affine_match(int u, int s) {
  PrincipalAffineMatch pm;
  auto bc = boundary_case(u, s, 0);
  auto bd = boundary_datum(bc);
  auto bf = verlinde(bd);
  auto ad = affine_smatrix(s, u - s, true);
  for (auto& eta : bc.etas) {
    std::vector<int> lab = eta.labels;
    for (auto& x : lab) x -= 1;
    auto q = rotate_into_root_lattice(make_labeling(lab));
    if (!q) {
      pm.detail = "no root-lattice rotation for " + to_string(eta);
      break;
    }
    std::vector<int> fin(q->labels.begin() + 1, q->labels.end());
    int found = -1;
    for (size_t r = 0; r < ad.restricted.size(); ++r)
      if (ad.weights.labels[ad.restricted[r]] == fin) found = (int)r;
    pm.map.push_back(found);
  }
  if (pm.map.size() == bc.etas.size() && std::find(pm.map.begin(), pm.map.end(), -1) == pm.map.end())
    pm.explicit_map_ok = fusion_matches(bf, ad.restricted_fusion, pm.map);
  if (!pm.explicit_map_ok) {
    if (auto perm = fusion_isomorphism_search(bf, ad.restricted_fusion)) {
      pm.search_ok = true;
      pm.map = *perm;
    }
  }
  if (pm.detail.empty())
    pm.detail = pm.explicit_map_ok ? "eta - rho map" : (pm.search_ok ? "matched by search" : "no isomorphism");
  return pm;
}

// Full W(sl_n[u^m,s], p/u) with m = 0 against boundary x affine.
struct FactorizationReport {
  bool ok = false;
  bool exact_ok = false;
  double residual = 1;
  bool fusion_ok = false;
  size_t full_size = 0, boundary_size = 0, affine_size = 0;
  std::string detail;
};

inline FactorizationReport factorization_check(int u, int s, int p, int m) {
  FactorizationReport fr;
  if (m != 0) throw std::invalid_argument("factorization check implemented for m = 0");
  auto pyr = build_pyramid(u, s, m);
  int n = pyr.n;
  auto etas = enumerate_replete(pyr);
  std::vector<BetaRep> reps;
  for (auto& e : etas) {
    auto q = rotate_into_root_lattice(e);
    if (!q) throw std::logic_error("no root-lattice representative");
    reps.push_back(construct_beta(pyr, *q, false));
  }
  auto aw = affine_weights(n, p - n);
  std::vector<TypeAModule> mods;
  std::vector<Rational> h;
  for (size_t a = 0; a < aw.nu.size(); ++a)
    for (size_t b = 0; b < reps.size(); ++b) {
      mods.push_back({aw.nu[a], reps[b], "nu" + std::to_string(a) + ":" + to_string(reps[b].eta)});
      h.push_back(conformal_dimension(aw.nu[a], finite_weight(pyr.rs, reps[b].eta), pyr.x0, pyr.rs.rho, p, u));
    }
  Rational c = central_charge(pyr, p, u);
  std::vector<long long> xi(n);
  std::iota(xi.begin(), xi.end(), 1);
  auto full = smatrix_general(pyr, p, u, mods, xi, Backend::exact);
  auto fd = normalize_datum(full, h, c);

  // boundary factor, Galois-twisted from exponent n/u to p/u
  auto braw = smatrix_boundary_reduced(pyr, reps, Backend::exact);
  long long NB = (long long)u * n;
  long long g = 0;
  for (long long x = 1; x < NB; ++x)
    if (std::gcd(x, NB) == 1 && (x * n) % u == p % u && x % n == 1) {
      g = x;
      break;
    }
  if (!g) throw std::logic_error("no Galois element for the boundary twist");
  auto kraw = kac_peterson_raw(aw);
  SMatrixRaw prod;
  prod.exact = true;
  prod.labels = full.labels;
  size_t kb = reps.size(), kk = aw.nu.size(), k = kb * kk;
  prod.ex.assign(k, std::vector<CycSum>(k));
  for (size_t a = 0; a < kk; ++a)
    for (size_t b = 0; b < kb; ++b)
      for (size_t c2 = 0; c2 < kk; ++c2)
        for (size_t d2 = 0; d2 < kb; ++d2)
          prod.ex[a * kb + b][c2 * kb + d2] = braw.ex[b][d2].galois(g) * kraw.ex[a][c2].galois(u);
  fill_approx(prod);
  auto pr = proportional(full, prod, true, 1e-8);
  fr.exact_ok = pr.ok;
  auto pd = normalize_datum(prod, h, c, 1e-9, false);
  fr.residual = max_diff(fd.S, pd.S);

  // fusion: full = boundary (tensor) affine
  std::vector<Rational> hb;
  for (auto& r : reps) hb.push_back(conformal_dimension(r.eta, pyr.x0, n, u, pyr.rs));
  auto bd = normalize_datum(braw, hb, central_charge(pyr, n, u));
  auto ad = affine_smatrix(n, p - n, false);
  auto ff = verlinde(fd), fb = verlinde(bd);
  fr.fusion_ok = true;
  for (size_t i = 0; i < k && fr.fusion_ok; ++i)
    for (size_t j = 0; j < k && fr.fusion_ok; ++j)
      for (size_t l = 0; l < k; ++l) {
        long long want = ad.fusion.at((int)(i / kb), (int)(j / kb), (int)(l / kb)) *
                         fb.at((int)(i % kb), (int)(j % kb), (int)(l % kb));
        if (ff.at((int)i, (int)j, (int)l) != want) {
          fr.fusion_ok = false;
          fr.detail = "fusion mismatch at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
          break;
        }
      }
  fr.full_size = k;
  fr.boundary_size = kb;
  fr.affine_size = kk;
  fr.ok = fr.exact_ok && fr.residual < 1e-8 && fr.fusion_ok;
  if (fr.detail.empty()) fr.detail = pr.ok ? "ok" : pr.detail;
  return fr;
}

}  // namespace bwalg
