#pragma once
// Subregular E8 at k = -30 + 31/29: 44 modules, S by the A7 < E7 < E8 coset
// decomposition with 8x8 determinants replacing the A7 Weyl sums.

#include <fstream>

#include "modular.hpp"

#ifndef BWALG_DATA_DIR
#define BWALG_DATA_DIR "data"
#endif

namespace bwalg {

struct E8Entry {
  int i = 0, j = 0;
  double value = 0;  // 29 S_ij
  std::string poly;
};

struct E8Table {
  std::vector<std::vector<int>> eta;  // Dynkin labels, Bourbaki order
  std::vector<int> neg29h;
  std::vector<std::vector<std::pair<int, int>>> orbits;  // (index, sign of outgoing arrow)
  std::vector<E8Entry> entries;
  std::map<std::string, std::vector<BigInt>> polys;  // leading coefficient first
  int vacuum = 43, minimal = 25;
  size_t size() const { return eta.size(); }
};

inline std::string default_e8_table_path() { return std::string(BWALG_DATA_DIR) + "/e8_subregular.txt"; }

inline E8Table load_e8_table(const std::string& path = default_e8_table_path()) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  E8Table t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "eta") {
      int i;
      ss >> i;
      std::vector<int> l(8);
      for (auto& x : l) ss >> x;
      if (i != (int)t.eta.size()) throw std::runtime_error("eta rows out of order");
      t.eta.push_back(l);
    } else if (kind == "neg29h") {
      int i, v;
      ss >> i >> v;
      if (i != (int)t.neg29h.size()) throw std::runtime_error("h rows out of order");
      t.neg29h.push_back(v);
    } else if (kind == "orbit") {
      std::vector<std::pair<int, int>> o;
      std::string tok;
      while (ss >> tok) o.push_back({std::stoi(tok.substr(0, tok.size() - 1)), tok.back() == '+' ? 1 : -1});
      t.orbits.push_back(o);
    } else if (kind == "entry") {
      E8Entry e;
      ss >> e.i >> e.j >> e.value >> e.poly;
      t.entries.push_back(e);
    } else if (kind == "poly") {
      std::string name, c;
      ss >> name;
      std::vector<BigInt> cs;
      while (ss >> c) cs.push_back(BigInt(c));
      t.polys[name] = cs;
    } else {
      throw std::runtime_error("unknown record: " + kind);
    }
  }
  if (t.eta.size() != 44 || t.neg29h.size() != 44) throw std::runtime_error("E8 table must have 44 rows");
  return t;
}

// ---------------------------------------------------------------- geometry

struct E8Geometry {
  RootSystem e8, e7;
  Weight alpha;                   // trivalent simple root
  Weight x0;                      // grading element rho - varpi_4
  std::vector<Weight> chain;      // A7 simple roots, in order
  RatMatrix a7_cartan_inv;
  struct Coset {
    RatMatrix m;  // sigma^{-1} for the outer coset
    int weight = 0;
    int sign = 1;
  };
  std::vector<Coset> sigma;     // 57 outer cosets with (sigma alpha, alpha) in {1, 2}
  std::vector<std::pair<RatMatrix, int>> tau_inv;  // 72 inner cosets: (tau^{-1}, eps(tau))
};

// coordinates of x in alpha^perp, written in the Z^8 model of A7 (sum zero)
inline Weight a7_coordinates(const E8Geometry& g, const Weight& x) {
  std::vector<Rational> pr(7);
  for (int k = 0; k < 7; ++k) pr[k] = dot(x, g.chain[k]);
  Weight z(8, 0);
  for (int k = 0; k < 7; ++k) {
    Rational a = 0;
    for (int l = 0; l < 7; ++l) a += g.a7_cartan_inv[k][l] * pr[l];
    z[k] += a;
    z[k + 1] -= a;
  }
  return z;
}

inline E8Geometry build_e8_geometry() {
  E8Geometry g;
  g.e8 = build_E8();
  g.alpha = g.e8.simple[3];
  g.x0 = g.e8.rho - g.e8.fundamental[3];
  g.e7 = build_E7_orthogonal_to(g.e8, g.alpha);
  if (g.e7.roots.size() != 126) throw std::logic_error("alpha-perp is not E7");
  g.chain = {-g.e7.theta, g.e7.simple[0], g.e7.simple[2], g.e7.simple[3],
             g.e7.simple[4], g.e7.simple[5], g.e7.simple[6]};
  RatMatrix C(7, std::vector<Rational>(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      C[i][j] = dot(g.chain[i], g.chain[j]);
      Rational want = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (C[i][j] != want) throw std::logic_error("chain is not an A7 simple system");
    }
  g.a7_cartan_inv = invert(C);

  for (auto& gam : g.e8.roots) {
    Rational w = dot(gam, g.alpha);
    if (w != 1 && w != 2) continue;
    WeylWord y = root_to_root(g.e8, g.alpha, gam);
    g.sigma.push_back({invert(y.matrix), to_ll(num(w)), y.sign});
  }
  if (g.sigma.size() != 57) throw std::logic_error("expected 57 outer cosets");

  // W(A7)-classes of the W(E7)-orbit of a regular vector: key = sorted A7 coordinates
  Weight v = g.e8.zero();
  {
    Weight z(8);
    for (int k = 0; k < 8; ++k) z[k] = Rational(1LL << k);
    // back to E8 coordinates: v = sum a_k chain_k with z = sum a_k (e_k - e_{k+1}) after centring
    Rational mean = 0;
    for (auto& x : z) mean += x;
    mean /= 8;
    Rational run = 0;
    for (int k = 0; k < 7; ++k) {
      run += z[k] - mean;
      v = v + run * g.chain[k];
    }
  }
  auto key = [&](const Weight& x) {
    Weight z = a7_coordinates(g, x);
    std::sort(z.begin(), z.end());
    return z;
  };
  std::map<Weight, size_t> seen;
  std::deque<size_t> q;
  std::vector<RatMatrix> gen;
  for (auto& s : g.e7.simple) gen.push_back(g.e8.reflection_matrix(s));
  g.tau_inv.push_back({identity_matrix(8), 1});
  seen[key(v)] = 0;
  q.push_back(0);
  while (!q.empty()) {
    size_t c = q.front();
    q.pop_front();
    for (auto& s : gen) {
      RatMatrix m = matmul(g.tau_inv[c].first, s);
      auto k = key(act(m, v));
      if (seen.count(k)) continue;
      seen[k] = g.tau_inv.size();
      g.tau_inv.push_back({m, -g.tau_inv[c].second});
      q.push_back(g.tau_inv.size() - 1);
    }
  }
  if (g.tau_inv.size() != 72) throw std::logic_error("expected 72 inner cosets, got " + std::to_string(g.tau_inv.size()));
  return g;
}

// ---------------------------------------------------------------- beta

struct E8Beta {
  Weight eta, beta;
  Weight gamma;  // root with y(gamma) = alpha
  int sign = 1;
};

inline E8Beta e8_beta(const E8Geometry& g, const Weight& eta, int p = 31, int u = 29) {
  for (auto& gam : g.e8.roots) {
    Rational e = dot(eta, gam);
    if (den(e) != 1 || to_ll(num(e)) % u != 0) continue;
    Rational lam = dot(g.e8.rho, gam) - rat(p, u) * e;  // <y(rho - (p/u) eta), alpha>
    if (den(lam) != 1 || lam <= 0) continue;
    WeylWord y = root_to_root(g.e8, gam, g.alpha);
    E8Beta b{eta, -act(y.matrix, eta), gam, y.sign};
    Rational ba = dot(b.beta, g.alpha);
    if (den(ba) != 1 || to_ll(num(ba)) % u != 0) throw std::logic_error("beta fails the alpha congruence");
    for (auto& pos : g.e8.positive) {
      if (pos == g.alpha) continue;
      Rational x = dot(b.beta, pos);
      if (den(x) == 1 && to_ll(num(x)) % u == 0) throw std::logic_error("beta divisible on a root outside Delta_0");
    }
    return b;
  }
  throw std::runtime_error("no admissible root for eta");
}

inline Weight e8_weight(const E8Geometry& g, const std::vector<int>& labels) {
  std::vector<Rational> c(labels.begin(), labels.end());
  return g.e8.from_labels(c);
}

inline Rational e8_conformal_dimension(const E8Geometry& g, const Weight& eta, int p = 31, int u = 29) {
  return conformal_dimension(g.e8, eta, g.x0, p, u);
}

inline Rational e8_central_charge(const E8Geometry& g, int p = 31, int u = 29) {
  return central_charge(g.e8, 10, g.x0, p, u);
}

// ---------------------------------------------------------------- determinants

// det M with M_jk = e^{-2 pi i lambda_j mu_k / u}, by LU with partial pivoting
inline ComplexApprox det_complex(std::vector<ComplexApprox> a, int n) {
  ComplexApprox det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (std::abs(a[piv * n + c]) == 0) return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    ComplexApprox d = a[c * n + c];
    det *= d;
    for (int r = c + 1; r < n; ++r) {
      ComplexApprox f = a[r * n + c] / d;
      if (f == ComplexApprox(0)) continue;
      for (int k = c + 1; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

inline ComplexApprox det_weyl_sum(const std::vector<Rational>& lambda, const std::vector<Rational>& mu, const Rational& c) {
  int n = (int)lambda.size();
  std::vector<ComplexApprox> m(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m[j * n + k] = Phase(-c * lambda[j] * mu[k]).eval();
  return det_complex(m, n);
}
inline ComplexApprox det_weyl_sum(const std::vector<long long>& lambda, const std::vector<long long>& mu, int u) {
  std::vector<Rational> l(lambda.begin(), lambda.end()), m(mu.begin(), mu.end());
  return det_weyl_sum(l, m, rat(1, u));
}

inline ComplexApprox brute_weyl_sum(const std::vector<long long>& lambda, const std::vector<long long>& mu, int u) {
  ComplexApprox s = 0;
  for_each_signed_perm((int)lambda.size(), [&](const std::vector<int>& w, int sg) {
    long long d = 0;
    for (size_t j = 0; j < lambda.size(); ++j) d += lambda[j] * mu[w[j]];
    s += double(sg) * Phase(rat(-d, u)).eval();
  });
  return s;
}

// ---------------------------------------------------------------- S matrix

struct E8Data {
  E8Table table;
  E8Geometry geo;
  std::vector<E8Beta> betas;
  std::vector<Rational> h;
  Rational c;
};

inline E8Data e8_setup(const std::string& path = default_e8_table_path()) {
  E8Data d;
  d.table = load_e8_table(path);
  d.geo = build_e8_geometry();
  if (!rho_only_check(d.geo.e8, 31)) throw std::logic_error("nu = rho is not forced at p = 31");
  for (auto& l : d.table.eta) {
    Weight eta = e8_weight(d.geo, l);
    d.betas.push_back(e8_beta(d.geo, eta));
    d.h.push_back(e8_conformal_dimension(d.geo, eta));
  }
  d.c = e8_central_charge(d.geo);
  return d;
}

constexpr long long kE8Grid = 64 * 29;

// Raw S with exponent (q/29)(beta, w beta'). q = 31 is the level numerator; q = 31 l gives the Galois image.
inline SMatrixRaw e8_smatrix_raw(const E8Data& d, long long q = 31, int threads = 0) {
  const auto& g = d.geo;
  size_t n = d.betas.size();
  std::vector<ComplexApprox> table(kE8Grid);
  for (long long k = 0; k < kE8Grid; ++k) table[k] = std::polar(1.0, 2.0 * M_PI * double(k) / double(kE8Grid));
  auto to_int8 = [](const Weight& z) {
    std::array<long long, 8> r{};
    for (int k = 0; k < 8; ++k) {
      Rational x = z[k] * 8;
      if (den(x) != 1) throw std::logic_error("A7 coordinate outside (1/8)Z");
      r[k] = to_ll(num(x));
    }
    return r;
  };
  struct Term {
    std::array<long long, 8> z;
    long long a;
    int coeff;
  };
  // per row: all (sigma, tau) terms x = tau^{-1} sigma^{-1} beta
  std::vector<std::vector<Term>> rows(n);
  std::vector<std::array<long long, 8>> cols(n);
  std::vector<long long> colb(n);
  parallel_for(n, [&](size_t i) {
    for (auto& s : g.sigma) {
      Weight y = act(s.m, d.betas[i].beta);
      for (auto& [ti, tsign] : g.tau_inv) {
        Weight x = act(ti, y);
        rows[i].push_back({to_int8(a7_coordinates(g, x)), to_ll(num(dot(x, g.alpha))), s.weight * s.sign * tsign});
      }
    }
    cols[i] = to_int8(a7_coordinates(g, d.betas[i].beta));
    colb[i] = to_ll(num(dot(d.betas[i].beta, g.alpha)));
  }, threads);

  SMatrixRaw r;
  r.provenance = Provenance::double_coset;
  r.exact = false;
  r.approx.assign(n, std::vector<ComplexApprox>(n));
  for (size_t i = 0; i < n; ++i) r.labels.push_back(std::to_string(i));
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) pairs.push_back({i, j});
  long long qm = mod_pos(q, kE8Grid);
  parallel_for(pairs.size(), [&](size_t idx) {
    auto [i, j] = pairs[idx];
    const auto& zp = cols[j];
    ComplexApprox total = 0;
    std::vector<ComplexApprox> m(64);
    for (const auto& t : rows[i]) {
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) m[a * 8 + b] = table[mod_pos(-qm * t.z[a] * zp[b], kE8Grid)];
      ComplexApprox ph = table[mod_pos(-qm * 32 * t.a * colb[j], kE8Grid)];
      total += double(t.coeff) * ph * det_complex(m, 8);
    }
    total *= 0.5;
    r.approx[i][j] = r.approx[j][i] = total;
  }, threads);
  return r;
}

inline ModularDatum e8_datum(const E8Data& d, const SMatrixRaw& raw, double tol = 1e-7) {
  return normalize_datum(raw, d.h, d.c, tol, false);
}

// ---------------------------------------------------------------- verification

// x is a root of p (coefficients leading first), judged by distance to the nearest root
inline double poly_root_distance(const std::vector<BigInt>& p, double x) {
  int deg = (int)p.size() - 1;
  if (deg < 1) throw std::invalid_argument("constant polynomial");
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
  double lead = p[0].convert_to<double>();
  for (int k = 0; k < deg; ++k) C(0, k) = -p[k + 1].convert_to<double>() / lead;
  for (int k = 1; k < deg; ++k) C(k, k - 1) = 1;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  double best = 1e300;
  for (int k = 0; k < deg; ++k) best = std::min(best, std::abs(es.eigenvalues()[k] - std::complex<double>(x, 0)));
  return best;
}

// quadratic x^2 + b x + c with irrational roots: returns the closed-form roots
inline std::optional<std::pair<double, double>> quadratic_roots(const std::vector<BigInt>& p) {
  if (p.size() != 3 || p[0] != 1) return std::nullopt;
  BigInt disc = p[1] * p[1] - 4 * p[2];
  if (disc < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(disc);
  if (r * r == disc) return std::nullopt;  // reducible
  double b = p[1].convert_to<double>(), sd = std::sqrt(disc.convert_to<double>());
  return std::make_pair((-b - sd) / 2, (-b + sd) / 2);
}

struct E8Report {
  bool h_ok = false, c_ok = false, axioms_ok = false, galois_ok = false, entries_ok = false, polys_ok = false;
  int h_mismatches = 0;
  double entry_dev = 0, galois_residual = 0, worst_poly = 0;
  AxiomReport axioms;
  std::vector<std::string> notes;
  bool ok() const { return h_ok && c_ok && axioms_ok && galois_ok && entries_ok && polys_ok; }
};

inline E8Report e8_verify(const E8Data& d, const ModularDatum& md, int threads = 0) {
  E8Report r;
  for (size_t i = 0; i < d.h.size(); ++i)
    if (d.h[i] * -29 != Rational(d.table.neg29h[i])) ++r.h_mismatches;
  r.h_ok = r.h_mismatches == 0 && md.vacuum == d.table.vacuum && md.minimal == d.table.minimal;
  r.c_ok = d.c == rat(-5350, 29);
  r.axioms = md.axioms;
  r.axioms_ok = md.axioms.ok;
  if (!r.axioms_ok) r.notes.push_back("axioms: " + md.axioms.failure);

  for (auto& e : d.table.entries) {
    ComplexApprox v = 29.0 * md.S[e.i][e.j];
    r.entry_dev = std::max({r.entry_dev, std::abs(v.real() - e.value), std::abs(v.imag())});
  }
  r.entries_ok = r.entry_dev < 1e-9;

  r.polys_ok = true;
  for (auto& e : d.table.entries) {
    double x = std::pow(29.0 * md.S[e.i][e.j].real(), 2);
    const auto& p = d.table.polys.at(e.poly);
    double dist;
    if (auto q = quadratic_roots(p)) dist = std::min(std::abs(x - q->first), std::abs(x - q->second));
    else dist = poly_root_distance(p, x) / std::max(1.0, std::abs(x));
    r.worst_poly = std::max(r.worst_poly, dist);
    if (dist > 1e-7) {
      r.polys_ok = false;
      r.notes.push_back("entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") off " + e.poly);
    }
  }

  try {
    auto gs = galois_symmetry(md, 11, 348);
    bool perm_ok = true;
    for (auto& orb : d.table.orbits)
      for (size_t k = 0; k < orb.size(); ++k) {
        auto [i, sg] = orb[k];
        int next = orb[(k + 1) % orb.size()].first;
        if (gs.sigma[i] != next || gs.eps[i] != sg) perm_ok = false;
      }
    auto sraw = e8_smatrix_raw(d, 31 * 11, threads);
    r.galois_residual = galois_entry_residual(md, gs, sraw.approx);
    r.galois_ok = perm_ok && r.galois_residual < 1e-7;
    if (!perm_ok) r.notes.push_back("Galois permutation differs from the tabulated orbits");
  } catch (const std::exception& e) {
    r.notes.push_back(std::string("Galois: ") + e.what());
  }
  return r;
}

}  // namespace bwalg
