#pragma once
// Replete boundary weights as affine labelings, their necklace and a-list encodings,
// orbit counts, and the summation data beta = -y(eta).

#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "pyramid.hpp"

namespace bwalg {

// labels[0] is the affine node.
struct AffineLabeling {
  int u = 0;
  std::vector<int> labels;

  int n() const { return (int)labels.size(); }
  bool operator==(const AffineLabeling& o) const { return u == o.u && labels == o.labels; }
  bool operator<(const AffineLabeling& o) const { return labels < o.labels; }
};

inline AffineLabeling make_labeling(std::vector<int> labels) {
  AffineLabeling L;
  for (int x : labels) {
    if (x < 0) throw std::invalid_argument("negative label");
    L.u += x;
  }
  L.labels = std::move(labels);
  return L;
}

// "(l1,...,l_{n-1}|l0)"
inline std::string to_string(const AffineLabeling& L) {
  std::ostringstream os;
  os << "(";
  for (int i = 1; i < L.n(); ++i) os << (i > 1 ? "," : "") << L.labels[i];
  os << "|" << L.labels[0] << ")";
  return os.str();
}

// accepts "6,1|1" or "(6,1|1)"
inline AffineLabeling parse_labeling(std::string s) {
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("labeling needs '|': " + s);
  std::vector<int> v{0};
  std::stringstream fin(s.substr(0, bar));
  for (std::string tok; std::getline(fin, tok, ',');) {
    if (tok.empty()) throw std::invalid_argument("empty label in " + s);
    v.push_back(std::stoi(tok));
  }
  v[0] = std::stoi(s.substr(bar + 1));
  return make_labeling(v);
}

// rotation by k: node i receives the label of node i + k
inline AffineLabeling rotate(const AffineLabeling& L, int k) {
  int n = L.n();
  AffineLabeling r = L;
  for (int i = 0; i < n; ++i) r.labels[i] = L.labels[mod_pos(i + k, n)];
  return r;
}

// Reading l0, l_{n-1}, ..., l1: the order in which tabulated orbit
// representatives come out least.
inline std::vector<int> backward_reading(const AffineLabeling& L) {
  std::vector<int> r(L.n());
  for (int i = 0; i < L.n(); ++i) r[i] = L.labels[mod_pos(-i, L.n())];
  return r;
}

inline AffineLabeling canonical(const AffineLabeling& L) {
  AffineLabeling best = L;
  auto key = backward_reading(L);
  for (int k = 1; k < L.n(); ++k) {
    auto r = rotate(L, k);
    auto kr = backward_reading(r);
    if (kr < key) key = kr, best = r;
  }
  return best;
}

// module duality: reverse the diagram order
inline AffineLabeling reverse(const AffineLabeling& L) {
  AffineLabeling r = L;
  for (int i = 0; i < L.n(); ++i) r.labels[i] = L.labels[mod_pos(-i, L.n())];
  return r;
}

inline bool canonical_less(const AffineLabeling& a, const AffineLabeling& b) {
  return backward_reading(a) < backward_reading(b);
}

// sum_{i>0} l_i varpi_i in A_{n-1}
inline Weight finite_weight(const RootSystem& rs, const AffineLabeling& L) {
  Weight w = rs.zero();
  for (int i = 1; i < L.n(); ++i)
    if (L.labels[i]) w = w + Rational(L.labels[i]) * rs.fundamental[i - 1];
  return w;
}

// Build one labeling from gap lengths following each "1" (m >= 1) or from
// the positive parts (m = 0), starting at node 1.
inline std::vector<AffineLabeling> enumerate_replete(const Pyramid& p) {
  std::set<std::vector<int>> seen;
  std::vector<AffineLabeling> out;
  auto add = [&](const std::vector<int>& from1) {
    // from1[k] is the label of node k+1 (node n is node 0)
    std::vector<int> lab(p.n);
    for (int k = 0; k < p.n; ++k) lab[(k + 1) % p.n] = from1[k];
    auto c = canonical(make_labeling(lab));
    if (seen.insert(c.labels).second) out.push_back(c);
  };
  if (p.m == 0) {
    // compositions of u into s positive parts
    std::vector<int> parts(p.s, 1);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == p.s - 1) {
        parts[i] = left;
        if (left >= 1) add(parts);
        return;
      }
      for (int x = 1; x <= left - (p.s - 1 - i); ++x) {
        parts[i] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, p.u);
  } else {
    std::vector<int> kind(p.u, 0);
    std::fill(kind.end() - p.s, kind.end(), 1);  // 1 = long gap
    do {
      std::vector<int> from1;
      for (int k = 0; k < p.u; ++k) {
        from1.push_back(1);
        for (int z = 0; z < p.m - 1 + kind[k]; ++z) from1.push_back(0);
      }
      add(from1);
    } while (std::next_permutation(kind.begin(), kind.end()));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Structural repleteness test straight from the block description.
inline bool is_replete(const Pyramid& p, const AffineLabeling& L) {
  if (L.n() != p.n || L.u != p.u) return false;
  if (p.m == 0) {
    for (int x : L.labels)
      if (x < 1) return false;
    return true;
  }
  int ones = 0;
  for (int x : L.labels) {
    if (x > 1) return false;
    ones += x;
  }
  if (ones != p.u) return false;
  int longs = 0;
  for (int i = 0; i < p.n; ++i) {
    if (L.labels[i] != 1) continue;
    int g = 0;
    while (L.labels[(i + 1 + g) % p.n] == 0) ++g;
    if (g == p.m) ++longs;
    else if (g != p.m - 1) return false;
  }
  return longs == p.s;
}

// --- a-lists and necklaces ---------------------------------------------------

using AList = std::vector<int>;
using Necklace = std::vector<int>;  // 1 = long bead

inline bool valid_alist(const AList& a, int s) {
  if (a.empty() || a.front() != 1 || a.back() != s) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] - a[i - 1] != 0 && a[i] - a[i - 1] != 1) return false;
  return true;
}

// eta = sum_i varpi_{m i + a_i}, index n read as the affine node
inline std::optional<AList> labeling_to_alist(const AffineLabeling& L, int m, int s) {
  int n = L.n();
  std::vector<int> j;
  for (int i = 1; i <= n; ++i)
    for (int c = 0; c < L.labels[i % n]; ++c) j.push_back(i);
  AList a(j.size());
  for (size_t i = 0; i < j.size(); ++i) a[i] = j[i] - m * (int)i;
  if (!valid_alist(a, s)) return std::nullopt;
  return a;
}

inline AffineLabeling alist_to_labeling(const AList& a, int m) {
  int u = (int)a.size(), s = a.back();
  int n = m * u + s;
  std::vector<int> lab(n, 0);
  for (int i = 0; i < u; ++i) {
    int idx = m * i + a[i];
    if (idx < 1 || idx > n) throw std::invalid_argument("a-list index out of range");
    lab[idx % n] += 1;
  }
  return make_labeling(lab);
}

inline Necklace alist_to_necklace(const AList& a) {
  Necklace b(a.size(), 1);
  for (size_t i = 0; i + 1 < a.size(); ++i) b[i] = a[i + 1] - a[i];
  return b;
}

inline Necklace canonical_necklace(const Necklace& b) {
  Necklace best = b;
  for (size_t k = 1; k < b.size(); ++k) {
    Necklace r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[(i + k) % b.size()];
    best = std::min(best, r);
  }
  return best;
}

inline AList necklace_to_alist(Necklace b) {
  if (std::count(b.begin(), b.end(), 1) == 0) throw std::invalid_argument("necklace without long beads");
  while (b.back() != 1) std::rotate(b.begin(), b.end() - 1, b.end());
  AList a(b.size());
  a[0] = 1;
  for (size_t i = 0; i + 1 < b.size(); ++i) a[i + 1] = a[i] + b[i];
  return a;
}

inline Necklace reverse_necklace(const Necklace& b) {
  Necklace r(b.rbegin(), b.rend());
  return canonical_necklace(r);
}

// Orbit-level encodings: canonical necklace and its a-list.
inline Necklace orbit_necklace(const AffineLabeling& L, int m, int s) {
  for (int k = 0; k < L.n(); ++k)
    if (auto a = labeling_to_alist(rotate(L, k), m, s)) return canonical_necklace(alist_to_necklace(*a));
  throw std::invalid_argument("labeling has no valid a-list rotation: " + to_string(L));
}

inline AList orbit_alist(const AffineLabeling& L, int m, int s) {
  return necklace_to_alist(orbit_necklace(L, m, s));
}

// the same orbit at another pyramid height
inline AffineLabeling transport(const AffineLabeling& L, int m, int s, int m_target) {
  return canonical(alist_to_labeling(orbit_alist(L, m, s), m_target));
}

// Runs of "1" separated by long gaps (length m), read from node 1; m >= 1.
inline std::vector<int> one_runs(const AffineLabeling& L, int m) {
  int n = L.n();
  std::vector<int> runs;
  int cur = 0, i = 1;
  for (int steps = 0; steps < n;) {
    if (L.labels[i % n] == 1) {
      ++cur;
      ++i, ++steps;
      int g = 0;
      while (g < n && L.labels[(i + g) % n] == 0) ++g;
      i += g, steps += g;
      if (g == m) runs.push_back(cur), cur = 0;
    } else {
      ++i, ++steps;
    }
  }
  if (cur) runs.push_back(cur);
  return runs;
}

// m = 0 labeling whose labels (l1, ..., l_{s-1}, l0) are the runs
inline AffineLabeling runs_to_principal(const std::vector<int>& runs) {
  std::vector<int> lab(runs.size());
  for (size_t i = 0; i + 1 < runs.size(); ++i) lab[i + 1] = runs[i];
  lab[0] = runs.back();
  return make_labeling(lab);
}

// --- counting -------------------------------------------------------------------

inline BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline long long euler_phi(long long n) {
  long long r = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

struct ModuleCounts {
  BigInt binomial, burnside, weyl;
};

inline ModuleCounts count_modules(int u, int s, int m) {
  ModuleCounts c;
  c.binomial = factorial(u) / (factorial(s) * factorial(u - s)) / u;
  BigInt acc = 0;
  int s1 = s, s2 = u - s;
  for (int d = 1; d <= std::gcd(s1, s2); ++d)
    if (s1 % d == 0 && s2 % d == 0)
      acc += BigInt(euler_phi(d)) * factorial(u / d) / (factorial(s1 / d) * factorial(s2 / d));
  c.burnside = acc / u;
  // W_f = S_u^m x S_s, rank l_f = m(u-1) + s-1 inside l = n-1
  int n = m * u + s;
  BigInt wf = boost::multiprecision::pow(factorial(u), m) * factorial(s);
  BigInt num = boost::multiprecision::pow(BigInt(u), (n - 1) - (m * (u - 1) + s - 1));
  for (int r = 0; r < m; ++r)
    for (int e = 1; e <= u - 1; ++e) num *= (u - e);
  for (int e = 1; e <= s - 1; ++e) num *= (u - e);
  if (num % wf != 0) throw std::logic_error("Weyl-exponent count not integral");
  c.weyl = num / wf;
  return c;
}

// All labelings in replete orbits, without quotienting by rotation.
inline size_t count_all_rotations(const Pyramid& p) {
  std::set<std::vector<int>> all;
  for (auto& L : enumerate_replete(p))
    for (int k = 0; k < p.n; ++k) all.insert(rotate(L, k).labels);
  return all.size();
}

// --- beta = -y(eta) -------------------------------------------------------------

struct BetaRep {
  AffineLabeling eta;  // representative actually used (nonzero affine label)
  Weight beta;
  int sign = 1;        // epsilon(y)
  Perm y;              // beta_{y(k)} = (-eta)_k
};

inline AffineLabeling rotate_to_nonzero_affine(const AffineLabeling& L) {
  for (int k = 0; k < L.n(); ++k) {
    auto r = rotate(L, k);
    if (r.labels[0] > 0) return r;
  }
  throw std::invalid_argument("zero labeling");
}

// eta in the root lattice of sl_n: sum_i i l_i = 0 mod n
inline std::optional<AffineLabeling> rotate_into_root_lattice(const AffineLabeling& L) {
  int n = L.n();
  for (int k = 0; k < n; ++k) {
    auto r = rotate(L, k);
    long long t = 0;
    for (int i = 1; i < n; ++i) t += (long long)i * r.labels[i];
    if (t % n == 0) return r;
  }
  return std::nullopt;
}

inline BetaRep construct_beta(const Pyramid& p, const AffineLabeling& eta_in, bool rotate_first = true) {
  AffineLabeling eta = rotate_first && eta_in.labels[0] == 0 ? rotate_to_nonzero_affine(eta_in) : eta_in;
  if (eta.n() != p.n) throw std::invalid_argument("labeling rank mismatch");
  Weight v = -finite_weight(p.rs, eta);
  // value groups: maximal runs of equal consecutive coordinates
  std::vector<std::vector<int>> groups;
  for (int k = 0; k < p.n; ++k) {
    if (k > 0 && v[k] == v[k - 1]) groups.back().push_back(k);
    else groups.push_back({k});
  }
  std::map<Rational, int> mult;
  for (auto& g : groups) {
    if (mult.count(v[g[0]])) throw std::invalid_argument("repeated value in -eta: not replete");
    mult[v[g[0]]] = (int)g.size();
  }
  // columns by height, left to right; value groups by decreasing value
  std::map<int, std::vector<int>> cols_by_h;
  for (int c = 0; c < (int)p.heights.size(); ++c) cols_by_h[p.heights[c]].push_back(c);
  std::map<int, std::vector<const std::vector<int>*>> groups_by_h;
  for (auto& g : groups) groups_by_h[(int)g.size()].push_back(&g);
  for (auto& [h, gs] : groups_by_h) {
    std::sort(gs.begin(), gs.end(), [&](auto a, auto b) { return v[(*a)[0]] > v[(*b)[0]]; });
    if (!cols_by_h.count(h) || cols_by_h[h].size() != gs.size())
      throw std::invalid_argument("value multiset does not match pyramid: " + to_string(eta));
  }
  if (groups_by_h.size() != cols_by_h.size())
    throw std::invalid_argument("value multiset does not match pyramid: " + to_string(eta));
  // labels of each column, top to bottom
  std::vector<std::vector<int>> col_labels(p.heights.size());
  for (int i = 1; i <= p.n; ++i) col_labels[p.col[i]].push_back(i - 1);
  BetaRep b;
  b.eta = eta;
  b.beta.assign(p.n, 0);
  b.y.assign(p.n, -1);
  for (auto& [h, gs] : groups_by_h)
    for (size_t t = 0; t < gs.size(); ++t) {
      const auto& g = *gs[t];
      const auto& cl = col_labels[cols_by_h[h][t]];
      for (size_t q = 0; q < g.size(); ++q) {
        b.y[g[q]] = cl[q];
        b.beta[cl[q]] = v[g[q]];
      }
    }
  b.sign = perm_sign(b.y);
  // Delta_0 walls exactly
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) {
      bool zero = b.beta[i - 1] == b.beta[j - 1];
      if (zero != p.same_column(i, j)) throw std::logic_error("beta fails the g0-integrability pattern");
    }
  return b;
}

}  // namespace bwalg
