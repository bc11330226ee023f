#pragma once
// Simply-laced root systems in their standard ambient lattices.

#include "exactnum.hpp"

#include <deque>
#include <set>
#include <utility>

namespace bwalg {

using Weight = std::vector<Rational>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline Rational dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Weight operator+(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline Weight operator-(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline Weight operator*(const Rational& c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}
inline Weight operator-(const Weight& a) { return Rational(-1) * a; }

inline RatMatrix identity_matrix(size_t d) {
  RatMatrix m(d, std::vector<Rational>(d, 0));
  for (size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}
inline Weight act(const RatMatrix& m, const Weight& v) {
  Weight r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0) r[i] += m[i][j] * v[j];
  return r;
}
inline RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMatrix r(n, std::vector<Rational>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

inline RatMatrix invert(RatMatrix a) {
  size_t n = a.size();
  RatMatrix inv = identity_matrix(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational d = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

inline Rational determinant(RatMatrix a) {
  size_t n = a.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

enum class RootType { A, D, E7, E8 };

// Reflection word, applied left to right: word {i, j} means s_j(s_i(v)).
struct WeylWord {
  std::vector<int> word;
  RatMatrix matrix;
  int sign = 1;
};

struct RootSystem {
  RootType type;
  int rank = 0;
  int dim = 0;
  std::vector<Weight> roots, positive, simple, fundamental;
  Weight rho, theta;
  int h_dual = 0;
  RatMatrix cartan;          // (alpha_i, alpha_j)
  RatMatrix fundamental_gram;  // (varpi_i, varpi_j)
  std::vector<Rational> marks;  // theta in the simple basis

  Rational inner(const Weight& v, const Weight& w) const {
    if ((int)v.size() != dim || (int)w.size() != dim) throw std::invalid_argument("dimension mismatch");
    return dot(v, w);
  }
  Weight zero() const { return Weight(dim, 0); }
  // sum_i c_i varpi_i
  Weight from_labels(const std::vector<Rational>& c) const {
    Weight v = zero();
    for (int i = 0; i < rank; ++i) v = v + c[i] * fundamental[i];
    return v;
  }
  std::vector<Rational> labels(const Weight& v) const {
    std::vector<Rational> r(rank);
    for (int i = 0; i < rank; ++i) r[i] = dot(v, simple[i]);
    return r;
  }
  bool is_root(const Weight& v) const { return std::find(roots.begin(), roots.end(), v) != roots.end(); }
  size_t dim_g() const { return roots.size() + rank; }

  Weight reflect(const Weight& v, const Weight& alpha) const { return v - dot(v, alpha) * alpha; }
  Weight reflect_simple(const Weight& v, int i) const { return reflect(v, simple[i]); }

  RatMatrix reflection_matrix(const Weight& a) const {
    RatMatrix m = identity_matrix(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m[i][j] -= a[i] * a[j];
    return m;
  }

  WeylWord word_to_element(const std::vector<int>& w) const {
    WeylWord y{w, identity_matrix(dim), 1};
    for (int i : w) {
      y.matrix = matmul(reflection_matrix(simple[i]), y.matrix);
      y.sign = -y.sign;
    }
    return y;
  }
};

inline WeylWord compose(const RootSystem& rs, const WeylWord& first, const WeylWord& second) {
  WeylWord r;
  r.word = first.word;
  r.word.insert(r.word.end(), second.word.begin(), second.word.end());
  r.matrix = matmul(second.matrix, first.matrix);
  r.sign = first.sign * second.sign;
  (void)rs;
  return r;
}

inline WeylWord inverse(const RootSystem& rs, const WeylWord& y) {
  std::vector<int> w(y.word.rbegin(), y.word.rend());
  return rs.word_to_element(w);
}

namespace detail {

inline void finish_root_system(RootSystem& rs) {
  int r = rs.rank;
  rs.cartan.assign(r, std::vector<Rational>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.cartan[i][j] = dot(rs.simple[i], rs.simple[j]);
  RatMatrix ci = invert(rs.cartan);
  rs.fundamental.assign(r, rs.zero());
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) rs.fundamental[i] = rs.fundamental[i] + ci[i][k] * rs.simple[k];
  rs.fundamental_gram = ci;
  rs.rho = rs.zero();
  for (auto& w : rs.fundamental) rs.rho = rs.rho + w;
  rs.positive.clear();
  for (auto& a : rs.roots)
    if (dot(a, rs.rho) > 0) rs.positive.push_back(a);
  Rational best = -1;
  for (auto& a : rs.positive) {
    Rational h = dot(a, rs.rho);
    if (h > best) {
      best = h;
      rs.theta = a;
    }
  }
  rs.h_dual = to_ll(num(best)) + 1;
  rs.marks.assign(r, 0);
  for (int i = 0; i < r; ++i) rs.marks[i] = dot(rs.theta, rs.fundamental[i]);
}

inline Weight unit(int dim, int i, Rational c = 1) {
  Weight v(dim, 0);
  v[i] = c;
  return v;
}

}  // namespace detail

inline RootSystem build_A(int rank) {
  if (rank < 1) throw std::invalid_argument("invalid rank for type A");
  int n = rank + 1;
  RootSystem rs;
  rs.type = RootType::A;
  rs.rank = rank;
  rs.dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) rs.roots.push_back(detail::unit(n, i) - detail::unit(n, j));
  for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(detail::unit(n, i) - detail::unit(n, i + 1));
  detail::finish_root_system(rs);
  return rs;
}

inline RootSystem build_D(int rank) {
  if (rank < 3) throw std::invalid_argument("invalid rank for type D");
  int n = rank;
  RootSystem rs;
  rs.type = RootType::D;
  rs.rank = n;
  rs.dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) rs.roots.push_back(detail::unit(n, i, a) + detail::unit(n, j, b));
  for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(detail::unit(n, i) - detail::unit(n, i + 1));
  rs.simple.push_back(detail::unit(n, n - 2) + detail::unit(n, n - 1));
  detail::finish_root_system(rs);
  return rs;
}

inline RootSystem build_E8() {
  RootSystem rs;
  rs.type = RootType::E8;
  rs.rank = 8;
  rs.dim = 8;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) rs.roots.push_back(detail::unit(8, i, a) + detail::unit(8, j, b));
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    Weight v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? rat(-1, 2) : rat(1, 2);
    rs.roots.push_back(v);
  }
  Rational h = rat(1, 2);
  rs.simple.push_back(Weight{h, -h, -h, -h, -h, -h, -h, h});
  rs.simple.push_back(detail::unit(8, 0) + detail::unit(8, 1));
  for (int i = 0; i < 6; ++i) rs.simple.push_back(detail::unit(8, i + 1) - detail::unit(8, i));
  detail::finish_root_system(rs);
  return rs;
}

// Root subsystem of `parent` given by `roots`; simple roots read off the
// positive system cut out by the parent's Weyl vector.
inline RootSystem subsystem(const RootSystem& parent, const std::vector<Weight>& roots, RootType type) {
  RootSystem rs;
  rs.type = type;
  rs.dim = parent.dim;
  rs.roots = roots;
  std::vector<Weight> pos;
  for (auto& a : roots)
    if (dot(a, parent.rho) > 0) pos.push_back(a);
  std::set<Weight> posset(pos.begin(), pos.end());
  for (auto& a : pos) {
    bool decomposable = false;
    for (auto& b : pos) {
      if (posset.count(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rs.simple.push_back(a);
  }
  rs.rank = (int)rs.simple.size();
  return rs;
}

// Orders E7 simple roots as 1-3-4-5-6-7 with 2 hanging off 4.
inline void order_e7(RootSystem& rs) {
  auto& S = rs.simple;
  int r = (int)S.size();
  std::vector<std::vector<int>> adj(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && dot(S[i], S[j]) != 0) adj[i].push_back(j);
  int tri = -1;
  for (int i = 0; i < r; ++i)
    if (adj[i].size() == 3) tri = i;
  if (tri < 0) throw std::logic_error("no trivalent node");
  auto branch = [&](int start) {
    std::vector<int> path{start};
    int prev = tri, cur = start;
    while (true) {
      int nxt = -1;
      for (int j : adj[cur])
        if (j != prev) nxt = j;
      if (nxt < 0) break;
      path.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return path;
  };
  std::vector<std::vector<int>> br;
  for (int j : adj[tri]) br.push_back(branch(j));
  std::sort(br.begin(), br.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  if (br[0].size() != 1 || br[1].size() != 2 || br[2].size() != 3) throw std::logic_error("not E7");
  std::vector<int> order{br[1][1], br[0][0], br[1][0], tri, br[2][0], br[2][1], br[2][2]};
  std::vector<Weight> ns;
  for (int i : order) ns.push_back(S[i]);
  S = ns;
}

inline RootSystem build_E7_orthogonal_to(const RootSystem& e8, const Weight& root) {
  std::vector<Weight> rts;
  for (auto& a : e8.roots)
    if (dot(a, root) == 0) rts.push_back(a);
  RootSystem rs = subsystem(e8, rts, RootType::E7);
  order_e7(rs);
  detail::finish_root_system(rs);
  return rs;
}

inline RootSystem build_E7() {
  RootSystem e8 = build_E8();
  return build_E7_orthogonal_to(e8, e8.theta);
}

inline RootSystem build_root_system(RootType t, int rank) {
  switch (t) {
    case RootType::A: return build_A(rank);
    case RootType::D: return build_D(rank);
    case RootType::E7:
      if (rank != 7) throw std::invalid_argument("invalid rank for E7");
      return build_E7();
    case RootType::E8:
      if (rank != 8) throw std::invalid_argument("invalid rank for E8");
      return build_E8();
  }
  throw std::invalid_argument("unknown type");
}

// Chamber reduction: returns the dominant weight and the word taking v to it.
inline std::pair<Weight, WeylWord> dominant_rep(const RootSystem& rs, const Weight& v) {
  Weight x = v;
  std::vector<int> w;
  while (true) {
    int i = 0;
    while (i < rs.rank && dot(x, rs.simple[i]) >= 0) ++i;
    if (i == rs.rank) break;
    x = rs.reflect_simple(x, i);
    w.push_back(i);
  }
  return {x, rs.word_to_element(w)};
}

inline WeylWord root_to_root(const RootSystem& rs, const Weight& gamma, const Weight& alpha) {
  if (!rs.is_root(gamma) || !rs.is_root(alpha)) throw std::invalid_argument("inputs must be roots");
  auto [d1, w1] = dominant_rep(rs, gamma);
  auto [d2, w2] = dominant_rep(rs, alpha);
  if (d1 != d2) throw std::logic_error("roots in different orbits");
  WeylWord y = compose(rs, w1, inverse(rs, w2));
  if (act(y.matrix, gamma) != alpha) throw std::logic_error("root_to_root self-check failed");
  return y;
}

// All Weyl group elements (matrix, sign) via the regular orbit of rho; small groups only.
inline std::vector<std::pair<RatMatrix, int>> weyl_group_elements(const RootSystem& rs, size_t limit = 100000) {
  std::map<Weight, std::pair<RatMatrix, int>> seen;
  std::deque<Weight> q;
  seen[rs.rho] = {identity_matrix(rs.dim), 1};
  q.push_back(rs.rho);
  while (!q.empty()) {
    Weight v = q.front();
    q.pop_front();
    auto [m, s] = seen[v];
    for (int i = 0; i < rs.rank; ++i) {
      Weight nv = rs.reflect_simple(v, i);
      if (seen.count(nv)) continue;
      seen[nv] = {matmul(rs.reflection_matrix(rs.simple[i]), m), -s};
      if (seen.size() > limit) throw std::runtime_error("Weyl group too large to enumerate");
      q.push_back(nv);
    }
  }
  std::vector<std::pair<RatMatrix, int>> out;
  for (auto& [v, e] : seen) out.push_back(e);
  return out;
}

// Alternation identity: mean of eps(w) prod (w a, xi) equals prod (a, xi).
inline bool alternation_identity(const RootSystem& rs, const Weight& xi) {
  auto W = weyl_group_elements(rs);
  Rational lhs = 0;
  for (auto& [m, s] : W) {
    Rational p = s;
    for (auto& a : rs.positive) p *= dot(act(m, a), xi);
    lhs += p;
  }
  lhs /= Rational((long long)W.size());
  Rational rhs = 1;
  for (auto& a : rs.positive) rhs *= dot(a, xi);
  return lhs == rhs;
}

inline bool strange_formula_holds(const RootSystem& rs) {
  return dot(rs.rho, rs.rho) * 12 == Rational(rs.h_dual) * Rational((long long)rs.dim_g());
}

}  // namespace bwalg
