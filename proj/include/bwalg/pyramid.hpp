#pragma once
// Left-adjusted pyramids for the partition [u^m, s] of n = m u + s.

#include "rootsys.hpp"

namespace bwalg {

struct Pyramid {
  int u = 0, s = 0, m = 0, n = 0;
  // 1-based labels; index 0 unused
  std::vector<int> col, row;           // row 0 is the bottom row
  std::vector<int> heights;            // per column
  std::vector<std::vector<int>> rows;  // labels per row, ascending
  std::vector<int> bottom;             // bottom-row labels
  std::vector<std::pair<int, int>> delta0_pos;  // (i, j), i < j, same column
  RootSystem rs;                        // A_{n-1}
  Weight x0;

  // root e_i - e_j as a weight (1-based labels)
  Weight root(int i, int j) const {
    Weight v(n, 0);
    v[i - 1] += 1;
    v[j - 1] -= 1;
    return v;
  }
  bool same_column(int i, int j) const { return col[i] == col[j]; }
  bool same_row(int i, int j) const { return row[i] == row[j]; }
  int degree(int i, int j) const { return col[j] - col[i]; }
  int top_row() const { return m; }
  size_t dim_g0() const { return (size_t)(n - 1) + 2 * delta0_pos.size(); }
  size_t dim_g0_formula() const {
    return (size_t)(s * m * (m + 1) + (u - s) * m * (m - 1) + n - 1);
  }
  // row indices of length u
  std::vector<int> u_rows() const {
    std::vector<int> r;
    for (int k = 0; k < (int)rows.size(); ++k)
      if ((int)rows[k].size() == u) r.push_back(k);
    return r;
  }
  int s_row() const {
    for (int k = 0; k < (int)rows.size(); ++k)
      if ((int)rows[k].size() == s) return k;
    return -1;
  }
};

inline Pyramid build_pyramid(int u, int s, int m) {
  if (u < 2 || s < 1 || s > u - 1 || std::gcd(s, u) != 1 || m < 0)
    throw std::invalid_argument("pyramid parameters out of range");
  Pyramid p;
  p.u = u;
  p.s = s;
  p.m = m;
  p.n = m * u + s;
  if (p.n < 2) throw std::invalid_argument("pyramid too small");
  p.col.assign(p.n + 1, -1);
  p.row.assign(p.n + 1, -1);
  p.rows.assign(m + 1, {});
  int label = 1;
  for (int c = 0; c < u; ++c) {
    int h = c < s ? m + 1 : m;
    if (h == 0) continue;
    p.heights.push_back(h);
    for (int t = 0; t < h; ++t, ++label) {
      p.col[label] = c;
      p.row[label] = h - 1 - t;
      p.rows[h - 1 - t].push_back(label);
    }
    p.bottom.push_back(label - 1);
  }
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      if (p.col[i] == p.col[j]) p.delta0_pos.push_back({i, j});
  p.rs = build_A(p.n - 1);
  p.x0 = p.rs.zero();
  for (int b : p.bottom)
    if (b < p.n) p.x0 = p.x0 + p.rs.fundamental[b - 1];
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j)
      if (i != j && dot(p.root(i, j), p.x0) != Rational(p.col[j] - p.col[i]))
        throw std::logic_error("grading element inconsistent with column labeling");
  return p;
}

inline const Weight& grading_element(const Pyramid& p) { return p.x0; }

// Ordered pairs with column difference k, plus the Cartan part at k = 0.
inline long long graded_dims(const Pyramid& p, int k) {
  long long c = 0;
  for (int i = 1; i <= p.n; ++i)
    for (int j = 1; j <= p.n; ++j)
      if (i != j && p.col[j] - p.col[i] == k) ++c;
  if (k == 0) c += p.n - 1;
  return c;
}

inline long long delta_closed(int u, int s, int m, int k) {
  using std::max;
  using std::min;
  return (u - k) + 2LL * (m + 1) * max(0, s - k) + 2LL * m * max(0, (u - s) - k) +
         (2LL * m + 1) * min(min(s, u - s), min(k, u - k));
}

// Principal grading of D_n: dims of g_j for 1 <= j <= 2n-3.
inline long long dn_principal_dim(int n, int j) {
  if (j >= 1 && j <= n - 1) return n - j / 2;
  if (j >= n && j <= 2 * n - 3) return n - 1 - j / 2;
  return 0;
}

enum class Part { row, s_part, u_part, f_part };

// Orthogonal projections of h^* = trace-zero R^n.
inline Weight project(const Pyramid& p, const Weight& beta, Part part, int r = -1) {
  auto row_part = [&](int k) {
    Weight v(p.n, 0);
    const auto& L = p.rows[k];
    Rational mean = 0;
    for (int i : L) mean += beta[i - 1];
    mean /= Rational((long long)L.size());
    for (int i : L) v[i - 1] = beta[i - 1] - mean;
    return v;
  };
  switch (part) {
    case Part::row: return row_part(r);
    case Part::s_part: {
      int k = p.s_row();
      return k < 0 ? Weight(p.n, 0) : row_part(k);
    }
    case Part::u_part: {
      Weight v(p.n, 0);
      for (int k : p.u_rows()) v = v + row_part(k);
      return v;
    }
    case Part::f_part: {
      Weight v(p.n, 0);
      for (const auto& L : p.rows) {
        Rational mean = 0;
        for (int i : L) mean += beta[i - 1];
        mean /= Rational((long long)L.size());
        for (int i : L) v[i - 1] = mean;
      }
      return v;
    }
  }
  return beta;
}

// Tr(ad x ad y) over g_0 in the diagonal model: sum over roots of g_0.
inline Rational kappa_g0(const Pyramid& p, const Weight& x, const Weight& y) {
  Rational k = 0;
  for (auto [i, j] : p.delta0_pos) {
    Rational a = x[i - 1] - x[j - 1], b = y[i - 1] - y[j - 1];
    k += 2 * a * b;
  }
  return k;
}

// Permutation helpers shared by the type A code: w maps label i (0-based) to w[i].
using Perm = std::vector<int>;

inline int perm_sign(const Perm& w) {
  std::vector<char> seen(w.size(), 0);
  int sign = 1;
  for (size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = w[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Row-preserving (W^f) and column-preserving (W_0) tests for a permutation of labels.
inline bool preserves_rows(const Pyramid& p, const Perm& w) {
  for (int i = 0; i < p.n; ++i)
    if (p.row[i + 1] != p.row[w[i] + 1]) return false;
  return true;
}
inline bool preserves_columns(const Pyramid& p, const Perm& w) {
  for (int i = 0; i < p.n; ++i)
    if (p.col[i + 1] != p.col[w[i] + 1]) return false;
  return true;
}
// w(Delta_0) disjoint from Delta^f
inline bool separates_columns(const Pyramid& p, const Perm& w) {
  for (auto [i, j] : p.delta0_pos)
    if (p.row[w[i - 1] + 1] == p.row[w[j - 1] + 1]) return false;
  return true;
}

}  // namespace bwalg
