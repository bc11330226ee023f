#pragma once
// Truncated integer q-series and the product formulas for normalized characters.

#include "exactnum.hpp"

namespace bwalg {

struct QSeries {
  int order = 0;
  std::vector<BigInt> c;  // q^0 .. q^order

  QSeries() = default;
  explicit QSeries(int ord, long long constant = 0) : order(ord), c(ord + 1, 0) { c[0] = constant; }

  static QSeries one(int ord) { return QSeries(ord, 1); }

  QSeries operator+(const QSeries& o) const {
    check(o);
    QSeries r = *this;
    for (int k = 0; k <= order; ++k) r.c[k] += o.c[k];
    return r;
  }
  QSeries operator*(const QSeries& o) const {
    check(o);
    QSeries r(order);
    for (int i = 0; i <= order; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; i + j <= order; ++j)
        if (o.c[j] != 0) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
  }
  bool operator==(const QSeries& o) const { return order == o.order && c == o.c; }

  // in place: *= (1 - q^e)
  void times_binomial(int e) {
    if (e <= 0) throw std::invalid_argument("binomial exponent must be positive");
    for (int k = order; k >= e; --k) c[k] -= c[k - e];
  }
  // requires constant term 1
  QSeries inverse() const {
    if (c[0] != 1) throw std::invalid_argument("series not invertible over Z");
    QSeries r(order);
    r.c[0] = 1;
    for (int k = 1; k <= order; ++k) {
      BigInt s = 0;
      for (int j = 1; j <= k; ++j)
        if (c[j] != 0) s += c[j] * r.c[k - j];
      r.c[k] = -s;
    }
    return r;
  }

 private:
  void check(const QSeries& o) const {
    if (order != o.order) throw std::invalid_argument("q-series order mismatch");
  }
};

// prod_{n>=0} (1 - q^{a + step n})
inline QSeries pochhammer(int a, int step, int order) {
  if (a <= 0 || step <= 0) throw std::invalid_argument("pochhammer offset and step must be positive");
  QSeries r = QSeries::one(order);
  for (int e = a; e <= order; e += step) r.times_binomial(e);
  return r;
}

inline std::string to_string(const QSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order; ++k) {
    if (s.c[k] == 0) continue;
    if (!out.empty()) out += s.c[k] > 0 ? " + " : " - ";
    else if (s.c[k] < 0) out += "-";
    BigInt a = abs(s.c[k]);
    if (a != 1 || k == 0) out += a.str();
    if (k > 0) out += k == 1 ? "q" : "q^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// Normalized character: prod (1-q^{un})^rank / (1-q^n)^{dim_g0}
//   * prod over pairings a and n in Z with un + a > 0 of (1 - q^{un+a}).
inline QSeries character_product(int u, int rank, long long dim_g0, const std::vector<long long>& pairings, int order) {
  QSeries num = QSeries::one(order);
  for (int r = 0; r < rank; ++r)
    for (int e = u; e <= order; e += u) num.times_binomial(e);
  long long zero_pairings = 0;
  for (long long a : pairings) {
    long long r = mod_pos(a, u);
    if (r == 0) {
      ++zero_pairings;
      r = u;  // un + a = 0 is the factor absorbed by g_0
    }
    for (long long e = r; e <= order; e += u) num.times_binomial((int)e);
  }
  // each pairing divisible by u contributes one factor of prod(1-q^{un}) that
  // must be cancelled by the Cartan/g0 denominator bookkeeping below
  if (zero_pairings + rank != dim_g0)
    throw std::invalid_argument("zero exponent in numerator without matching g0 factor (non-replete input)");
  QSeries den = QSeries::one(order);
  for (long long d = 0; d < dim_g0; ++d)
    for (int e = 1; e <= order; ++e) den.times_binomial(e);
  return num * den.inverse();
}

// Type D_n principal data: graded dims as the pairing multiset of rho
inline std::vector<long long> dn_rho_pairings(int n, long long (*dim)(int, int)) {
  std::vector<long long> out;
  for (int j = 1; j <= 2 * n - 3; ++j)
    for (long long c = 0; c < dim(n, j); ++c) {
      out.push_back(j);
      out.push_back(-j);
    }
  return out;
}

inline QSeries virasoro_product(int u, int order) {
  if (u < 5 || u % 2 == 0 || u % 3 == 0) throw std::invalid_argument("u must be odd, prime to 3, at least 5");
  QSeries num = pochhammer(u, u, order) * pochhammer(1, u, order) * pochhammer(u - 1, u, order);
  QSeries den = pochhammer(1, 1, order) * pochhammer((u - 1) / 2, u, order) * pochhammer((u + 1) / 2, u, order);
  return num * den.inverse();
}

}  // namespace bwalg
