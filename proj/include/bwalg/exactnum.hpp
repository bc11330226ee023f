#pragma once
// Exact rationals, roots of unity and finite sums of them.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwalg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using ComplexApprox = std::complex<double>;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat(long long a, long long b = 1) { return Rational(a) / Rational(b); }

inline std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash))) / Rational(BigInt(s.substr(slash + 1)));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational floor_rat(const Rational& r) {
  BigInt q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) q -= 1;
  return Rational(q);
}

inline long long to_ll(const BigInt& b) { return b.convert_to<long long>(); }

inline long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// ell^{-1} mod N; throws when gcd(ell, N) != 1.
inline long long inverse_mod(long long ell, long long N) {
  long long a = mod_pos(ell, N), m = N, x0 = 0, x1 = 1;
  if (std::gcd(a, m) != 1) throw std::invalid_argument("exponent not coprime to conductor");
  if (m == 1) return 0;
  long long b = m;
  while (a > 1) {
    long long q = a / b, t = b;
    b = a % b;
    a = t;
    t = x0;
    x0 = x1 - q * x0;
    x1 = t;
  }
  return mod_pos(x1, N);
}

// e(r) = exp(2 pi i r), r kept in [0,1).
struct Phase {
  Rational r;
  Phase() = default;
  explicit Phase(const Rational& x) : r(x - floor_rat(x)) {}
  static Phase frac(long long a, long long b) { return Phase(rat(a, b)); }
  long long order() const { return to_ll(den(r)); }
  Phase operator+(const Phase& o) const { return Phase(r + o.r); }
  Phase operator-() const { return Phase(-r); }
  auto operator<=>(const Phase& o) const {
    if (r < o.r) return std::strong_ordering::less;
    if (r > o.r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Phase& o) const { return r == o.r; }
  ComplexApprox eval() const {
    double t = 2.0 * M_PI * to_double(r);
    return {std::cos(t), std::sin(t)};
  }
};

struct ConductorOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Dense integer coefficients of Phi_N, low degree first; cached.
inline std::vector<long long> divide_poly(std::vector<long long> p, const std::vector<long long>& q) {
  std::vector<long long> quo(p.size() - q.size() + 1, 0);
  for (long long k = (long long)p.size() - 1; k >= (long long)q.size() - 1; --k) {
    long long c = p[k];
    if (!c) continue;
    long long sh = k - ((long long)q.size() - 1);
    quo[sh] = c;
    for (size_t t = 0; t < q.size(); ++t) p[sh + t] -= c * q[t];
  }
  return quo;
}

inline const std::vector<long long>& cyclotomic(long long N) {
  static std::mutex mu;
  static std::map<long long, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  for (long long d = 1; d <= N; ++d) {
    if (N % d || cache.count(d)) continue;
    std::vector<long long> p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (long long e = 1; e < d; ++e)
      if (d % e == 0) p = divide_poly(p, cache.at(e));
    cache[d] = p;
  }
  return cache.at(N);
}

}  // namespace detail

// Element of Z[zeta_N] / D in the power basis reduced mod Phi_N: a canonical form.
struct CycCanon {
  long long N = 1;
  BigInt den = 1;
  std::vector<BigInt> c;  // length phi(N)

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; });
  }

  static void reduce(long long N, std::vector<BigInt>& v) {
    const auto& phi = detail::cyclotomic(N);
    long long deg = (long long)phi.size() - 1;
    std::vector<std::pair<long long, long long>> terms;
    for (long long t = 0; t < deg; ++t)
      if (phi[t]) terms.push_back({t, phi[t]});
    for (long long k = (long long)v.size() - 1; k >= deg; --k) {
      if (v[k] == 0) continue;
      BigInt cc = v[k];
      long long sh = k - deg;
      for (auto [t, a] : terms) v[sh + t] -= cc * a;
      v[k] = 0;
    }
    v.resize(deg);
  }

  void normalize() {
    BigInt g = den;
    for (auto& x : c) g = boost::multiprecision::gcd(g, x);
    if (g < 0) g = -g;
    if (g > 1) {
      den /= g;
      for (auto& x : c) x /= g;
    }
    if (den < 0) {
      den = -den;
      for (auto& x : c) x = -x;
    }
  }

  CycCanon lift(long long M) const {
    if (M % N) throw std::invalid_argument("lift target not a multiple of conductor");
    long long k = M / N;
    std::vector<BigInt> v(M, 0);
    for (size_t j = 0; j < c.size(); ++j) v[j * k] = c[j];
    reduce(M, v);
    return {M, den, v};
  }

  CycCanon operator*(const CycCanon& o) const {
    long long M = lcm_ll(N, o.N);
    CycCanon a = N == M ? *this : lift(M);
    CycCanon b = o.N == M ? o : o.lift(M);
    std::vector<BigInt> v(a.c.size() + b.c.size(), 0);
    bool small = true;
    for (auto& x : a.c) small = small && boost::multiprecision::msb(abs(x) + 1) < 50;
    for (auto& x : b.c) small = small && boost::multiprecision::msb(abs(x) + 1) < 50;
    if (small) {
      std::vector<long long> aa(a.c.size()), bb(b.c.size());
      for (size_t i = 0; i < aa.size(); ++i) aa[i] = a.c[i].convert_to<long long>();
      for (size_t i = 0; i < bb.size(); ++i) bb[i] = b.c[i].convert_to<long long>();
      std::vector<__int128> acc(v.size(), 0);
      for (size_t i = 0; i < aa.size(); ++i) {
        if (!aa[i]) continue;
        for (size_t j = 0; j < bb.size(); ++j) acc[i + j] += (__int128)aa[i] * bb[j];
      }
      for (size_t i = 0; i < v.size(); ++i) {
        __int128 x = acc[i];
        bool neg = x < 0;
        unsigned __int128 ux = neg ? (unsigned __int128)(-x) : (unsigned __int128)x;
        BigInt r = BigInt((unsigned long long)(ux >> 64));
        r <<= 64;
        r += BigInt((unsigned long long)(ux & 0xFFFFFFFFFFFFFFFFull));
        v[i] = neg ? BigInt(-r) : r;
      }
    } else {
      for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
      }
    }
    if ((long long)v.size() < M) v.resize(M, 0);
    reduce(M, v);
    CycCanon r{M, a.den * b.den, v};
    r.normalize();
    return r;
  }

  bool operator==(const CycCanon& o) const {
    long long M = lcm_ll(N, o.N);
    CycCanon a = N == M ? *this : lift(M);
    CycCanon b = o.N == M ? o : o.lift(M);
    for (size_t i = 0; i < a.c.size(); ++i)
      if (a.c[i] * b.den != b.c[i] * a.den) return false;
    return true;
  }
};

// Finite Q-linear combination of roots of unity.
class CycSum {
 public:
  static inline long long conductor_bound = 1LL << 22;

  CycSum() = default;
  explicit CycSum(const Rational& q) {
    if (q != 0) terms_[Phase()] = q;
  }
  static CycSum phase(const Phase& p, const Rational& coeff = 1) {
    CycSum s;
    if (coeff != 0) s.terms_[p] = coeff;
    s.N_ = p.order();
    check(s.N_);
    return s;
  }
  static CycSum e(long long a, long long b) { return phase(Phase::frac(a, b)); }

  const std::map<Phase, Rational>& terms() const { return terms_; }
  long long conductor() const { return N_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Phase& p, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(p, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    N_ = lcm_ll(N_, p.order());
    check(N_);
  }

  CycSum operator+(const CycSum& o) const {
    CycSum r = *this;
    for (auto& [p, c] : o.terms_) r.add_term(p, c);
    r.N_ = lcm_ll(N_, o.N_);
    check(r.N_);
    return r;
  }
  CycSum operator-() const {
    CycSum r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
  }
  CycSum operator-(const CycSum& o) const { return *this + (-o); }
  CycSum operator*(const CycSum& o) const {
    CycSum r;
    r.N_ = lcm_ll(N_, o.N_);
    check(r.N_);
    for (auto& [p, c] : terms_)
      for (auto& [q, d] : o.terms_) r.add_term(p + q, c * d);
    return r;
  }
  CycSum scaled(const Rational& q) const {
    CycSum r;
    r.N_ = N_;
    if (q == 0) return r;
    r.terms_ = terms_;
    for (auto& [p, c] : r.terms_) c *= q;
    return r;
  }
  CycSum conj() const {
    CycSum r;
    r.N_ = N_;
    for (auto& [p, c] : terms_) r.terms_[-p] = c;
    return r;
  }
  // sigma_ell: zeta -> zeta^ell
  CycSum galois(long long ell) const {
    if (std::gcd(mod_pos(ell, N_), N_) != 1 && N_ > 1)
      throw std::invalid_argument("galois exponent not coprime to conductor");
    CycSum r;
    r.N_ = N_;
    for (auto& [p, c] : terms_) r.add_term(Phase(p.r * ell), c);
    return r;
  }
  ComplexApprox eval() const {
    ComplexApprox z = 0;
    for (auto& [p, c] : terms_) z += to_double(c) * p.eval();
    return z;
  }

  CycCanon canon(long long M = 0) const {
    if (M == 0) M = N_;
    if (M % N_) throw std::invalid_argument("canon modulus not a multiple of conductor");
    BigInt D = 1;
    for (auto& [p, c] : terms_) D = boost::multiprecision::lcm(D, den(c));
    std::vector<BigInt> v(M, 0);
    for (auto& [p, c] : terms_) {
      long long k = to_ll(num(p.r) * M / den(p.r));
      v[k] += num(c) * (D / den(c));
    }
    CycCanon::reduce(M, v);
    CycCanon r{M, D, v};
    r.normalize();
    return r;
  }
  bool is_zero() const { return terms_.empty() || canon().is_zero(); }
  bool equals(const CycSum& o) const { return (*this - o).is_zero(); }

 private:
  static void check(long long N) {
    if (N > conductor_bound) throw ConductorOverflow("conductor " + std::to_string(N) + " exceeds bound");
  }
  std::map<Phase, Rational> terms_;
  long long N_ = 1;
};

// Integer counts over Z/N: the hot-loop accumulator for signed phase sums.
struct PhaseAccumulator {
  long long N;
  std::vector<long long> count;
  explicit PhaseAccumulator(long long n) : N(n), count(n, 0) {}
  void add(long long k, long long c) { count[mod_pos(k, N)] += c; }
  void merge(const PhaseAccumulator& o) {
    for (long long k = 0; k < N; ++k) count[k] += o.count[k];
  }
  CycSum to_cycsum(const Rational& scale = 1) const {
    CycSum s;
    for (long long k = 0; k < N; ++k)
      if (count[k]) s.add_term(Phase::frac(k, N), Rational(count[k]) * scale);
    return s;
  }
  ComplexApprox eval(double scale = 1.0) const {
    ComplexApprox z = 0;
    for (long long k = 0; k < N; ++k)
      if (count[k]) z += double(count[k]) * std::polar(1.0, 2.0 * M_PI * double(k) / double(N));
    return z * scale;
  }
};

enum class Backend { exact, float_ };

}  // namespace bwalg
