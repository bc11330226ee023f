#pragma once
// Machine-readable reports: JSON for data, CSV for fusion tables.

#include <json.hpp>

#include "suites.hpp"

namespace bwalg {

using json = nlohmann::json;

inline json rational_json(const Rational& r) { return to_string(r); }

inline json complex_json(const ComplexApprox& z) {
  // signed zeros would make byte output depend on rounding paths
  auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
  return json::array({clean(z.real()), clean(z.imag())});
}

inline json cycsum_json(const CycSum& s) {
  json terms = json::array();
  for (auto& [p, c] : s.terms()) terms.push_back(json::array({to_string(p.r), to_string(c)}));
  return terms;
}

struct ModularReport {
  std::vector<std::string> indices;
  std::vector<Rational> h;
  Rational c;
  CMatrix S;
  std::vector<Rational> T;  // exponents t with T = e^{2 pi i t}, reduced mod 1
  bool operator==(const ModularReport&) const = default;
};

inline ModularReport make_report(const ModularDatum& d) {
  ModularReport r{d.labels, d.h, d.c, d.S, {}};
  // rounding residue below this is noise from the phase sums
  for (auto& row : r.S)
    for (auto& z : row) {
      double re = std::abs(z.real()) < 1e-13 ? 0.0 : z.real(), im = std::abs(z.imag()) < 1e-13 ? 0.0 : z.imag();
      z = {re, im};
    }
  for (auto& t : d.t) r.T.push_back(Phase(t).r);
  return r;
}

inline json to_json(const ModularReport& r) {
  json j;
  j["indices"] = r.indices;
  json h = json::array(), S = json::array(), T = json::array();
  for (auto& x : r.h) h.push_back(rational_json(x));
  for (auto& row : r.S) {
    json jr = json::array();
    for (auto& z : row) jr.push_back(complex_json(z));
    S.push_back(jr);
  }
  for (auto& t : r.T) T.push_back(rational_json(t));
  j["h"] = h;
  j["c"] = rational_json(r.c);
  j["S"] = S;
  j["T"] = T;
  return j;
}

inline ModularReport modular_report_from_json(const json& j) {
  ModularReport r;
  r.indices = j.at("indices").get<std::vector<std::string>>();
  for (auto& x : j.at("h")) r.h.push_back(parse_rational(x.get<std::string>()));
  r.c = parse_rational(j.at("c").get<std::string>());
  for (auto& row : j.at("S")) {
    std::vector<ComplexApprox> v;
    for (auto& z : row) v.push_back({z.at(0).get<double>(), z.at(1).get<double>()});
    r.S.push_back(v);
  }
  for (auto& t : j.at("T")) r.T.push_back(parse_rational(t.get<std::string>()));
  return r;
}

// exact raw entries alongside the normalization that turns them into S
inline json exact_raw_json(const SMatrixRaw& raw, const ModularDatum& d) {
  json j;
  j["provenance"] = to_string(raw.provenance);
  json rows = json::array();
  for (auto& row : raw.ex) {
    json jr = json::array();
    for (auto& e : row) jr.push_back(cycsum_json(e));
    rows.push_back(jr);
  }
  j["entries"] = rows;
  j["scale"] = complex_json(d.scale);
  j["signs"] = d.signs;
  return j;
}

inline std::string fusion_csv(const FusionTable& f) {
  std::ostringstream os;
  os << "i,j,k,N\n";
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      for (int k = 0; k < f.n; ++k)
        if (f.at(i, j, k)) os << i << ',' << j << ',' << k << ',' << f.at(i, j, k) << '\n';
  return os.str();
}

inline FusionTable fusion_from_csv(const std::string& text, int n) {
  FusionTable f;
  f.n = n;
  f.N.assign((size_t)n * n * n, 0);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (line != "i,j,k,N") throw std::invalid_argument("bad fusion CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int i, j, k;
    long long N;
    char c1, c2, c3;
    std::istringstream ls(line);
    if (!(ls >> i >> c1 >> j >> c2 >> k >> c3 >> N)) throw std::invalid_argument("bad fusion CSV row: " + line);
    f.N[((size_t)i * n + j) * n + k] = N;
  }
  return f;
}

}  // namespace bwalg
