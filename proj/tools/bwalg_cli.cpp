// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bwalg/bwalg.hpp"

using namespace bwalg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int u = 0, s = 0, m = 0, p = 0;
  std::string eta;
  int order = 40;
  std::string backend;  // empty: exact for n <= 11
  std::string format = "text";
  std::string output;
  int threads = 0;
  double tol = 1e-9;
  std::string suite;
};

void require_params(const Config& c) {
  if (c.u < 2 || c.s < 1 || c.s >= c.u || std::gcd(c.u, c.s) != 1 || c.m < 0 || c.m * c.u + c.s < 2)
    throw UsageError("need u >= 2, 1 <= s < u, gcd(u, s) = 1, m >= 0 and mu + s >= 2");
}

Backend pick_backend(const Config& c, int n) {
  if (c.backend.empty()) return n <= 11 ? Backend::exact : Backend::float_;
  if (c.backend == "exact") return Backend::exact;
  if (c.backend == "float") return Backend::float_;
  throw UsageError("backend must be exact or float");
}

void write_out(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.output);
  f << text;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string r;
  for (size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + std::to_string(v[i]);
  return r;
}

int cmd_enumerate(const Config& c) {
  require_params(c);
  auto bc = boundary_case(c.u, c.s, c.m);
  json arr = json::array();
  std::ostringstream txt;
  for (size_t i = 0; i < bc.etas.size(); ++i) {
    auto& e = bc.etas[i];
    auto neck = orbit_necklace(e, c.m, c.s);
    auto al = orbit_alist(e, c.m, c.s);
    json r;
    r["index"] = i;
    r["eta"] = to_string(e);
    r["necklace"] = join(neck, "");
    r["alist"] = al;
    r["h"] = rational_json(bc.h[i]);
    arr.push_back(r);
    txt << i << "  " << to_string(e) << "  necklace " << join(neck, "") << "  a = (" << join(al) << ")  h = "
        << to_string(bc.h[i]) << "\n";
  }
  if (c.format == "json") write_out(c, arr.dump(2) + "\n");
  else if (c.format == "csv") {
    std::ostringstream os;
    os << "index,eta,necklace,alist,h\n";
    for (auto& r : arr)
      os << r["index"].get<size_t>() << ",\"" << r["eta"].get<std::string>() << "\"," << r["necklace"].get<std::string>()
         << ",\"" << join(r["alist"].get<std::vector<int>>()) << "\"," << r["h"].get<std::string>() << "\n";
    write_out(c, os.str());
  } else write_out(c, txt.str());
  return 0;
}

int cmd_character(const Config& c) {
  require_params(c);
  auto pyr = build_pyramid(c.u, c.s, c.m);
  std::vector<AffineLabeling> etas;
  if (!c.eta.empty()) {
    AffineLabeling e;
    try {
      e = parse_labeling(c.eta);
    } catch (const std::exception& ex) {
      throw UsageError(std::string("bad --eta: ") + ex.what());
    }
    if (e.n() != pyr.n || !is_replete(pyr, e)) throw UsageError("--eta is not a replete labeling for this pyramid");
    etas.push_back(e);
  } else {
    etas = enumerate_replete(pyr);
  }
  json arr = json::array();
  std::ostringstream txt;
  for (auto& e : etas) {
    auto q = type_a_character(pyr, e, c.order);
    std::vector<std::string> coeffs;
    for (auto& x : q.c) coeffs.push_back(x.str());
    arr.push_back({{"eta", to_string(e)}, {"order", c.order}, {"coefficients", coeffs}});
    txt << to_string(e) << ": " << to_string(q) << " + O(q^" << c.order + 1 << ")\n";
  }
  write_out(c, c.format == "json" ? arr.dump(2) + "\n" : txt.str());
  return 0;
}

struct Computed {
  SMatrixRaw raw;
  ModularDatum datum;
};

Computed compute_modular(const Config& c) {
  require_params(c);
  int n = c.m * c.u + c.s;
  int p = c.p ? c.p : n;
  if (p < n || std::gcd(p, c.u) != 1) throw UsageError("need p >= n and gcd(p, u) = 1");
  auto tc = type_a_case(c.u, c.s, c.m, p);
  Computed r;
  r.raw = type_a_raw(tc, pick_backend(c, n), c.threads);
  r.datum = normalize_datum(r.raw, tc.h, tc.c, c.tol);
  return r;
}

std::string modular_text(const ModularDatum& d) {
  std::ostringstream os;
  os << "c = " << to_string(d.c) << "\nvacuum " << d.labels[d.vacuum] << ", minimal " << d.labels[d.minimal] << "\n";
  for (size_t i = 0; i < d.size(); ++i) os << i << "  " << d.labels[i] << "  h = " << to_string(d.h[i]) << "\n";
  os << "S =\n" << std::setprecision(12);
  for (auto& row : d.S) {
    for (auto& z : row) os << "  " << std::setw(16) << (z.real() == 0 ? 0.0 : z.real());
    os << "\n";
  }
  return os.str();
}

int cmd_modular(const Config& c) {
  auto r = compute_modular(c);
  if (c.format == "json") {
    json j = to_json(make_report(r.datum));
    if (r.raw.exact) j["S_exact"] = exact_raw_json(r.raw, r.datum);
    write_out(c, j.dump(2) + "\n");
  } else {
    write_out(c, modular_text(r.datum));
  }
  return 0;
}

int cmd_fusion(const Config& c) {
  auto r = compute_modular(c);
  auto f = verlinde(r.datum);
  if (c.format == "json") {
    json arr = json::array();
    for (int i = 0; i < f.n; ++i)
      for (int j = 0; j < f.n; ++j)
        for (int k = 0; k < f.n; ++k)
          if (f.at(i, j, k)) arr.push_back({i, j, k, f.at(i, j, k)});
    write_out(c, json{{"indices", r.datum.labels}, {"N", arr}}.dump(2) + "\n");
  } else {
    write_out(c, fusion_csv(f));
  }
  return 0;
}

using SuiteFn = std::function<std::vector<std::pair<std::string, Check>>(const Config&)>;

std::vector<std::pair<int, int>> pairs_or(const Config& c, std::vector<std::pair<int, int>> dflt) {
  if (c.u || c.s) {
    if (c.u < 2 || c.s < 1 || c.s >= c.u || std::gcd(c.u, c.s) != 1) throw UsageError("invalid --u/--s");
    return {{c.u, c.s}};
  }
  return dflt;
}

std::map<std::string, SuiteFn> suites() {
  std::map<std::string, SuiteFn> m;
  m["typeA-oracles"] = [](const Config& c) {
    std::vector<std::pair<std::string, Check>> r;
    r.push_back({"trivial characters", check_trivial_character(50)});
    if (c.u || c.s) {
      require_params(c);
      r.push_back({"oracle chain", check_oracle_chain(c.u, c.s, c.m)});
    } else {
      r.push_back({"oracle chain (5,2,1)", check_oracle_chain(5, 2, 1)});
      r.push_back({"oracle chain (8,3,1)", check_oracle_chain(8, 3, 1)});
    }
    r.push_back({"axioms and fusion", check_axioms_and_fusion()});
    r.push_back({"exact backbone", check_exact_backbone()});
    return r;
  };
  m["thm4_6"] = [](const Config&) {
    return std::vector<std::pair<std::string, Check>>{{"(8,3) lists", check_enumeration_83()},
                                                       {"counts", check_counts(10, 2)}};
  };
  m["thm4_8"] = [](const Config& c) {
    return std::vector<std::pair<std::string, Check>>{
        {"characters", check_character_transport(pairs_or(c, {{5, 2}, {8, 3}, {7, 3}}), c.order, 2)},
        {"delta identity", check_delta_identity(10, 2)}};
  };
  m["thm4_12"] = [](const Config& c) {
    std::vector<std::pair<std::string, Check>> r;
    auto ps = pairs_or(c, {{5, 2}, {8, 3}});
    r.push_back({"N invariant", check_n_invariant(9, 2)});
    r.push_back({"h and T", check_h_and_t_across_m(ps, 2)});
    r.push_back({"central charges", check_central_charges(10, 2)});
    for (auto [u, s] : ps) r.push_back({"S and T (" + std::to_string(u) + "," + std::to_string(s) + ")", check_m_independence(u, s)});
    return r;
  };
  m["cor4_14"] = [](const Config&) {
    return std::vector<std::pair<std::string, Check>>{{"factorization", check_factorization()},
                                                       {"principal match", check_principal_affine()}};
  };
  m["d-series"] = [](const Config& c) {
    std::vector<int> us{7, 11, 13};
    if (c.u) us = {c.u};
    return std::vector<std::pair<std::string, Check>>{{"Virasoro products", check_d_series(us, c.order)}};
  };
  m["e8"] = [](const Config& c) {
    return std::vector<std::pair<std::string, Check>>{{"E8 subregular", check_e8(c.threads)}};
  };
  return m;
}

int cmd_verify(const Config& c) {
  auto all = suites();
  auto it = all.find(c.suite);
  if (it == all.end()) throw UsageError("unknown suite " + c.suite);
  std::vector<std::pair<std::string, Check>> results;
  try {
    results = it->second(c);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    results.push_back({"exception", Check{false, e.what()}});
  }
  bool ok = true;
  std::ostringstream os;
  for (auto& [name, r] : results) {
    os << (r.ok ? "PASS " : "FAIL ") << c.suite << ": " << name << ": " << r.detail << "\n";
    ok &= r.ok;
  }
  write_out(c, os.str());
  return ok ? 0 : 1;
}

int cmd_e8(const Config& c) {
  auto r = run_e8(c.threads);
  if (c.format == "json") {
    json j = to_json(make_report(r.datum));
    j["verification"] = {{"h", r.report.h_ok},           {"c", r.report.c_ok},
                         {"axioms", r.report.axioms_ok}, {"entries", r.report.entries_ok},
                         {"polynomials", r.report.polys_ok}, {"galois", r.report.galois_ok}};
    write_out(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << modular_text(r.datum);
    os << "check h " << r.report.h_ok << ", c " << r.report.c_ok << ", axioms " << r.report.axioms_ok << ", entries "
       << r.report.entries_ok << ", polynomials " << r.report.polys_ok << ", Galois " << r.report.galois_ok << "\n";
    for (auto& n : r.report.notes) os << "note: " << n << "\n";
    write_out(c, os.str());
  }
  return r.report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data and characters of exceptional W-algebras"};
  app.require_subcommand(1);
  Config cfg;
  auto add_common = [&](CLI::App* sub, bool params) {
    if (params) {
      sub->add_option("--u", cfg.u, "denominator u");
      sub->add_option("--s", cfg.s, "short row length s");
      sub->add_option("--m", cfg.m, "number of full rows m");
    }
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", cfg.output, "output file");
    sub->add_option("--threads", cfg.threads, "worker threads (default: BWALG_THREADS or hardware)");
  };
  auto* en = app.add_subcommand("enumerate", "replete modules with encodings and h");
  add_common(en, true);
  auto* ch = app.add_subcommand("character", "normalized q-characters");
  add_common(ch, true);
  ch->add_option("--eta", cfg.eta, "labeling such as 6,1|1");
  ch->add_option("--order", cfg.order, "truncation order");
  auto* mo = app.add_subcommand("modular", "S, T, h-list and c");
  auto* fu = app.add_subcommand("fusion", "Verlinde fusion table");
  for (auto* sub : {mo, fu}) {
    add_common(sub, true);
    sub->add_option("--p", cfg.p, "level numerator (default n)");
    sub->add_option("--backend", cfg.backend, "exact or float");
    sub->add_option("--tol", cfg.tol, "axiom tolerance");
  }
  auto* ve = app.add_subcommand("verify", "run a named verification suite");
  add_common(ve, true);
  ve->add_option("--suite", cfg.suite, "typeA-oracles, thm4_6, thm4_8, thm4_12, cor4_14, d-series, e8")->required();
  ve->add_option("--order", cfg.order, "truncation order");
  auto* e8 = app.add_subcommand("e8", "E8 subregular modular data at 31/29");
  add_common(e8, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (cfg.threads > 0) setenv("BWALG_THREADS", std::to_string(cfg.threads).c_str(), 1);
  try {
    if (*en) return cmd_enumerate(cfg);
    if (*ch) return cmd_character(cfg);
    if (*mo) return cmd_modular(cfg);
    if (*fu) return cmd_fusion(cfg);
    if (*ve) return cmd_verify(cfg);
    if (*e8) return cmd_e8(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
