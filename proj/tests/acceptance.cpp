// Acceptance runner: `acceptance N` runs criterion N, no argument runs all.
#include <iomanip>
#include <iostream>

#include "bwalg/suites.hpp"

int main(int argc, char** argv) {
  using namespace bwalg;
  auto all = acceptance_criteria();
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (argc > 1 && (only < 1 || only > (int)all.size())) {
    std::cerr << "usage: acceptance [1-" << all.size() << "]\n";
    return 2;
  }
  bool ok = true;
  for (auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Check r = run_guarded(c.run);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << c.id << " [" << c.name << "] " << r.detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    ok &= r.ok;
  }
  return ok ? 0 : 1;
}
