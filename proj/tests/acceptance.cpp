// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// Usage: acceptance [--full] [--seed N]

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "g2k/acceptance.hpp"

int main(int argc, char** argv) {
  g2k::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--full") == 0) {
      opt.full = true;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      opt.seed = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--full] [--seed N]\n";
      return 2;
    }
  }
  bool ok = true;
  g2k::run_acceptance(opt, [&](const g2k::CriterionResult& r) {
    std::cout << g2k::format_result(r) << std::endl;
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}
