#include <cstdio>
#include <string>

#include "manin/suites.hpp"

int main() {
  const char* names[] = {"",
                         "idempotent catalog",
                         "Hecke structure",
                         "graded dimensions",
                         "pairing-operator cross-validation",
                         "Brauer pairing operators",
                         "universal identity battery",
                         "Hecke and q minor transport",
                         "four-parameter classification",
                         "BCD predicates",
                         "negative controls"};
  int failed = 0;
  for (int c = 1; c <= 10; ++c) {
    const manin::SuiteRun run = manin::run_criterion(c);
    std::size_t checks = 0;
    std::string first_failure;
    for (const auto& it : run.items) {
      checks += it.checks.size();
      if (it.pass || !first_failure.empty()) continue;
      first_failure = it.id;
      if (!it.error.empty()) first_failure += ": " + it.error;
      for (const auto& ch : it.checks)
        if (!ch.pass) {
          first_failure += ": " + ch.id + (ch.detail.empty() ? "" : " (" + ch.detail + ")");
          break;
        }
    }
    const bool pass = run.pass && !run.items.empty();
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%zu items, %zu checks]%s%s\n", pass ? "PASS" : "FAIL", c, names[c],
                run.items.size(), checks, pass ? "" : " first failure: ", pass ? "" : first_failure.c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
