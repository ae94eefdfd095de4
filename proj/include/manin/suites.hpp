#ifndef MANIN_SUITES_HPP
#define MANIN_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

#include "manin/minors.hpp"

namespace manin {

// One named verification item; an item passes when it yields checks and all of them pass.
struct SuiteItem {
  std::string id;
  int criterion = 0;
  std::vector<std::string> suites;
  std::function<std::vector<IdentityCheck>()> run;
};

struct ItemResult {
  std::string id;
  int criterion = 0;
  std::vector<IdentityCheck> checks;
  std::string error;
  bool pass = false;
};

struct SuiteRun {
  std::string name;
  std::vector<ItemResult> items;  // sorted by id
  bool pass = false;
};

const std::vector<SuiteItem>& suite_manifest();
const std::vector<std::string>& suite_names();
// Throws InputError for unknown names.
SuiteRun run_suite(const std::string& name);
SuiteRun run_criterion(int criterion);
ItemResult run_item(const SuiteItem& item);

// Parameter matrix with off-diagonal entries cycling through 2, 3, 1/2, 1/3 from `offset`.
QMatrix sample_params(int n, int offset = 0);

}  // namespace manin

#endif  // MANIN_SUITES_HPP
