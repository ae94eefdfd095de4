#ifndef MANIN_SCENARIOS_HPP
#define MANIN_SCENARIOS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "manin/idempotent.hpp"
#include "manin/minors.hpp"
#include "manin/pairing.hpp"

namespace manin {

struct ScenarioReport {
  std::string id;
  std::vector<std::pair<std::string, QMatrix>> idempotents;
  std::string dims_label;
  std::vector<std::size_t> dims;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

enum class BcdFamily { B, C, D };
BcdFamily parse_bcd_family(const std::string& s);
std::string bcd_family_name(BcdFamily f);

// dim X_{B_n}(C)_k, k >= 0.
Q dim_formula_X_B(int n, int k);
// dim Xi_{Btilde_n}(C)_k, k >= 0; zero beyond n/2 + 1.
Q dim_formula_Xi_Btilde(int n, int k);

// Relation spaces in the Lambda-eliminated forms for (A_n, B_m) and (Btilde_n, A_m).
Subspace lambda_form_AB(int n, int m);
Subspace lambda_form_BtildeA(int n, int m);

ScenarioReport bcd_report(BcdFamily f, int n);

struct FourParamReport {
  ScenarioReport report;
  FourParamConditions conditions;
  std::size_t dim_X3 = 0, dim_Xi3 = 0, expected_Xi3 = 0;
  std::optional<PairingOperator> a3;
};
// Expected dim Xi_3 from the condition logic.
std::size_t fourparam_expected_dim(const FourParamConditions& c, const Q& kappa);
FourParamReport fourparam_report(const Q& a, const Q& b, const Q& c, const Q& kappa);

struct LieSeed {
  IdempotentSpec spec;
  ScenarioReport report;
  bool jacobi = false;
};
// n = dim g + 1; constants are 1-based with indices below n.
LieSeed lie_seed(const std::vector<StructureConstant>& sc, int n, int max_degree = 3);
std::vector<StructureConstant> sl2_structure();

}  // namespace manin

#endif  // MANIN_SCENARIOS_HPP
