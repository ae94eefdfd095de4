#ifndef MANIN_JSON_IO_HPP
#define MANIN_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "manin/idempotent.hpp"
#include "manin/manin.hpp"
#include "manin/pairing.hpp"
#include "manin/scenarios.hpp"
#include "manin/suites.hpp"

namespace manin {

using json = nlohmann::ordered_json;

// Parse errors carry the line and column of the offending byte.
json parse_json_text(const std::string& text, const std::string& source = "input");

json rational_to_json(const Q& x);
Q rational_from_json(const json& j, const std::string& path);
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j, const std::string& path);

json spec_to_json(const IdempotentSpec& s);
IdempotentSpec spec_from_json(const json& j);
std::vector<StructureConstant> structure_from_json(const json& j, const std::string& path);
json structure_to_json(const std::vector<StructureConstant>& sc);

// {"a": spec, "b": spec}; the shapes come from the specs' n.
struct PairSpec {
  IdempotentSpec a, b;
};
PairSpec pair_from_json(const json& j);
ManinPair build_pair(const PairSpec& p);

// One row per line, entries separated by commas outside brackets; blank lines and '#' comments skipped.
NCMatrix parse_matrix_text(const std::string& text, Alphabet& alpha);
// One polynomial per line; blank lines and '#' comments skipped.
std::vector<NCPoly> parse_relations_text(const std::string& text, Alphabet& alpha);
json ncmatrix_to_json(const NCMatrix& m, const Alphabet& alpha);

json check_to_json(const IdentityCheck& c);
json axioms_to_json(const AxiomReport& r);
json pairing_to_json(const PairingOperator& p);
json report_to_json(const ScenarioReport& r);
json suite_to_json(const SuiteRun& run);

}  // namespace manin

#endif  // MANIN_JSON_IO_HPP
