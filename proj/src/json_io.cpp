#include "manin/json_io.hpp"

#include <sstream>

namespace manin {

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) +
                     " (byte " + std::to_string(e.byte) + ")");
  }
}

json rational_to_json(const Q& x) { return to_string(x); }

Q rational_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Q(j.get<long>());
  throw InputError(path + ": expected a rational as a string \"p/q\" or an integer");
}

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of rows");
  const std::size_t r = j.size();
  const std::size_t c = r == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != c) throw InputError(rp + ": rows must be arrays of equal length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k], rp + "[" + std::to_string(k) + "]");
  }
  return m;
}

json structure_to_json(const std::vector<StructureConstant>& sc) {
  json a = json::array();
  for (const auto& s : sc) a.push_back(json::array({s.i, s.j, s.k, rational_to_json(s.value)}));
  return a;
}

std::vector<StructureConstant> structure_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of [i, j, k, value]");
  std::vector<StructureConstant> out;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string p = path + "[" + std::to_string(t) + "]";
    const json& e = j[t];
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number_integer())
      throw InputError(p + ": expected [i, j, k, value] with integer indices");
    out.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), rational_from_json(e[3], p + "[3]")});
  }
  return out;
}

namespace {

bool uses_q(const std::string& f) { return f == "Aq" || f == "Pq" || f == "RhatPlus" || f == "RhatMinus"; }
bool uses_qhat(const std::string& f) { return f == "Aqhat" || f == "Atilde_qhat"; }

const json& require_key(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw InputError(path + ": missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

json spec_to_json(const IdempotentSpec& s) {
  json j;
  j["family"] = s.family;
  j["n"] = s.n;
  json p = json::object();
  if (uses_q(s.family)) p["q"] = rational_to_json(s.q);
  if (uses_qhat(s.family)) p["qhat"] = matrix_to_json(s.qhat);
  if (s.family == "FourParam") {
    p["a"] = rational_to_json(s.a);
    p["b"] = rational_to_json(s.b);
    p["c"] = rational_to_json(s.c);
    p["kappa"] = rational_to_json(s.kappa);
  }
  if (s.family == "Lie") p["structure"] = structure_to_json(s.structure);
  if (s.family == "Custom") p["matrix"] = matrix_to_json(s.custom);
  j["params"] = p;
  return j;
}

IdempotentSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw InputError("spec: expected an object");
  IdempotentSpec s;
  const json& fam = require_key(j, "family", "spec");
  if (!fam.is_string()) throw InputError("spec.family: expected a string");
  s.family = fam.get<std::string>();
  const json& n = require_key(j, "n", "spec");
  if (!n.is_number_integer()) throw InputError("spec.n: expected an integer");
  s.n = n.get<int>();
  const json empty = json::object();
  const json& p = j.contains("params") ? j.at("params") : empty;
  if (!p.is_object()) throw InputError("spec.params: expected an object");
  for (const auto& [key, val] : p.items()) {
    const std::string path = "spec.params." + key;
    if (key == "q") s.q = rational_from_json(val, path);
    else if (key == "qhat") s.qhat = matrix_from_json(val, path);
    else if (key == "a") s.a = rational_from_json(val, path);
    else if (key == "b") s.b = rational_from_json(val, path);
    else if (key == "c") s.c = rational_from_json(val, path);
    else if (key == "kappa") s.kappa = rational_from_json(val, path);
    else if (key == "structure") s.structure = structure_from_json(val, path);
    else if (key == "matrix") s.custom = matrix_from_json(val, path);
    else throw InputError(path + ": unknown parameter");
  }
  if (uses_q(s.family) && !p.contains("q")) throw InputError("spec.params: family " + s.family + " needs \"q\"");
  if (uses_qhat(s.family) && !p.contains("qhat")) throw InputError("spec.params: family " + s.family + " needs \"qhat\"");
  if (s.family == "Custom" && !p.contains("matrix")) throw InputError("spec.params: family Custom needs \"matrix\"");
  if (s.family == "FourParam")
    for (const char* k : {"a", "b", "c", "kappa"})
      if (!p.contains(k)) throw InputError(std::string("spec.params: family FourParam needs \"") + k + "\"");
  validate(s);
  return s;
}

PairSpec pair_from_json(const json& j) {
  if (!j.is_object()) throw InputError("pair: expected an object with \"a\" and \"b\"");
  PairSpec p;
  const json& a = require_key(j, "a", "pair");
  const json& b = require_key(j, "b", "pair");
  try {
    p.a = spec_from_json(a);
  } catch (const InputError& e) {
    throw InputError(std::string("pair.a: ") + e.what());
  }
  try {
    p.b = spec_from_json(b);
  } catch (const InputError& e) {
    throw InputError(std::string("pair.b: ") + e.what());
  }
  return p;
}

ManinPair build_pair(const PairSpec& p) { return {build(p.a), build(p.b), p.a.n, p.b.n}; }

namespace {

std::vector<std::string> content_lines(const std::string& text, std::vector<std::size_t>& numbers) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
    numbers.push_back(no);
  }
  return out;
}

}  // namespace

NCMatrix parse_matrix_text(const std::string& text, Alphabet& alpha) {
  std::vector<std::size_t> numbers;
  const auto lines = content_lines(text, numbers);
  if (lines.empty()) throw InputError("matrix text is empty");
  std::vector<std::vector<NCPoly>> rows;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    const std::string& l = lines[r];
    const std::string where = "line " + std::to_string(numbers[r]);
    std::vector<std::string> cells;
    int depth = 0;
    std::string cur;
    for (char ch : l) {
      if (ch == '[' || ch == '(') ++depth;
      if (ch == ']' || ch == ')') --depth;
      if (depth < 0) throw InputError(where + ": unbalanced brackets");
      if (ch == ',' && depth == 0) {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (depth != 0) throw InputError(where + ": unbalanced brackets");
    cells.push_back(cur);
    std::vector<NCPoly> row;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      try {
        row.push_back(parse_ncpoly(cells[c], alpha));
      } catch (const InputError& e) {
        throw InputError(where + ", entry " + std::to_string(c + 1) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError(where + ": expected " + std::to_string(rows.front().size()) + " entries, found " +
                       std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  NCMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<NCPoly> parse_relations_text(const std::string& text, Alphabet& alpha) {
  std::vector<std::size_t> numbers;
  const auto lines = content_lines(text, numbers);
  std::vector<NCPoly> out;
  for (std::size_t r = 0; r < lines.size(); ++r) {
    try {
      out.push_back(parse_ncpoly(lines[r], alpha));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(numbers[r]) + ": " + e.what());
    }
  }
  return out;
}

json ncmatrix_to_json(const NCMatrix& m, const Alphabet& alpha) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j), alpha));
    rows.push_back(std::move(row));
  }
  return rows;
}

json check_to_json(const IdentityCheck& c) {
  json j;
  j["id"] = c.id;
  j["pass"] = c.pass;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json axioms_to_json(const AxiomReport& r) {
  json j;
  j["annihilation"] = r.annihilation;
  j["fixed_vectors"] = r.fixed_vectors;
  j["idempotent"] = r.idempotent;
  if (r.orthogonal) j["orthogonal"] = *r.orthogonal;
  if (r.nesting) j["nesting"] = *r.nesting;
  j["all"] = r.all();
  return j;
}

json pairing_to_json(const PairingOperator& p) {
  json j;
  j["kind"] = kind_name(p.kind);
  j["n"] = p.n;
  j["k"] = p.k;
  j["provenance"] = p.provenance;
  j["operator"] = matrix_to_json(p.op);
  return j;
}

json report_to_json(const ScenarioReport& r) {
  json j;
  j["scenario"] = r.id;
  j["pass"] = r.pass();
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  j["facts"] = facts;
  if (!r.dims_label.empty()) j["dims"] = json{{"label", r.dims_label}, {"values", r.dims}};
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  j["checks"] = checks;
  json ids = json::object();
  for (const auto& [name, m] : r.idempotents) ids[name] = matrix_to_json(m);
  j["idempotents"] = ids;
  return j;
}

json suite_to_json(const SuiteRun& run) {
  json j;
  j["suite"] = run.name;
  j["pass"] = run.pass;
  json items = json::array();
  for (const auto& it : run.items) {
    json i;
    i["id"] = it.id;
    if (it.criterion > 0) i["criterion"] = it.criterion;
    i["pass"] = it.pass;
    if (!it.error.empty()) i["error"] = it.error;
    json checks = json::array();
    for (const auto& c : it.checks) checks.push_back(check_to_json(c));
    i["checks"] = checks;
    items.push_back(std::move(i));
  }
  j["items"] = items;
  return j;
}

}  // namespace manin
