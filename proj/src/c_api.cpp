#include "manin/manin_c.h"

#include <cstring>
#include <functional>
#include <memory>
#include <string>

#include "manin/ideal.hpp"
#include "manin/json_io.hpp"
#include "manin/quadratic.hpp"

struct manin_idempotent {
  manin::IdempotentSpec spec;
  manin::QMatrix op;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int guard(const std::function<int()>& f) {
  last_error.clear();
  try {
    return f();
  } catch (const manin::BudgetError& e) {
    last_error = e.what();
    return MANIN_BUDGET_ERROR;
  } catch (const manin::InputError& e) {
    last_error = e.what();
    return MANIN_INPUT_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MANIN_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* msg) {
  if (!ok) throw manin::InputError(msg);
}

void emit(char** out, const manin::json& j) {
  require(out != nullptr, "null output pointer");
  *out = dup_string(j.dump());
}

std::string str_arg(const char* s, const char* name) {
  if (s == nullptr) throw manin::InputError(std::string("missing ") + name);
  return s;
}

manin::PairingOperator make_pairing(const manin_idempotent& h, int k, manin::Kind kind, const std::string& method,
                                    std::string& reason, bool& exists) {
  using namespace manin;
  const IdempotentSpec& s = h.spec;
  exists = true;
  if (method == "generic") {
    GenericResult g = generic_pairing(h.op, s.n, k, kind);
    if (!g.op) {
      exists = false;
      reason = g.reason;
      return {};
    }
    return *g.op;
  }
  if (method == "group") return group_average(h.op, s.n, k, kind);
  if (method == "hecke") {
    require(s.family == "RhatMinus", "method hecke needs family RhatMinus");
    return hecke_pairing(s.q, s.n, k, kind);
  }
  if (method == "brauer") {
    if (s.family == "B_n" && kind == Kind::S) return brauer_pairing(BrauerFamily::so, s.n, k);
    if (s.family == "Btilde_n" && kind == Kind::A) return brauer_pairing(BrauerFamily::sp, s.n, k);
    throw InputError("method brauer needs B_n with kind S or Btilde_n with kind A");
  }
  if (method == "closed") {
    if (s.family == "A_n") return closed_form_multiparam(standard_params(1, s.n), k, kind);
    if (s.family == "Aq") return closed_form_multiparam(standard_params(s.q, s.n), k, kind);
    if (s.family == "Aqhat") return closed_form_multiparam(s.qhat, k, kind);
    if (s.family == "FourParam") {
      require(k == 3 && kind == Kind::A, "closed form for FourParam exists for k = 3, kind A");
      FourParamResult r = fourparam_A3(s.a, s.b, s.c, s.kappa);
      if (!r.op) {
        exists = false;
        reason = r.reason;
        return {};
      }
      return *r.op;
    }
    throw InputError("method closed needs family A_n, Aq, Aqhat or FourParam");
  }
  throw InputError("unknown method '" + method + "' (expected generic, group, hecke, brauer or closed)");
}

manin::PairSpec parse_pair(const char* pair_json) {
  return manin::pair_from_json(manin::parse_json_text(str_arg(pair_json, "pair JSON"), "pair"));
}

}  // namespace

extern "C" {

const char* manin_last_error(void) { return last_error.c_str(); }

void manin_string_free(char* s) { delete[] s; }

int manin_idempotent_from_json(const char* spec_json, manin_idempotent** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    auto h = std::make_unique<manin_idempotent>();
    h->spec = manin::spec_from_json(manin::parse_json_text(str_arg(spec_json, "spec JSON"), "spec"));
    h->op = manin::build(h->spec);
    *out = h.release();
    return MANIN_OK;
  });
}

void manin_idempotent_free(manin_idempotent* h) { delete h; }

int manin_idempotent_size(const manin_idempotent* h, size_t* out) {
  return guard([&] {
    require(h != nullptr && out != nullptr, "null handle");
    *out = h->op.rows();
    return MANIN_OK;
  });
}

int manin_idempotent_spec(const manin_idempotent* h, char** out_json) {
  return guard([&] {
    require(h != nullptr, "null handle");
    emit(out_json, manin::spec_to_json(h->spec));
    return MANIN_OK;
  });
}

int manin_idempotent_matrix(const manin_idempotent* h, char** out_json) {
  return guard([&] {
    require(h != nullptr, "null handle");
    emit(out_json, manin::matrix_to_json(h->op));
    return MANIN_OK;
  });
}

int manin_idempotent_check(const manin_idempotent* h, char** out_json) {
  return guard([&] {
    require(h != nullptr, "null handle");
    manin::json j;
    const bool idem = manin::is_idempotent(h->op);
    j["idempotent"] = idem;
    j["rank"] = manin::rank(h->op);
    j["trace"] = manin::rational_to_json(h->op.trace());
    emit(out_json, j);
    return idem ? MANIN_OK : MANIN_VERIFY_FAILED;
  });
}

int manin_idempotent_dims(const manin_idempotent* h, const char* variant, int max_degree, char** out_json) {
  return guard([&] {
    require(h != nullptr, "null handle");
    require(max_degree >= 0, "max degree must be non-negative");
    const manin::Variant v = manin::parse_variant(str_arg(variant, "variant"));
    emit(out_json, manin::json(manin::dimension_table({h->op, h->spec.n, v}, max_degree)));
    return MANIN_OK;
  });
}

int manin_equivalent(const manin_idempotent* a, const manin_idempotent* b, const char* side, int* result) {
  return guard([&] {
    require(a != nullptr && b != nullptr && result != nullptr, "null handle");
    require(a->op.rows() == b->op.rows(), "idempotents act on different spaces");
    const std::string s = str_arg(side, "side");
    require(s == "left" || s == "right", "side must be left or right");
    const bool eq = s == "left" ? manin::left_equivalent(a->op, b->op) : manin::right_equivalent(a->op, b->op);
    *result = eq ? 1 : 0;
    return eq ? MANIN_OK : MANIN_VERIFY_FAILED;
  });
}

int manin_pairing(const manin_idempotent* h, int k, const char* kind, const char* method, char** out_json) {
  return guard([&] {
    require(h != nullptr, "null handle");
    require(k >= 1, "k must be at least 1");
    const manin::Kind kd = manin::parse_kind(str_arg(kind, "kind"));
    std::string reason;
    bool exists = true;
    const manin::PairingOperator p = make_pairing(*h, k, kd, str_arg(method, "method"), reason, exists);
    manin::json j;
    j["exists"] = exists;
    if (!exists) {
      j["reason"] = reason;
      emit(out_json, j);
      return MANIN_VERIFY_FAILED;
    }
    j["pairing"] = manin::pairing_to_json(p);
    const manin::AxiomReport rep = manin::verify_axioms(p, h->op);
    j["axioms"] = manin::axioms_to_json(rep);
    emit(out_json, j);
    return rep.all() ? MANIN_OK : MANIN_VERIFY_FAILED;
  });
}

int manin_check_matrix(const char* pair_json, const char* matrix_text, const char* relations_text, char** out_json) {
  return guard([&] {
    const manin::ManinPair pair = manin::build_pair(parse_pair(pair_json));
    manin::Alphabet alpha;
    const manin::NCMatrix m = manin::parse_matrix_text(str_arg(matrix_text, "matrix text"), alpha);
    const auto rels = manin::parse_relations_text(relations_text ? relations_text : "", alpha);
    require(m.rows() == static_cast<std::size_t>(pair.n) && m.cols() == static_cast<std::size_t>(pair.m),
            "matrix shape does not match the pair");
    const std::size_t g = alpha.size();
    const bool ok = manin::is_manin(pair, m, manin::relation_vectors(rels, g), g);
    manin::json j;
    j["manin"] = ok;
    j["generators"] = g;
    j["relations"] = rels.size();
    emit(out_json, j);
    return ok ? MANIN_OK : MANIN_VERIFY_FAILED;
  });
}

int manin_minor(const char* pair_json, int k, const char* kind, const char* matrix_text, char** out_json) {
  return guard([&] {
    using namespace manin;
    require(k >= 1, "k must be at least 1");
    const ManinPair pair = build_pair(parse_pair(pair_json));
    const Kind kd = parse_kind(str_arg(kind, "kind"));
    Alphabet alpha;
    const NCMatrix m = parse_matrix_text(str_arg(matrix_text, "matrix text"), alpha);
    require(m.rows() == static_cast<std::size_t>(pair.n) && m.cols() == static_cast<std::size_t>(pair.m),
            "matrix shape does not match the pair");
    const GenericResult t = kd == Kind::A ? generic_pairing(pair.a, pair.n, k, Kind::A) : generic_pairing(pair.b, pair.m, k, Kind::S);
    json j;
    j["kind"] = kind_name(kd);
    j["k"] = k;
    if (!t.op) {
      j["exists"] = false;
      j["reason"] = t.reason;
      emit(out_json, j);
      return MANIN_VERIFY_FAILED;
    }
    const NCMatrix chain = compose_chain(m, k);
    const NCMatrix minor = kd == Kind::A ? t.op->op * chain : chain * t.op->op;
    j["exists"] = true;
    j["minor"] = ncmatrix_to_json(minor, alpha);
    emit(out_json, j);
    return MANIN_OK;
  });
}

int manin_scenario(const char* name, const char* options_json, char** out_json) {
  return guard([&] {
    using namespace manin;
    const std::string n = str_arg(name, "scenario name");
    const json opt = parse_json_text(options_json ? options_json : "{}", "options");
    require(opt.is_object(), "options must be a JSON object");
    auto get_q = [&](const char* key) {
      if (!opt.contains(key)) throw InputError(std::string("missing option \"") + key + "\"");
      return rational_from_json(opt.at(key), key);
    };
    auto get_int = [&](const char* key) {
      if (!opt.contains(key) || !opt.at(key).is_number_integer())
        throw InputError(std::string("option \"") + key + "\" must be an integer");
      return opt.at(key).get<int>();
    };
    ScenarioReport r;
    json extra = json::object();
    if (n == "bcd") {
      if (!opt.contains("family") || !opt.at("family").is_string()) throw InputError("option \"family\" must be B, C or D");
      r = bcd_report(parse_bcd_family(opt.at("family").get<std::string>()), get_int("n"));
    } else if (n == "fourparam") {
      const FourParamReport f = fourparam_report(get_q("a"), get_q("b"), get_q("c"), get_q("kappa"));
      r = f.report;
      extra["dim_X3"] = f.dim_X3;
      extra["dim_Xi3"] = f.dim_Xi3;
      extra["expected_dim_Xi3"] = f.expected_Xi3;
      if (f.a3) extra["A3"] = pairing_to_json(*f.a3);
    } else if (n == "lie") {
      if (!opt.contains("structure")) throw InputError("missing option \"structure\"");
      const LieSeed seed = lie_seed(structure_from_json(opt.at("structure"), "structure"), get_int("n"));
      r = seed.report;
      extra["spec"] = spec_to_json(seed.spec);
    } else {
      throw InputError("unknown scenario '" + n + "' (expected bcd, fourparam or lie)");
    }
    json j = report_to_json(r);
    for (auto& [key, val] : extra.items()) j[key] = val;
    emit(out_json, j);
    return r.pass() ? MANIN_OK : MANIN_VERIFY_FAILED;
  });
}

int manin_verify_suite(const char* suite, char** out_json) {
  return guard([&] {
    const manin::SuiteRun run = manin::run_suite(str_arg(suite, "suite"));
    emit(out_json, manin::suite_to_json(run));
    return run.pass ? MANIN_OK : MANIN_VERIFY_FAILED;
  });
}

}  // extern "C"
