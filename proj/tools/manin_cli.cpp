#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "manin/manin_c.h"

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Maps a library status to the process exit code, printing output or the error.
// `out` is read by reference so it sees the value written by the call in the first argument.
int finish(int status, char* const& out) {
  if (out != nullptr) {
    std::cout << out << "\n";
    manin_string_free(out);
  }
  switch (status) {
    case MANIN_OK: return 0;
    case MANIN_VERIFY_FAILED: return 1;
    case MANIN_BUDGET_ERROR: std::cerr << "error: " << manin_last_error() << "\n"; return 2;
    case MANIN_INPUT_ERROR: std::cerr << "error: " << manin_last_error() << "\n"; return 2;
    default: std::cerr << "internal error: " << manin_last_error() << "\n"; return 2;
  }
}

struct Handle {
  manin_idempotent* h = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { manin_idempotent_free(h); }
};

// Loads a spec; a non-OK status is returned through `status`.
int load(const std::string& spec_text, Handle& out) { return manin_idempotent_from_json(spec_text.c_str(), &out.h); }

json parse_inline(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Manin matrices, quadratic algebras and pairing operators over exact rationals"};
  app.require_subcommand(1);

  std::string family, spec_path, spec2_path, side = "left", variant = "X", pair_path, matrix_path, relations_path,
                                                kind = "A", method = "generic", suite = "all", sc_path, bcd_family;
  int n = 0, k = 2, max_degree = 4;
  std::optional<std::string> q, qhat, a, b, c, kappa, structure, custom;

  auto* catalog = app.add_subcommand("catalog", "Emit a catalog idempotent");
  catalog->add_option("--family", family, "Family name");
  catalog->add_option("--n", n, "Dimension");
  catalog->add_option("--q", q, "Parameter q");
  catalog->add_option("--qhat", qhat, "Parameter matrix as JSON");
  catalog->add_option("--a", a);
  catalog->add_option("--b", b);
  catalog->add_option("--c", c);
  catalog->add_option("--kappa", kappa);
  catalog->add_option("--structure", structure, "Structure constants as JSON [[i,j,k,value],...]");
  catalog->add_option("--matrix", custom, "Custom operator as JSON");
  catalog->add_option("--spec", spec_path, "Spec file instead of inline options");

  auto* check = app.add_subcommand("check-idempotent", "Check E^2 = E and report rank and trace");
  check->add_option("--spec", spec_path)->required();

  auto* equiv = app.add_subcommand("equiv", "Left or right equivalence of two idempotents");
  equiv->add_option("--spec1", spec_path)->required();
  equiv->add_option("--spec2", spec2_path)->required();
  equiv->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* dims = app.add_subcommand("dims", "Graded dimensions of a quadratic algebra");
  dims->add_option("--spec", spec_path)->required();
  dims->add_option("--variant", variant)->check(CLI::IsMember({"X", "Xi", "Xstar", "Xistar"}));
  dims->add_option("--max-degree", max_degree);

  auto* mcheck = app.add_subcommand("manin-check", "Decide whether a matrix is Manin for a pair");
  mcheck->add_option("--pair", pair_path)->required();
  mcheck->add_option("--matrix", matrix_path)->required();
  mcheck->add_option("--relations", relations_path);

  auto* pairing = app.add_subcommand("pairing", "Construct a pairing operator");
  pairing->add_option("--spec", spec_path)->required();
  pairing->add_option("--k", k);
  pairing->add_option("--kind", kind)->check(CLI::IsMember({"S", "A"}));
  pairing->add_option("--method", method)->check(CLI::IsMember({"generic", "group", "hecke", "brauer", "closed"}));

  auto* minor = app.add_subcommand("minor", "Minor operator of a matrix");
  minor->add_option("--pair", pair_path)->required();
  minor->add_option("--k", k);
  minor->add_option("--kind", kind)->check(CLI::IsMember({"S", "A"}));
  minor->add_option("--matrix", matrix_path)->required();

  auto* scenario = app.add_subcommand("scenario", "Named scenario reports");
  scenario->require_subcommand(1);
  auto* bcd = scenario->add_subcommand("bcd", "Types B, C, D");
  bcd->add_option("--family", bcd_family)->required()->check(CLI::IsMember({"B", "C", "D"}));
  bcd->add_option("--n", n)->required();
  auto* four = scenario->add_subcommand("fourparam", "Four-parameter idempotent");
  four->add_option("--a", a)->required();
  four->add_option("--b", b)->required();
  four->add_option("--c", c)->required();
  four->add_option("--kappa", kappa)->required();
  auto* lie = scenario->add_subcommand("lie", "Lie algebra seed");
  lie->add_option("--sc", sc_path, "JSON file {\"n\": ..., \"structure\": [[i,j,k,value],...]}")->required();

  auto* verify = app.add_subcommand("verify-suite", "Run a named verification suite");
  verify->add_option("--suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    char* out = nullptr;
    if (*catalog) {
      std::string text;
      if (!spec_path.empty()) {
        text = read_file(spec_path);
      } else {
        if (family.empty()) throw UsageError("catalog needs --family and --n, or --spec");
        json s;
        s["family"] = family;
        s["n"] = n;
        json p = json::object();
        if (q) p["q"] = *q;
        if (qhat) p["qhat"] = parse_inline(*qhat, "--qhat");
        if (a) p["a"] = *a;
        if (b) p["b"] = *b;
        if (c) p["c"] = *c;
        if (kappa) p["kappa"] = *kappa;
        if (structure) p["structure"] = parse_inline(*structure, "--structure");
        if (custom) p["matrix"] = parse_inline(*custom, "--matrix");
        s["params"] = p;
        text = s.dump();
      }
      Handle h;
      if (int st = load(text, h); st != MANIN_OK) return finish(st, nullptr);
      char* spec_out = nullptr;
      if (int st = manin_idempotent_spec(h.h, &spec_out); st != MANIN_OK) return finish(st, nullptr);
      if (int st = manin_idempotent_matrix(h.h, &out); st != MANIN_OK) {
        manin_string_free(spec_out);
        return finish(st, nullptr);
      }
      std::cout << "{\"spec\":" << spec_out << ",\"matrix\":" << out << "}\n";
      manin_string_free(spec_out);
      manin_string_free(out);
      return 0;
    }
    if (*check) {
      Handle h;
      if (int st = load(read_file(spec_path), h); st != MANIN_OK) return finish(st, nullptr);
      return finish(manin_idempotent_check(h.h, &out), out);
    }
    if (*equiv) {
      Handle h1, h2;
      if (int st = load(read_file(spec_path), h1); st != MANIN_OK) return finish(st, nullptr);
      if (int st = load(read_file(spec2_path), h2); st != MANIN_OK) return finish(st, nullptr);
      int result = 0;
      const int st = manin_equivalent(h1.h, h2.h, side.c_str(), &result);
      if (st == MANIN_OK || st == MANIN_VERIFY_FAILED)
        std::cout << "{\"side\":\"" << side << "\",\"equivalent\":" << (result ? "true" : "false") << "}\n";
      return finish(st, nullptr);
    }
    if (*dims) {
      Handle h;
      if (int st = load(read_file(spec_path), h); st != MANIN_OK) return finish(st, nullptr);
      return finish(manin_idempotent_dims(h.h, variant.c_str(), max_degree, &out), out);
    }
    if (*mcheck) {
      const std::string pair = read_file(pair_path), mat = read_file(matrix_path);
      const std::string rel = relations_path.empty() ? std::string() : read_file(relations_path);
      return finish(manin_check_matrix(pair.c_str(), mat.c_str(), rel.c_str(), &out), out);
    }
    if (*pairing) {
      Handle h;
      if (int st = load(read_file(spec_path), h); st != MANIN_OK) return finish(st, nullptr);
      return finish(manin_pairing(h.h, k, kind.c_str(), method.c_str(), &out), out);
    }
    if (*minor) {
      const std::string pair = read_file(pair_path), mat = read_file(matrix_path);
      return finish(manin_minor(pair.c_str(), k, kind.c_str(), mat.c_str(), &out), out);
    }
    if (*scenario) {
      json opt;
      std::string name;
      if (*bcd) {
        name = "bcd";
        opt = {{"family", bcd_family}, {"n", n}};
      } else if (*four) {
        name = "fourparam";
        opt = {{"a", *a}, {"b", *b}, {"c", *c}, {"kappa", *kappa}};
      } else {
        name = "lie";
        const std::string text = read_file(sc_path);
        return finish(manin_scenario(name.c_str(), text.c_str(), &out), out);
      }
      const std::string text = opt.dump();
      return finish(manin_scenario(name.c_str(), text.c_str(), &out), out);
    }
    if (*verify) return finish(manin_verify_suite(suite.c_str(), &out), out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
