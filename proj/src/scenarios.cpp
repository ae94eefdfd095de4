#include "manin/scenarios.hpp"

#include "manin/manin.hpp"
#include "manin/quadratic.hpp"
#include "manin/tensor.hpp"

namespace manin {

bool ScenarioReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

BcdFamily parse_bcd_family(const std::string& s) {
  if (s == "B") return BcdFamily::B;
  if (s == "C") return BcdFamily::C;
  if (s == "D") return BcdFamily::D;
  throw InputError("unknown BCD family '" + s + "' (expected B, C or D)");
}

std::string bcd_family_name(BcdFamily f) {
  switch (f) {
    case BcdFamily::B: return "B";
    case BcdFamily::C: return "C";
    default: return "D";
  }
}

Q dim_formula_X_B(int n, int k) {
  if (k == 0) return 1;
  return Q(n + 2 * k - 2) / Q(k) * binomial(n + k - 3, k - 1);
}

Q dim_formula_Xi_Btilde(int n, int k) {
  if (k == 0) return 1;
  if (k > n / 2 + 1) return 0;
  return Q(n - 2 * k + 2) / Q(k) * binomial(n + 1, k - 1);
}

namespace {

// [M^i_k, M^j_l] + [M^i_l, M^j_k] over the n m generators, 1-based indices.
std::vector<Q> sym_commutator(int n, int m, int i, int j, int k, int l) {
  (void)n;
  const auto g = static_cast<std::size_t>(n * m);
  std::vector<Q> v(g * g);
  auto id = [m](int r, int c) { return static_cast<std::size_t>((r - 1) * m + (c - 1)); };
  auto add_comm = [&](std::size_t x, std::size_t y) {
    v[x * g + y] += 1;
    v[y * g + x] -= 1;
  };
  add_comm(id(i, k), id(j, l));
  add_comm(id(i, l), id(j, k));
  return v;
}

std::vector<Q> minus(std::vector<Q> a, const std::vector<Q>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

IdentityCheck make_check(const std::string& id, bool pass, const std::string& detail = "") { return {id, pass, detail}; }

Subspace pair_relations(const QMatrix& a, const QMatrix& b, int n, int m) { return universal_relations({a, b, n, m}); }

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

}  // namespace

Subspace lambda_form_AB(int n, int m) {
  const auto g = static_cast<std::size_t>(n * m);
  QMatrix rows(0, g * g);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = k; l <= m; ++l) {
          auto v = sym_commutator(n, m, i, j, k, l);
          if (k + l == m + 1) v = minus(v, sym_commutator(n, m, i, j, 1, m));
          rows.append_row(v);
        }
  return Subspace::span(rows);
}

Subspace lambda_form_BtildeA(int n, int m) {
  const auto g = static_cast<std::size_t>(n * m);
  QMatrix rows(0, g * g);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = k; l <= m; ++l) {
          auto v = sym_commutator(n, m, i, j, k, l);
          if (i + j == n + 1) v = minus(v, sym_commutator(n, m, 1, n, k, l));
          rows.append_row(v);
        }
  return Subspace::span(rows);
}

ScenarioReport bcd_report(BcdFamily f, int n) {
  if (n < 2) throw InputError("n must be at least 2");
  if (f == BcdFamily::B && n % 2 == 0) throw InputError("type B needs odd n");
  if (f != BcdFamily::B && n % 2 != 0) throw InputError("types C and D need even n");
  ScenarioReport r;
  r.id = "bcd_" + bcd_family_name(f) + "_n" + std::to_string(n);
  const QMatrix one = QMatrix::identity(static_cast<std::size_t>(n * n));
  const QMatrix P = op_P(n), An = op_A(n);
  Alphabet alpha = Alphabet::matrix("M", n, n);
  const NCMatrix M = NCMatrix::generic(alpha, "M", n, n);
  const std::size_t g = alpha.size();
  const NCMatrix chain = compose_chain(M, 2);
  const Subspace relAA = pair_relations(An, An, n, n);
  const Q nq(n);

  if (f != BcdFamily::C) {
    const QMatrix Qn = op_Q(n), Bn = op_B(n);
    r.idempotents.push_back({"B_n", Bn});
    r.checks.push_back(make_check("B_n_idempotent", is_idempotent(Bn)));
    r.checks.push_back(make_check("Q_square_and_P_absorption", Qn * Qn == nq * Qn && P * Qn == Qn && Qn * P == Qn));
    const QMatrix q12 = embed(Qn, n, 2, 3, 1), q23 = embed(Qn, n, 2, 3, 2);
    r.checks.push_back(make_check("Q12_Q23_Q12_equals_Q12", q12 * q23 * q12 == q12));
    const Subspace relAB = pair_relations(An, Bn, n, n);
    const Subspace def = entry_span(((one - P) * chain) * (Q(1) / 2 * (one + P) - (Q(1) / nq) * Qn), g);
    r.checks.push_back(make_check("type_definition_equals_A_B_pair", subspace_equal(def, relAB)));
    r.checks.push_back(make_check("lambda_form_equals_A_B_relations", subspace_equal(lambda_form_AB(n, n), relAB)));
    r.checks.push_back(make_check("rel_A_B_within_rel_A_A", relAA.contains(relAB)));
    r.checks.push_back(make_check("rel_A_B_within_rel_B_B", pair_relations(Bn, Bn, n, n).contains(relAB)));
    if (n == 2) {
      QMatrix rows(0, g * g);
      for (auto [x, y] : {std::pair<std::uint16_t, std::uint16_t>{0, 2}, {1, 3}})
        rows.append_row(degree_component_dense(NCPoly::word({x, y}) - NCPoly::word({y, x}), 2, g));
      r.checks.push_back(make_check("D2_relations_are_ac_bd_commutators", subspace_equal(Subspace::span(rows), relAB)));
    }
    r.dims_label = "X_B_n";
    r.dims = dimension_table({Bn, n, Variant::X}, 3);
    bool ok = true;
    for (int k = 0; k <= 3; ++k) ok = ok && Q(static_cast<long>(r.dims[static_cast<std::size_t>(k)])) == dim_formula_X_B(n, k);
    r.checks.push_back(make_check("X_B_n_dimension_formula", ok, dims_str(r.dims)));
  } else {
    const QMatrix Qt = op_Qtilde(n), Bt = op_Btilde(n);
    r.idempotents.push_back({"Btilde_n", Bt});
    r.checks.push_back(make_check("Btilde_n_idempotent", is_idempotent(Bt)));
    r.checks.push_back(
        make_check("Qtilde_square_and_P_absorption", Qt * Qt == nq * Qt && P * Qt == Q(-1) * Qt && Qt * P == Q(-1) * Qt));
    const QMatrix p12 = embed(P, n, 2, 3, 1), p23 = embed(P, n, 2, 3, 2);
    const QMatrix t12 = embed(Qt, n, 2, 3, 1), t23 = embed(Qt, n, 2, 3, 2);
    r.checks.push_back(make_check("P12_Qt23_Qt12_equals_minus_P23_Qt12", p12 * t23 * t12 == Q(-1) * (p23 * t12)));
    const Subspace relBA = pair_relations(Bt, An, n, n);
    const Subspace def = entry_span(((Q(1) / 2 * (one - P) - (Q(1) / nq) * Qt) * chain) * (one + P), g);
    r.checks.push_back(make_check("type_definition_equals_Btilde_A_pair", subspace_equal(def, relBA)));
    r.checks.push_back(make_check("lambda_form_equals_Btilde_A_relations", subspace_equal(lambda_form_BtildeA(n, n), relBA)));
    r.checks.push_back(make_check("rel_Btilde_A_within_rel_A_A", relAA.contains(relBA)));
    r.checks.push_back(make_check("rel_Btilde_A_within_rel_Btilde_Btilde", pair_relations(Bt, Bt, n, n).contains(relBA)));
    if (n == 2) {
      r.checks.push_back(make_check("C2_relation_space_is_zero", relBA.dim() == 0));
      r.checks.push_back(make_check("Btilde_2_is_zero", Bt.is_zero()));
    }
    r.dims_label = "Xi_Btilde_n";
    r.dims = dimension_table({Bt, n, Variant::Xi}, 3);
    bool ok = true;
    for (int k = 0; k <= 3; ++k)
      ok = ok && Q(static_cast<long>(r.dims[static_cast<std::size_t>(k)])) == dim_formula_Xi_Btilde(n, k);
    r.checks.push_back(make_check("Xi_Btilde_n_dimension_formula", ok, dims_str(r.dims)));
  }
  return r;
}

std::size_t fourparam_expected_dim(const FourParamConditions& c, const Q& kappa) {
  if (sgn(kappa) == 0) return 1;
  const int count = int(c.i) + int(c.ii) + int(c.iii);
  if (count == 3) return 3;
  return count == 1 ? 1 : 0;
}

namespace {

Q psi_coefficient(int i, int j, int k, const Q& a, const Q& b, const Q& c, const Q& kappa) {
  if (i == j && j == k) return i == 1 ? -kappa / b : (i == 2 ? -kappa / c : -kappa / a);
  if (i == j || j == k || i == k) return 0;
  const bool cyclic = (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1);
  return cyclic ? Q(1) : Q(-1) / (a * a);
}

}  // namespace

FourParamReport fourparam_report(const Q& a, const Q& b, const Q& c, const Q& kappa) {
  if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0) throw InputError("a, b, c must be nonzero");
  FourParamReport out;
  ScenarioReport& r = out.report;
  r.id = "fourparam_" + to_string(a) + "_" + to_string(b) + "_" + to_string(c) + "_" + to_string(kappa);
  const QMatrix e = op_A_fourparam(a, b, c, kappa);
  r.idempotents.push_back({"A_abc_kappa", e});
  r.checks.push_back(make_check("idempotent", is_idempotent(e)));
  out.conditions = fourparam_conditions(a, b, c, kappa);
  r.facts.push_back({"condition_i", out.conditions.i ? "true" : "false"});
  r.facts.push_back({"condition_ii", out.conditions.ii ? "true" : "false"});
  r.facts.push_back({"condition_iii", out.conditions.iii ? "true" : "false"});
  out.dim_X3 = graded_dimension({e, 3, Variant::X}, 3);
  out.dim_Xi3 = graded_dimension({e, 3, Variant::Xi}, 3);
  out.expected_Xi3 = fourparam_expected_dim(out.conditions, kappa);
  r.dims_label = "X3_Xi3";
  r.dims = {out.dim_X3, out.dim_Xi3};
  r.checks.push_back(make_check("dim_Xi3_matches_conditions", out.dim_Xi3 == out.expected_Xi3,
                                std::to_string(out.dim_Xi3) + " vs " + std::to_string(out.expected_Xi3)));
  r.checks.push_back(make_check("dim_X3_minus_dim_Xi3_is_9", out.dim_X3 == out.dim_Xi3 + 9,
                                std::to_string(out.dim_X3) + " - " + std::to_string(out.dim_Xi3)));
  const FourParamResult a3 = fourparam_A3(a, b, c, kappa);
  out.a3 = a3.op;
  r.facts.push_back({"A3", a3.op ? a3.op->provenance : "absent: " + a3.reason});
  r.checks.push_back(make_check("A3_exists_iff_dim_Xi3_is_1", a3.op.has_value() == (out.dim_Xi3 == 1)));
  if (a3.op) {
    r.checks.push_back(make_check("A3_axioms", verify_axioms(*a3.op, e).all()));
    const GenericResult gen = generic_pairing(e, 3, 3, Kind::A);
    r.checks.push_back(make_check("A3_matches_generic", gen.op && gen.op->op == a3.op->op));
  }
  if (sgn(kappa) != 0 && out.conditions.i) {
    const IdealSlice slice = graded_slice({e, 3, Variant::Xi}, 3);
    const NCPoly psi123 = NCPoly::word({0, 1, 2});
    bool ok = true;
    std::string bad;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          const NCPoly w = NCPoly::word(
              {static_cast<std::uint16_t>(i - 1), static_cast<std::uint16_t>(j - 1), static_cast<std::uint16_t>(k - 1)});
          if (!reduces_to_zero(w - psi_coefficient(i, j, k, a, b, c, kappa) * psi123, slice)) {
            ok = false;
            bad = std::to_string(i) + std::to_string(j) + std::to_string(k);
          }
        }
    r.checks.push_back(make_check("psi_product_table", ok, ok ? "27 products" : "fails at psi" + bad));
  }
  return out;
}

std::vector<StructureConstant> sl2_structure() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h with basis (h, e, f).
  return {{1, 2, 2, Q(2)}, {2, 1, 2, Q(-2)}, {1, 3, 3, Q(-2)}, {3, 1, 3, Q(2)}, {2, 3, 1, Q(1)}, {3, 2, 1, Q(-1)}};
}

LieSeed lie_seed(const std::vector<StructureConstant>& sc, int n, int max_degree) {
  LieSeed out;
  out.spec.family = "Lie";
  out.spec.n = n;
  out.spec.structure = sc;
  validate(out.spec);
  ScenarioReport& r = out.report;
  r.id = "lie_n" + std::to_string(n);
  const QMatrix C = op_C_lie(sc, n), An = op_A(n);
  const QMatrix e = build(out.spec);
  r.idempotents.push_back({"A_g", e});
  r.checks.push_back(make_check("C_squared_zero", (C * C).is_zero()));
  r.checks.push_back(make_check("C_A_zero", (C * An).is_zero()));
  r.checks.push_back(make_check("A_C_equals_C", An * C == C));
  r.checks.push_back(make_check("A_g_idempotent", is_idempotent(e)));
  const int d = n - 1;
  std::vector<Q> cst(static_cast<std::size_t>(d * d * d));
  auto at = [&](int i, int j, int k) -> Q& { return cst[static_cast<std::size_t>(((i - 1) * d + (j - 1)) * d + (k - 1))]; };
  for (const auto& s : sc) at(s.i, s.j, s.k) += s.value;
  out.jacobi = true;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          Q s = 0;
          for (int m = 1; m <= d; ++m) s += at(i, j, m) * at(m, k, l) + at(j, k, m) * at(m, i, l) + at(k, i, m) * at(m, j, l);
          if (sgn(s) != 0) out.jacobi = false;
        }
  r.facts.push_back({"jacobi", out.jacobi ? "true" : "false"});
  r.dims_label = "X_A_g";
  r.dims = dimension_table({e, n, Variant::X}, max_degree);
  return out;
}

}  // namespace manin
