#include "manin/suites.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "manin/idempotent.hpp"
#include "manin/manin.hpp"
#include "manin/pairing.hpp"
#include "manin/perm.hpp"
#include "manin/quadratic.hpp"
#include "manin/scenarios.hpp"
#include "manin/tensor.hpp"

namespace manin {

QMatrix sample_params(int n, int offset) {
  static const Q vals[4] = {Q(2), Q(3), Q(1) / 2, Q(1) / 3};
  QMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  int c = offset;
  for (std::size_t i = 0; i < q.rows(); ++i) {
    q(i, i) = 1;
    for (std::size_t j = i + 1; j < q.cols(); ++j) {
      q(i, j) = vals[c++ % 4];
      q(j, i) = 1 / q(i, j);
    }
  }
  return q;
}

namespace {

using Checks = std::vector<IdentityCheck>;

IdentityCheck chk(const std::string& id, bool pass, const std::string& detail = "") { return {id, pass, detail}; }

std::string ns(int n) { return "_n" + std::to_string(n); }
std::string ks(int k) { return "_k" + std::to_string(k); }

IdentityCheck rank_trace_check(const std::string& id, const QMatrix& e) {
  const bool idem = is_idempotent(e);
  const std::size_t r = rank(e);
  const bool ok = idem && Q(static_cast<long>(r)) == e.trace();
  return chk(id, ok, "rank " + std::to_string(r) + ", trace " + to_string(e.trace()));
}

Checks catalog_checks(int n) {
  Checks out;
  const QMatrix qh = sample_params(n), ph = sample_params(n, 1);
  out.push_back(rank_trace_check("A_n" + ns(n), op_A(n)));
  out.push_back(rank_trace_check("S_n" + ns(n), op_S(n)));
  out.push_back(rank_trace_check("Aq_q2" + ns(n), op_Aqhat(standard_params(2, n))));
  out.push_back(rank_trace_check("Aqhat" + ns(n), op_Aqhat(qh)));
  out.push_back(rank_trace_check("Aqhat_alt" + ns(n), op_Aqhat(ph)));
  out.push_back(rank_trace_check("Atilde_qhat" + ns(n), op_Atilde_qhat(qh)));
  out.push_back(rank_trace_check("RhatPlus_q2" + ns(n), op_Rhat_plus(2, n)));
  out.push_back(rank_trace_check("RhatMinus_q2" + ns(n), op_Rhat_minus(2, n)));
  out.push_back(rank_trace_check("B_n" + ns(n), op_B(n)));
  out.push_back(rank_trace_check("one_minus_B_n" + ns(n), QMatrix::identity(static_cast<std::size_t>(n * n)) - op_B(n)));
  if (n % 2 == 0) out.push_back(rank_trace_check("Btilde_n" + ns(n), op_Btilde(n)));
  if (n == 3) {
    out.push_back(rank_trace_check("FourParam_1_1_1_1", op_A_fourparam(1, 1, 1, 1)));
    out.push_back(rank_trace_check("FourParam_2_3_1/2_1/3", op_A_fourparam(2, 3, Q(1) / 2, Q(1) / 3)));
    out.push_back(rank_trace_check("Lie_affine_line", op_A_lie({{1, 2, 1, Q(1)}, {2, 1, 1, Q(-1)}}, 3)));
  }
  if (n == 4) out.push_back(rank_trace_check("Lie_sl2", op_A_lie(sl2_structure(), 4)));
  if (n == 2) out.push_back(rank_trace_check("Lie_abelian_line", op_A_lie({}, 2)));
  return out;
}

Checks hecke_checks(int n) {
  const Q q = 2, qi = Q(1) / 2, s = q + qi;
  const QMatrix r = op_Rhat(q, n), rp = op_Rhat_plus(q, n), rm = op_Rhat_minus(q, n);
  const QMatrix one = QMatrix::identity(r.rows()), P = op_P(n);
  const QMatrix aq = op_Aqhat(standard_params(q, n)), aqi = op_Aqhat(standard_params(qi, n));
  const QMatrix r12 = embed(r, n, 2, 3, 1), r23 = embed(r, n, 2, 3, 2);
  Checks out;
  out.push_back(chk("braid", r23 * r12 * r23 == r12 * r23 * r12));
  out.push_back(chk("hecke_relation", ((r - qi * one) * (r + q * one)).is_zero()));
  out.push_back(chk("decomposition", r == qi * rp - q * rm && rp + rm == one));
  out.push_back(chk("orthogonal_idempotents",
                    is_idempotent(rp) && is_idempotent(rm) && (rp * rm).is_zero() && (rm * rp).is_zero()));
  out.push_back(chk("Rminus_equals_P_Aq", rm == (Q(-2) / s) * (P * aq)));
  out.push_back(chk("Rminus_equals_Aqinv_P", rm == (Q(-2) / s) * (aqi * P)));
  out.push_back(chk("Aqinv_Aq_product", aqi * aq == (-s / 2) * (P * aq) && aq * aqi == (-s / 2) * (aq * P)));
  out.push_back(chk("Rminus_left_equivalent_Aq", left_equivalent(rm, aq)));
  out.push_back(chk("Rminus_right_equivalent_Aqinv", right_equivalent(rm, aqi)));
  out.push_back(chk("Rminus_not_left_equivalent_Aqinv", !left_equivalent(rm, aqi)));
  return out;
}

Checks dims_checks() {
  Checks out;
  for (int n = 1; n <= 3; ++n)
    for (int v = 0; v < 2; ++v) {
      const QMatrix qh = v == 0 ? standard_params(2, n) : sample_params(n);
      const std::string tag = (v == 0 ? "Aq_q2" : "Aqhat") + ns(n);
      const auto x = dimension_table({op_Aqhat(qh), n, Variant::X}, 4);
      const auto xi = dimension_table({op_Aqhat(qh), n, Variant::Xi}, 4);
      bool okx = true, okxi = true;
      for (int k = 0; k <= 4; ++k) {
        okx = okx && Q(static_cast<long>(x[static_cast<std::size_t>(k)])) == binomial(k + n - 1, k);
        okxi = okxi && Q(static_cast<long>(xi[static_cast<std::size_t>(k)])) == binomial(n, k);
      }
      out.push_back(chk("X_" + tag, okx));
      out.push_back(chk("Xi_" + tag, okxi));
    }
  for (int n = 3; n <= 4; ++n) {
    const auto x = dimension_table({op_B(n), n, Variant::X}, 3);
    bool ok = true;
    for (int k = 0; k <= 3; ++k) ok = ok && Q(static_cast<long>(x[static_cast<std::size_t>(k)])) == dim_formula_X_B(n, k);
    out.push_back(chk("X_B" + ns(n), ok));
  }
  const auto xi = dimension_table({op_Btilde(4), 4, Variant::Xi}, 3);
  bool ok = true;
  for (int k = 0; k <= 3; ++k) ok = ok && Q(static_cast<long>(xi[static_cast<std::size_t>(k)])) == dim_formula_Xi_Btilde(4, k);
  out.push_back(chk("Xi_Btilde_n4", ok));
  out.push_back(chk("Xi_Btilde_n4_degree3_zero", xi[3] == 0));
  return out;
}

// Pairwise agreement of every applicable construction plus the full axiom report.
Checks pairing_family_checks(const std::string& tag, const QMatrix& e, int n, bool use_group,
                             const std::optional<QMatrix>& qhat, const std::optional<Q>& hecke_q) {
  Checks out;
  std::vector<PairingOperator> lower;
  for (int k = 1; k <= 3; ++k) {
    std::map<Kind, PairingOperator> chosen;
    for (Kind kind : {Kind::S, Kind::A}) {
      const std::string id = tag + ns(n) + ks(k) + "_" + kind_name(kind);
      std::vector<PairingOperator> ops;
      const GenericResult g = generic_pairing(e, n, k, kind);
      if (!g.op) {
        out.push_back(chk(id + "_generic_exists", false, g.reason));
        continue;
      }
      ops.push_back(*g.op);
      if (use_group) ops.push_back(group_average(e, n, k, kind));
      if (qhat) ops.push_back(closed_form_multiparam(*qhat, k, kind));
      if (hecke_q) ops.push_back(hecke_pairing(*hecke_q, n, k, kind));
      bool agree = true;
      std::string names;
      for (const auto& o : ops) {
        agree = agree && o.op == ops.front().op;
        names += (names.empty() ? "" : ",") + o.provenance;
      }
      out.push_back(chk(id + "_agree", agree && ops.size() >= 2, names));
      chosen[kind] = ops.front();
    }
    for (Kind kind : {Kind::S, Kind::A}) {
      auto it = chosen.find(kind);
      if (it == chosen.end()) continue;
      std::vector<PairingOperator> others = lower;
      auto opp = chosen.find(kind == Kind::S ? Kind::A : Kind::S);
      if (k >= 2 && opp != chosen.end()) others.push_back(opp->second);
      const AxiomReport rep = verify_axioms(it->second, e, others);
      const bool full = rep.all() && (k < 2 || rep.orthogonal.has_value()) && (k < 2 || rep.nesting.has_value());
      out.push_back(chk(tag + ns(n) + ks(k) + "_" + kind_name(kind) + "_axioms", full));
    }
    for (auto& [kind, op] : chosen) lower.push_back(op);
  }
  return out;
}

Checks brauer_checks() {
  Checks out;
  for (int n = 3; n <= 4; ++n) {
    const QMatrix one = QMatrix::identity(static_cast<std::size_t>(n * n));
    out.push_back(chk("so_S2_equals_one_minus_B" + ns(n), brauer_pairing(BrauerFamily::so, n, 2).op == one - op_B(n)));
    for (int k = 1; k <= 3; ++k) {
      const PairingOperator p = brauer_pairing(BrauerFamily::so, n, k);
      const Q expect = brauer_trace_formula(BrauerFamily::so, n, k);
      out.push_back(chk("so_trace" + ns(n) + ks(k), p.op.trace() == expect, to_string(p.op.trace())));
      const GenericResult g = generic_pairing(op_B(n), n, k, Kind::S);
      out.push_back(chk("so_matches_generic" + ns(n) + ks(k), g.op && g.op->op == p.op));
      out.push_back(chk("so_axioms" + ns(n) + ks(k), verify_axioms(p, op_B(n)).all()));
    }
  }
  for (int n : {2, 4}) {
    out.push_back(chk("sp_A2_equals_Btilde" + ns(n), brauer_pairing(BrauerFamily::sp, n, 2).op == op_Btilde(n)));
    for (int k = 1; k <= n / 2 + 1 && k <= 3; ++k) {
      const PairingOperator p = brauer_pairing(BrauerFamily::sp, n, k);
      const Q expect = brauer_trace_formula(BrauerFamily::sp, n, k);
      out.push_back(chk("sp_trace" + ns(n) + ks(k), p.op.trace() == expect, to_string(p.op.trace())));
      out.push_back(chk("sp_axioms" + ns(n) + ks(k), verify_axioms(p, op_Btilde(n)).all()));
    }
  }
  out.push_back(chk("sp_A3_zero_n4", brauer_pairing(BrauerFamily::sp, 4, 3).op.is_zero()));
  return out;
}

Checks fourparam_grid_checks() {
  const std::vector<std::array<Q, 3>> triples = {
      {1, 1, 1}, {1, -1, 1}, {2, 2, 2}, {2, -2, -2}, {Q(1) / 2, Q(1) / 2, Q(-1) / 2},
      {1, 2, 1}, {1, 2, 3}, {Q(1) / 2, 1, 2}, {3, 1, 1}, {2, 1, -1}};
  const std::vector<Q> kappas = {1, 2, Q(-1) / 3, 0};
  Checks out;
  int points = 0, branch_i = 0, none = 0, multi = 0;
  for (const auto& t : triples)
    for (const auto& kappa : kappas) {
      const FourParamReport r = fourparam_report(t[0], t[1], t[2], kappa);
      ++points;
      if (sgn(kappa) == 0)
        ++multi;
      else if (r.conditions.i)
        ++branch_i;
      else
        ++none;
      std::string failed;
      for (const auto& c : r.report.checks)
        if (!c.pass) failed += (failed.empty() ? "" : ",") + c.id;
      out.push_back(chk(r.report.id, r.report.pass(),
                        "X3 " + std::to_string(r.dim_X3) + ", Xi3 " + std::to_string(r.dim_Xi3) + (failed.empty() ? "" : ", failed " + failed)));
    }
  out.push_back(chk("grid_coverage", points >= 20 && branch_i > 0 && none > 0 && multi > 0,
                    std::to_string(points) + " points: " + std::to_string(branch_i) + " condition (i), " +
                        std::to_string(none) + " no condition, " + std::to_string(multi) + " kappa = 0"));
  return out;
}

Checks report_checks(const ScenarioReport& r) {
  Checks out;
  for (const auto& c : r.checks) out.push_back({r.id + "." + c.id, c.pass, c.detail});
  return out;
}

Checks negative_checks() {
  Checks out;
  {
    Alphabet alpha = Alphabet::matrix("M", 2, 2);
    const NCMatrix M = NCMatrix::generic(alpha, "M", 2, 2);
    const bool manin = is_manin({op_A(2), op_A(2), 2, 2}, M, std::vector<SparseVec>{}, alpha.size());
    out.push_back(chk("free_2x2_not_A2_A2_manin", !manin));
  }
  {
    PairingOperator p = hecke_pairing(2, 2, 2, Kind::A);
    p.op(0, 1) += 1;
    const AxiomReport rep = verify_axioms(p, op_Rhat_minus(2, 2));
    out.push_back(chk("corrupted_pairing_not_idempotent", !rep.idempotent && !rep.all()));
  }
  {
    bool rejected = false;
    try {
      inversion_set_from_reduced_word({1, 1}, 3);
    } catch (const ReducedWordError&) {
      rejected = true;
    }
    out.push_back(chk("non_reduced_word_rejected", rejected));
  }
  return out;
}

std::vector<SuiteItem> build_manifest() {
  std::vector<SuiteItem> m;
  auto add = [&m](std::string id, int crit, std::vector<std::string> suites, std::function<Checks()> f) {
    m.push_back({std::move(id), crit, std::move(suites), std::move(f)});
  };
  for (int n = 2; n <= 4; ++n) add("catalog_idempotents" + ns(n), 1, {"catalog"}, [n] { return catalog_checks(n); });
  for (int n = 2; n <= 3; ++n) add("hecke_structure" + ns(n), 2, {"hecke"}, [n] { return hecke_checks(n); });
  add("dimension_formulas", 3, {"dims"}, [] { return dims_checks(); });
  for (int n = 2; n <= 3; ++n) {
    add("pairing_A_n" + ns(n), 4, {"pairing"}, [n] { return pairing_family_checks("A_n", op_A(n), n, true, standard_params(1, n), std::nullopt); });
    add("pairing_Aqhat" + ns(n), 4, {"pairing"}, [n] {
      const QMatrix qh = sample_params(n);
      return pairing_family_checks("Aqhat", op_Aqhat(qh), n, true, qh, std::nullopt);
    });
    add("pairing_RhatMinus" + ns(n), 4, {"pairing"},
        [n] { return pairing_family_checks("RhatMinus", op_Rhat_minus(2, n), n, false, std::nullopt, Q(2)); });
  }
  add("brauer", 5, {"pairing", "brauer"}, [] { return brauer_checks(); });
  add("relation_space_rll", 6, {"determinants"}, [] {
    Checks c;
    for (int n = 2; n <= 3; ++n)
      for (int mm = 2; mm <= 3; ++mm)
        c.push_back(chk("rll_equals_q_manin" + ns(n) + "_m" + std::to_string(mm), rll_relations_equal_manin(n, mm, 2)));
    return c;
  });
  add("commutator_span", 6, {"determinants"}, [] {
    Checks c;
    for (int n = 2; n <= 3; ++n)
      for (int mm = 2; mm <= 3; ++mm)
        c.push_back(chk("manin_plus_transpose_is_commutators" + ns(n) + "_m" + std::to_string(mm), manin_and_transpose_span_commutators(n, mm)));
    return c;
  });
  add("determinant_row_law", 6, {"determinants"}, [] {
    return Checks{check_row_law(sample_params(2)), check_row_law(sample_params(3))};
  });
  add("determinant_column_law", 6, {"determinants"}, [] {
    return Checks{check_column_law(sample_params(2), sample_params(2, 1)), check_column_law(sample_params(3), sample_params(3, 2))};
  });
  add("repeated_column", 6, {"determinants"}, [] { return Checks{check_repeated_column(sample_params(3), sample_params(3, 1))}; });
  add("swap_laws_2x2", 6, {"determinants"}, [] { return check_swap_laws_2x2(2, 3); });
  add("minor_absorption", 6, {"determinants"}, [] { return Checks{check_absorption(2, 3), check_concatenation(2, 3)}; });
  add("cauchy_binet", 6, {"cauchybinet", "determinants"},
      [] { return Checks{check_cauchy_binet_det(2, 3, 5), check_cauchy_binet_perm(2, 3, 5)}; });
  add("hecke_transport", 7, {"determinants", "transport"}, [] {
    Checks c;
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) c.push_back(check_hecke_transport(2, n, k));
    return c;
  });
  add("minor_transport", 7, {"determinants", "transport"},
      [] { return Checks{check_minor_transport(2, 3, 2), check_minor_transport(2, 3, 3)}; });
  add("inversion_generating_function", 7, {"determinants", "transport"}, [] {
    Checks c;
    for (int k = 1; k <= 5; ++k) c.push_back(check_inversion_generating_function(2, k));
    return c;
  });
  add("fourparam_grid", 8, {"fourparam"}, [] { return fourparam_grid_checks(); });
  add("fourparam_examples", 8, {"fourparam"}, [] {
    Checks c;
    const FourParamReport a = fourparam_report(1, 1, 1, 1), b = fourparam_report(1, 2, 1, 1), m = fourparam_report(2, 2, 2, 0);
    c.push_back(chk("1_1_1_1_dim_Xi3_is_1_with_A3", a.dim_Xi3 == 1 && a.a3.has_value()));
    c.push_back(chk("1_2_1_1_dim_Xi3_is_0", b.dim_Xi3 == 0 && !b.a3.has_value()));
    c.push_back(chk("q_q_q_0_dim_Xi3_is_1", m.dim_Xi3 == 1));
    return c;
  });
  for (auto [f, n] : std::vector<std::pair<BcdFamily, int>>{
           {BcdFamily::D, 2}, {BcdFamily::B, 3}, {BcdFamily::D, 4}, {BcdFamily::C, 2}, {BcdFamily::C, 4}})
    add("bcd_" + bcd_family_name(f) + ns(n), 9, {"bcd"}, [f = f, n = n] { return report_checks(bcd_report(f, n)); });
  add("lie_seeds", 0, {"lie"}, [] {
    Checks c = report_checks(lie_seed(sl2_structure(), 4).report);
    const LieSeed ab = lie_seed({}, 3);
    c.push_back(chk("abelian_gives_A_n", build(ab.spec) == op_A(3)));
    const LieSeed sl2 = lie_seed(sl2_structure(), 4);
    c.push_back(chk("sl2_dim_X2_is_10", sl2.report.dims.size() > 2 && sl2.report.dims[2] == 10));
    c.push_back(chk("sl2_jacobi", sl2.jacobi));
    const LieSeed bad = lie_seed({{1, 2, 3, Q(1)}, {2, 1, 3, Q(-1)}, {1, 3, 1, Q(1)}, {3, 1, 1, Q(-1)}}, 4);
    c.push_back(chk("jacobi_violation_flagged_yet_idempotent", !bad.jacobi && bad.report.pass()));
    return c;
  });
  add("negative_controls", 10, {"negative"}, [] { return negative_checks(); });
  return m;
}

}  // namespace

const std::vector<SuiteItem>& suite_manifest() {
  static const std::vector<SuiteItem> m = build_manifest();
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",  "catalog", "hecke", "dims", "pairing",   "brauer",   "determinants",
                                                 "cauchybinet", "transport", "fourparam", "bcd", "lie", "negative"};
  return names;
}

ItemResult run_item(const SuiteItem& item) {
  ItemResult r;
  r.id = item.id;
  r.criterion = item.criterion;
  try {
    r.checks = item.run();
    std::sort(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    r.pass = !r.checks.empty() && std::all_of(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.pass; });
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  return r;
}

namespace {

SuiteRun run_filtered(const std::string& name, const std::function<bool(const SuiteItem&)>& keep) {
  SuiteRun run;
  run.name = name;
  for (const auto& item : suite_manifest())
    if (keep(item)) run.items.push_back(run_item(item));
  std::sort(run.items.begin(), run.items.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  run.pass = !run.items.empty() && std::all_of(run.items.begin(), run.items.end(), [](const auto& i) { return i.pass; });
  return run;
}

}  // namespace

SuiteRun run_suite(const std::string& name) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError("unknown suite '" + name + "'");
  return run_filtered(name, [&name](const SuiteItem& i) {
    return name == "all" || std::find(i.suites.begin(), i.suites.end(), name) != i.suites.end();
  });
}

SuiteRun run_criterion(int criterion) {
  return run_filtered("criterion_" + std::to_string(criterion), [criterion](const SuiteItem& i) { return i.criterion == criterion; });
}

}  // namespace manin
