#include "doctest.h"
#include "manin/idempotent.hpp"
#include "manin/pairing.hpp"
#include "manin/quadratic.hpp"
#include "manin/tensor.hpp"
#include "test_util.hpp"

using namespace manin;
using test::frac;

namespace {

QMatrix params3() {
  QMatrix q = QMatrix::identity(3);
  q(0, 1) = 2;
  q(0, 2) = frac(1, 3);
  q(1, 2) = 3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) q(i, j) = 1 / q(j, i);
  return q;
}

QMatrix signed_sum(int n, int k, bool antisym) {
  QMatrix out(ipow(n, k), ipow(n, k));
  for (const Perm& s : all_perms(k)) out += Q(antisym ? perm_sign(s) : 1) * perm_rep(s, n, 1);
  return (1 / factorial(k)) * out;
}

PairingOperator require_generic(const QMatrix& e, int n, int k, Kind kind) {
  const GenericResult g = generic_pairing(e, n, k, kind);
  REQUIRE(g.op.has_value());
  return *g.op;
}

}  // namespace

TEST_CASE("generic construction at k = 2") {
  const std::vector<std::pair<QMatrix, int>> es = {
      {op_A(2), 2}, {op_Aqhat(params3()), 3}, {op_Rhat_minus(Q(2), 3), 3}, {op_B(3), 3}, {op_Btilde(4), 4}};
  for (const auto& [e, n] : es) {
    CHECK(require_generic(e, n, 2, Kind::S).op == QMatrix::identity(e.rows()) - e);
    CHECK(require_generic(e, n, 2, Kind::A).op == e);
  }
}

TEST_CASE("generic construction reports absence") {
  const GenericResult g = generic_pairing(op_A_fourparam(Q(1), Q(2), Q(1), Q(1)), 3, 3, Kind::A);
  CHECK_FALSE(g.op.has_value());
  CHECK_FALSE(g.reason.empty());
}

TEST_CASE("symmetrizer for A_2 at k = 3") {
  const PairingOperator s = require_generic(op_A(2), 2, 3, Kind::S);
  CHECK(rank(s.op) == 4);
  CHECK(s.op == group_average(op_A(2), 2, 3, Kind::S).op);
  CHECK(s.op == signed_sum(2, 3, false));
  CHECK(require_generic(op_A(2), 2, 3, Kind::A).op.is_zero());
}

TEST_CASE("group average for A_n") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      CHECK(group_average(op_A(n), n, k, Kind::S).op == signed_sum(n, k, false));
      CHECK(group_average(op_A(n), n, k, Kind::A).op == signed_sum(n, k, true));
    }
  const QMatrix one = QMatrix::identity(4);
  CHECK(group_average(op_A(2), 2, 2, Kind::S).op == frac(1, 2) * (one + op_P(2)));
  CHECK(group_average(op_A(2), 2, 2, Kind::A).op == frac(1, 2) * (one - op_P(2)));
}

TEST_CASE("group average matches the multiparametric closed form") {
  const QMatrix qh = params3();
  for (Kind kind : {Kind::S, Kind::A}) {
    const PairingOperator g = group_average(op_Aqhat(qh), 3, 3, kind);
    CHECK(g.op == closed_form_multiparam(qh, 3, kind).op);
    CHECK(g.op == require_generic(op_Aqhat(qh), 3, 3, kind).op);
  }
}

TEST_CASE("Hecke pairing operators") {
  const Q q = 2;
  for (int n = 2; n <= 3; ++n) {
    CHECK(hecke_pairing(q, n, 2, Kind::S).op == op_Rhat_plus(q, n));
    CHECK(hecke_pairing(q, n, 2, Kind::A).op == op_Rhat_minus(q, n));
    for (int k = 1; k <= 3; ++k) {
      const PairingOperator a = hecke_pairing(q, n, k, Kind::A);
      CHECK(a.op.trace() == binomial(n, k));
      CHECK(a.op == hecke_A_closed(q, n, k));
      CHECK(hecke_transport_G(q, n, k) * a.op == closed_form_multiparam(standard_params(q, n), k, Kind::A).op);
      CHECK(a.op == require_generic(op_Rhat_minus(q, n), n, k, Kind::A).op);
      CHECK(hecke_pairing(q, n, k, Kind::S).op == require_generic(op_Rhat_minus(q, n), n, k, Kind::S).op);
    }
  }
  CHECK(hecke_pairing(q, 2, 3, Kind::A).op.is_zero());
  CHECK_THROWS_AS(hecke_pairing(Q(1), 2, 2, Kind::A), InputError);
}

TEST_CASE("Hecke A-operator closed-form entries") {
  const Q q = 2;
  const int n = 3, k = 3;
  const QMatrix c = closed_form_multiparam(standard_params(q, n), k, Kind::A).op;
  const Q pref = qpow(q, k * (k - 1) / 2) / q_factorial(q, k);
  for (const Perm& s : all_perms(k))
    for (const Perm& t : all_perms(k)) {
      std::vector<int> is, js;
      for (int a = 0; a < k; ++a) {
        is.push_back(s[a] - 1);
        js.push_back(t[a] - 1);
      }
      const Q expect = pref * Q(perm_sign(s) * perm_sign(t)) * qpow(q, -inv(s)) * qpow(q, -inv(t));
      const QMatrix g = hecke_transport_G(q, n, k);
      const Q actual = hecke_pairing(q, n, k, Kind::A).op(encode_index(is, n), encode_index(js, n));
      CHECK(actual * g(encode_index(is, n), encode_index(is, n)) == c(encode_index(is, n), encode_index(js, n)));
      CHECK(actual == expect);
    }
}

TEST_CASE("Brauer pairing operators") {
  for (int n = 3; n <= 4; ++n) {
    CHECK(brauer_pairing(BrauerFamily::so, n, 2).op == QMatrix::identity(n * n) - op_B(n));
    for (int k = 1; k <= 3; ++k) CHECK(brauer_pairing(BrauerFamily::so, n, k).op.trace() == brauer_trace_formula(BrauerFamily::so, n, k));
  }
  CHECK(brauer_pairing(BrauerFamily::sp, 4, 2).op == op_Btilde(4));
  for (int k = 1; k <= 3; ++k) CHECK(brauer_pairing(BrauerFamily::sp, 4, k).op.trace() == brauer_trace_formula(BrauerFamily::sp, 4, k));
  CHECK(brauer_pairing(BrauerFamily::sp, 4, 3).op.is_zero());
  CHECK(brauer_trace_formula(BrauerFamily::so, 3, 2) == 5);
  CHECK(brauer_trace_formula(BrauerFamily::sp, 4, 2) == 5);
  CHECK(brauer_trace_formula(BrauerFamily::sp, 4, 3) == 0);
  CHECK(brauer_pairing(BrauerFamily::so, 3, 3).op == require_generic(op_B(3), 3, 3, Kind::S).op);
  CHECK(brauer_pairing(BrauerFamily::sp, 4, 2).op == require_generic(op_Btilde(4), 4, 2, Kind::A).op);
}

TEST_CASE("Brauer relations under the tensor representations") {
  for (int n = 3; n <= 4; ++n) {
    const QMatrix s1 = embed(op_P(n), n, 2, 3, 1), s2 = embed(op_P(n), n, 2, 3, 2);
    const QMatrix e1 = embed(op_Q(n), n, 2, 3, 1), e2 = embed(op_Q(n), n, 2, 3, 2);
    CHECK(e1 * e1 == Q(n) * e1);
    CHECK(s1 * e1 == e1);
    CHECK(e1 * s1 == e1);
    CHECK(e1 * e2 * e1 == e1);
    CHECK(e2 * e1 * e2 == e2);
    CHECK(s1 * e2 * e1 == s2 * e1);
    CHECK(e1 * e2 * s1 == e1 * s2);
  }
  const int n = 4;
  const QMatrix s1 = Q(-1) * embed(op_P(n), n, 2, 3, 1), s2 = Q(-1) * embed(op_P(n), n, 2, 3, 2);
  const QMatrix e1 = Q(-1) * embed(op_Qtilde(n), n, 2, 3, 1), e2 = Q(-1) * embed(op_Qtilde(n), n, 2, 3, 2);
  CHECK(e1 * e1 == Q(-n) * e1);
  CHECK(s1 * e1 == e1);
  CHECK(e1 * s1 == e1);
  CHECK(e1 * e2 * e1 == e1);
  CHECK(e2 * e1 * e2 == e2);
  CHECK(s1 * e2 * e1 == s2 * e1);
  CHECK(e1 * e2 * s1 == e1 * s2);
}

TEST_CASE("multiparametric closed form") {
  const QMatrix ones = standard_params(Q(1), 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(closed_form_multiparam(ones, k, Kind::S).op == signed_sum(3, k, false));
    CHECK(closed_form_multiparam(ones, k, Kind::A).op == signed_sum(3, k, true));
    CHECK(closed_form_multiparam(params3(), k, Kind::A).op.trace() == binomial(3, k));
  }
  const QMatrix a = closed_form_multiparam(standard_params(Q(2), 2), 2, Kind::A).op;
  CHECK(a(encode_index({0, 1}, 2), encode_index({1, 0}, 2)) == frac(-1, 4));
}

TEST_CASE("four-parameter A_(3)") {
  const FourParamResult ok = fourparam_A3(Q(1), Q(1), Q(1), Q(1));
  CHECK(ok.conditions.i);
  REQUIRE(ok.op.has_value());
  const QMatrix e = op_A_fourparam(Q(1), Q(1), Q(1), Q(1));
  CHECK(verify_axioms(*ok.op, e).all());
  CHECK(ok.op->op == require_generic(e, 3, 3, Kind::A).op);
  const FourParamResult bad = fourparam_A3(Q(1), Q(2), Q(1), Q(1));
  CHECK_FALSE(bad.op.has_value());
  CHECK_FALSE(bad.conditions.i);
  CHECK_FALSE(bad.conditions.ii);
  CHECK_FALSE(bad.conditions.iii);
}

TEST_CASE("four-parameter family at kappa = 0 is multiparametric") {
  const Q a = 2;
  QMatrix qh = QMatrix::identity(3);
  qh(0, 1) = a * a;
  qh(0, 2) = 1 / (a * a);
  qh(1, 2) = a * a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) qh(i, j) = 1 / qh(j, i);
  CHECK(left_equivalent(op_A_fourparam(a, a, a, Q(0)), op_Aqhat(qh)));
  const FourParamResult r = fourparam_A3(a, a, a, Q(0));
  REQUIRE(r.op.has_value());
  CHECK(r.op->op == closed_form_multiparam(qh, 3, Kind::A).op);
}

TEST_CASE("axioms hold for group averages and fail for corrupted operators") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= (n == 2 ? 4 : 3); ++k) {
      const PairingOperator s = group_average(op_A(n), n, k, Kind::S), a = group_average(op_A(n), n, k, Kind::A);
      std::vector<PairingOperator> lower;
      for (int j = 1; j < k; ++j) lower.push_back(group_average(op_A(n), n, j, Kind::S));
      std::vector<PairingOperator> others = lower;
      if (k >= 2) others.push_back(a);
      const AxiomReport r = verify_axioms(s, op_A(n), others);
      CHECK(r.all());
      CHECK(r.nesting.has_value() == (k >= 2));
      CHECK(verify_axioms(a, op_A(n)).all());
    }
  PairingOperator bad = group_average(op_A(2), 2, 3, Kind::S);
  bad.op(0, 1) += 1;
  const AxiomReport r = verify_axioms(bad, op_A(2));
  CHECK_FALSE(r.idempotent);
  CHECK_FALSE(r.all());
}

TEST_CASE("ranks match graded dimensions") {
  const std::vector<std::pair<QMatrix, int>> es = {{op_Aqhat(params3()), 3}, {op_Rhat_minus(Q(2), 2), 2}, {op_B(3), 3}};
  for (const auto& [e, n] : es)
    for (int k = 1; k <= 3; ++k) {
      const GenericResult s = generic_pairing(e, n, k, Kind::S), a = generic_pairing(e, n, k, Kind::A);
      if (s.op) CHECK(rank(s.op->op) == graded_dimension({e, n, Variant::X}, k));
      if (a.op) CHECK(rank(a.op->op) == graded_dimension({e, n, Variant::Xi}, k));
    }
}

TEST_CASE("left-equivalent idempotents give equivalent pairing operators") {
  const Q q = 2;
  const QMatrix aq = op_Aqhat(standard_params(q, 3)), rm = op_Rhat_minus(q, 3);
  for (int k = 2; k <= 3; ++k) {
    CHECK(left_equivalent(require_generic(aq, 3, k, Kind::A).op, require_generic(rm, 3, k, Kind::A).op));
    CHECK(right_equivalent(require_generic(aq, 3, k, Kind::S).op, require_generic(rm, 3, k, Kind::S).op));
  }
}

TEST_CASE("parsing kinds") {
  CHECK(parse_kind("S") == Kind::S);
  CHECK(kind_name(Kind::A) == "A");
  CHECK_THROWS_AS(parse_kind("T"), InputError);
  CHECK(parse_brauer_family("sp") == BrauerFamily::sp);
  CHECK_THROWS_AS(parse_brauer_family("gl"), InputError);
}
