#include "doctest.h"
#include "manin/idempotent.hpp"
#include "manin/matrix.hpp"
#include "manin/tensor.hpp"
#include "test_util.hpp"

using namespace manin;
using test::frac;
using test::rows;

TEST_CASE("catalog examples") {
  const QMatrix a2 = op_A(2);
  CHECK(rank(a2) == 1);
  CHECK(a2.trace() == 1);
  const Q q = 2;
  const QMatrix expect = (-Q(2) / (q + 1 / q)) * (op_P(2) * op_Aqhat(standard_params(q, 2)));
  CHECK(op_Rhat_minus(q, 2) == expect);
  CHECK(op_Btilde(2).is_zero());
}

TEST_CASE("is_idempotent examples") {
  CHECK(is_idempotent(op_A(3)));
  CHECK_FALSE(is_idempotent(op_P(3)));
  CHECK(op_P(3) * op_P(3) == QMatrix::identity(9));
  CHECK(is_idempotent(op_A_fourparam(Q(1), Q(1), Q(1), Q(1))));
}

TEST_CASE("make_idempotent examples") {
  CHECK(make_idempotent(QMatrix(2, 2)).is_zero());
  CHECK(make_idempotent(rows({{0, 1}, {0, 0}})) == rows({{0, 0}, {0, 1}}));
  const QMatrix e = make_idempotent(op_P(2) - QMatrix::identity(4));
  CHECK(is_idempotent(e));
  CHECK(subspace_equal(row_space(e), row_space(op_P(2) - QMatrix::identity(4))));
  CHECK(left_equivalent(e, op_A(2)));
}

TEST_CASE("equivalence examples") {
  const Q q = 2;
  CHECK(left_equivalent(op_Aqhat(standard_params(q, 2)), op_Rhat_minus(q, 2)));
  CHECK(right_equivalent(op_Rhat_minus(q, 2), op_Aqhat(standard_params(1 / q, 2))));
  CHECK_FALSE(left_equivalent(op_A(2), op_S(2)));
  CHECK_FALSE(left_equivalent(op_Aqhat(standard_params(q, 2)), op_Aqhat(standard_params(Q(3), 2))));
}

TEST_CASE("every catalog idempotent has rank equal to trace") {
  const Q q = 2;
  const QMatrix qh = rows({{1, 2, 3}, {0, 1, 0}, {0, 0, 1}});
  QMatrix qhat = QMatrix::identity(3);
  qhat(0, 1) = 2;
  qhat(1, 0) = frac(1, 2);
  qhat(0, 2) = frac(1, 3);
  qhat(2, 0) = 3;
  qhat(1, 2) = 3;
  qhat(2, 1) = frac(1, 3);
  REQUIRE(is_parameter_matrix(qhat));
  CHECK_FALSE(is_parameter_matrix(qh));
  const std::vector<QMatrix> ops = {op_A(3),          op_S(3),          op_Aqhat(qhat),       op_Atilde_qhat(qhat),
                                    op_Rhat_plus(q, 3), op_Rhat_minus(q, 3), op_B(3),           op_Btilde(4),
                                    frac(1, 3) * op_Q(3), op_A_fourparam(Q(2), Q(3), Q(5), Q(7))};
  for (const auto& e : ops) {
    CHECK(is_idempotent(e));
    CHECK(Q(static_cast<long>(rank(e))) == e.trace());
  }
}

TEST_CASE("Hecke structure") {
  const Q q = 2;
  for (int n = 2; n <= 3; ++n) {
    const QMatrix one = QMatrix::identity(n * n);
    CHECK(op_A(n) + op_S(n) == one);
    CHECK(op_Rhat_plus(q, n) + op_Rhat_minus(q, n) == one);
    CHECK((op_Rhat_plus(q, n) * op_Rhat_minus(q, n)).is_zero());
    const QMatrix r = op_Rhat(q, n);
    CHECK(((r - (1 / q) * one) * (r + q * one)).is_zero());
    const QMatrix r12 = embed(r, n, 2, 3, 1), r23 = embed(r, n, 2, 3, 2);
    CHECK(r12 * r23 * r12 == r23 * r12 * r23);
    const QMatrix aq = op_Aqhat(standard_params(q, n)), aqi = op_Aqhat(standard_params(1 / q, n));
    CHECK(aq * aqi == (-(q + 1 / q) / 2) * (aq * op_P(n)));
  }
}

TEST_CASE("perturbed Hecke relation fails") {
  const Q q = 2;
  const QMatrix r = op_Rhat(q, 2), one = QMatrix::identity(4);
  CHECK_FALSE(((r - q * one) * (r + q * one)).is_zero());
}

TEST_CASE("parameter conjugation") {
  for (int n = 2; n <= 3; ++n) {
    QMatrix qhat = QMatrix::identity(n);
    const Q vals[] = {2, 3, frac(1, 2)};
    int t = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        qhat(i, j) = vals[t++ % 3];
        qhat(j, i) = 1 / qhat(i, j);
      }
    for (const Perm& s : all_perms(n)) {
      const QMatrix g = tensor_power_of_perm(s, 1);
      const QMatrix gi = tensor_power_of_perm(perm_inverse(s), 1);
      CHECK(kron(g, g) * op_Pqhat(qhat) * kron(gi, gi) == op_Pqhat(conjugate_params(qhat, s)));
    }
  }
}

TEST_CASE("spec validation") {
  IdempotentSpec s;
  s.family = "Aq";
  s.n = 2;
  s.q = 0;
  CHECK_THROWS_AS(validate(s), InputError);
  s.q = 2;
  CHECK_NOTHROW(validate(s));
  CHECK(build(s) == op_Aqhat(standard_params(Q(2), 2)));
  s.family = "RhatMinus";
  s.q = 1;
  CHECK_THROWS_AS(validate(s), InputError);
  s.family = "Nope";
  CHECK_THROWS_AS(validate(s), InputError);
  s.family = "Btilde_n";
  s.n = 3;
  CHECK_THROWS_AS(validate(s), InputError);
}
