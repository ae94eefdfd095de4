#include "doctest.h"
#include "manin/idempotent.hpp"
#include "manin/ncpoly.hpp"
#include "manin/perm.hpp"
#include "manin/tensor.hpp"
#include "test_util.hpp"

using namespace manin;

TEST_CASE("multi-index layout") {
  CHECK(ipow(3, 2) == 9);
  CHECK(decode_index(5, 2, 3) == std::vector<int>{1, 0, 1});
  CHECK(encode_index({1, 0, 1}, 2) == 5);
  const auto all = all_multi_indices(2, 2);
  REQUIRE(all.size() == 4);
  CHECK(all[1] == std::vector<int>{0, 1});
  CHECK(swap_operator(2) == op_P(2));
}

TEST_CASE("embed examples") {
  CHECK(embed(QMatrix::identity(4), 2, 2, 3, 2) == QMatrix::identity(8));
  const QMatrix p12 = embed(op_P(2), 2, 2, 3, 1);
  std::vector<Q> v(8);
  v[encode_index({1, 0, 0}, 2)] = 1;
  QMatrix col(8, 1);
  for (int i = 0; i < 8; ++i) col(i, 0) = v[i];
  const QMatrix out = p12 * col;
  for (int i = 0; i < 8; ++i) CHECK(out(i, 0) == (i == static_cast<int>(encode_index({0, 1, 0}, 2)) ? 1 : 0));
  const QMatrix a23 = embed(op_A(2), 2, 2, 3, 2);
  CHECK(a23 * a23 == a23);
}

TEST_CASE("embed respects composition") {
  const QMatrix x = op_Rhat_minus(Q(2), 2), y = op_Aqhat(standard_params(Q(3), 2));
  for (int a = 1; a <= 2; ++a) CHECK(embed(x * y, 2, 2, 3, a) == embed(x, 2, 2, 3, a) * embed(y, 2, 2, 3, a));
  CHECK(embed_legs(op_P(2), 2, 3, 1, 3) == embed(op_P(2), 2, 2, 3, 2) * embed(op_P(2), 2, 2, 3, 1) *
                                               embed(op_P(2), 2, 2, 3, 2));
}

TEST_CASE("perm_rep examples") {
  CHECK(perm_rep(perm_identity(3), 2, 1) == QMatrix::identity(8));
  CHECK(perm_rep(Perm{2, 1}, 2, 1) == op_P(2));
  const QMatrix a = perm_rep(word_product({1, 2}, 3), 2, -1), b = perm_rep(word_product({2, 1}, 3), 2, -1);
  CHECK(a * b == QMatrix::identity(8));
}

TEST_CASE("perm_rep is a homomorphism") {
  for (int n = 2; n <= 3; ++n)
    for (int sign : {1, -1})
      for (const Perm& s : all_perms(3))
        for (const Perm& t : all_perms(3))
          CHECK(perm_rep(perm_compose(s, t), n, sign) == perm_rep(s, n, sign) * perm_rep(t, n, sign));
}

TEST_CASE("braid relation for the swap") {
  for (int n = 2; n <= 3; ++n) {
    const QMatrix p12 = embed(op_P(n), n, 2, 3, 1), p23 = embed(op_P(n), n, 2, 3, 2);
    CHECK(p23 * p12 * p23 == p12 * p23 * p12);
  }
}

TEST_CASE("tensor power of a permutation") {
  const QMatrix t = tensor_power_of_perm(Perm{2, 1}, 2);
  CHECK(t * t == QMatrix::identity(4));
  CHECK(t(encode_index({1, 0}, 2), encode_index({0, 1}, 2)) == 1);
}

TEST_CASE("compose_chain examples") {
  const Alphabet alpha = Alphabet::matrix("M", 2, 2);
  const NCMatrix m = NCMatrix::generic(alpha, "M", 2, 2);
  CHECK(compose_chain(m, 1) == m);
  CHECK(compose_chain(NCMatrix::scalar(QMatrix::identity(2)), 3) == NCMatrix::scalar(QMatrix::identity(8)));
  const NCMatrix c = compose_chain(m, 2);
  const std::size_t row = encode_index({0, 1}, 2), col = encode_index({0, 1}, 2);
  CHECK(c(row, col) == NCPoly::word({0, 3}));
}
