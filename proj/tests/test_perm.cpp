#include "doctest.h"
#include "manin/idempotent.hpp"
#include "manin/pairing.hpp"
#include "manin/perm.hpp"
#include "test_util.hpp"

using namespace manin;
using test::frac;

TEST_CASE("inversion counts") {
  CHECK(inv(perm_identity(3)) == 0);
  CHECK(inv(Perm{2, 1, 3}) == 1);
  CHECK(inv(Perm{3, 2, 1}) == 3);
  CHECK(perm_sign(Perm{3, 2, 1}) == -1);
  CHECK(perm_sign(Perm{2, 3, 1}) == 1);
}

TEST_CASE("inv is invariant under inversion") {
  for (int k = 1; k <= 5; ++k)
    for (const Perm& p : all_perms(k)) CHECK(inv(p) == inv(perm_inverse(p)));
}

TEST_CASE("group operations") {
  CHECK(all_perms(4).size() == 24);
  const Perm a{2, 3, 1}, b{2, 1, 3};
  CHECK(perm_compose(a, b) == Perm{3, 2, 1});
  CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
  CHECK(is_perm(a));
  CHECK_FALSE(is_perm(Perm{1, 1, 2}));
  CHECK_FALSE(is_perm(Perm{0, 1}));
  CHECK(simple_reflection(2, 3) == Perm{1, 3, 2});
  CHECK(word_product({1, 2}, 3) == Perm{2, 3, 1});
}

TEST_CASE("inversion sets from reduced words") {
  CHECK(inversion_set_from_reduced_word({}, 3).empty());
  CHECK(inversion_set_from_reduced_word({1}, 2) == InversionSet{{1, 2}});
  CHECK(inversion_set_from_reduced_word({1, 2}, 3) == InversionSet{{1, 3}, {2, 3}});
}

TEST_CASE("reduced words agree with brute force on S_4") {
  for (const Perm& p : all_perms(4)) {
    const auto w = reduced_word(p);
    CHECK(static_cast<int>(w.size()) == inv(p));
    CHECK(word_product(w, 4) == p);
    CHECK(inversion_set_from_reduced_word(w, 4) == inversion_set(p));
    CHECK(inverse_inversion_set_from_reduced_word(w, 4) == inversion_set(perm_inverse(p)));
  }
}

TEST_CASE("non-reduced words are rejected") {
  CHECK_THROWS_AS(inversion_set_from_reduced_word({1, 1}, 2), ReducedWordError);
  CHECK_THROWS_AS(inversion_set_from_reduced_word({1, 2, 1, 2}, 3), ReducedWordError);
  CHECK_THROWS_AS(inversion_set_from_reduced_word({3}, 3), InputError);
}

TEST_CASE("mu examples") {
  const QMatrix q2 = standard_params(Q(2), 2), q3 = standard_params(Q(2), 3);
  CHECK(mu(q2, perm_identity(2)) == 1);
  CHECK(mu(q2, Perm{2, 1}) == 2);
  CHECK(mu(q3, Perm{3, 2, 1}) == 8);
  const QMatrix r = restrict_params(q3, {3, 1});
  CHECK(r(0, 1) == frac(1, 2));
  CHECK(r(1, 0) == 2);
}

TEST_CASE("stabilizer orders") {
  CHECK(stabilizer_order({1, 2, 3}) == 1);
  CHECK(stabilizer_order({1, 1}) == 2);
  CHECK(stabilizer_order({1, 1, 2, 2, 2}) == 12);
}

TEST_CASE("inversion generating function") {
  const Q q = 2;
  for (int k = 1; k <= 5; ++k) {
    Q sum = 0;
    for (const Perm& p : all_perms(k)) sum += qpow(q, -2 * inv(p));
    CHECK(sum == qpow(q, -k * (k - 1) / 2) * q_factorial(q, k));
  }
  CHECK(q_number(Q(2), 2) == frac(5, 2));
  CHECK(q_factorial(Q(2), 3) == frac(5, 2) * frac(21, 4));
}
