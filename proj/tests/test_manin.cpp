#include "doctest.h"
#include "manin/idempotent.hpp"
#include "manin/ideal.hpp"
#include "manin/manin.hpp"
#include "manin/minors.hpp"
#include "manin/quadratic.hpp"
#include "test_util.hpp"

using namespace manin;
using test::frac;

namespace {

std::vector<SparseVec> commutator_relations(std::size_t g) {
  std::vector<NCPoly> out;
  for (std::uint16_t a = 0; a < g; ++a)
    for (std::uint16_t b = a + 1; b < g; ++b) out.push_back(NCPoly::word({a, b}) - NCPoly::word({b, a}));
  return relation_vectors(out, g);
}

QMatrix params3() {
  QMatrix q = QMatrix::identity(3);
  q(0, 1) = 2;
  q(0, 2) = 3;
  q(1, 2) = frac(1, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) q(i, j) = 1 / q(j, i);
  return q;
}

// M (ids 0..3) and N (ids 4..7) universal for their pairs, with [M^i_j, N^k_l] = 0.
struct ProductSetup {
  NCMatrix m, n;
  std::vector<SparseVec> relations;
};

ProductSetup product_setup(const ManinPair& ab, const ManinPair& bc) {
  ProductSetup s;
  const Alphabet alpha = Alphabet::matrix("M", 2, 2);
  s.m = NCMatrix::generic(alpha, "M", 2, 2);
  s.n = NCMatrix(2, 2);
  for (std::uint16_t i = 0; i < 4; ++i) s.n(i / 2, i % 2) = NCPoly::gen(static_cast<std::uint16_t>(4 + i));
  std::vector<NCPoly> rels;
  for (const auto& p : universal_relation_polys(ab)) rels.push_back(p);
  for (const auto& p : universal_relation_polys(bc)) rels.push_back(remap(p, {4, 5, 6, 7}));
  for (std::uint16_t a = 0; a < 4; ++a)
    for (std::uint16_t b = 4; b < 8; ++b) rels.push_back(NCPoly::word({a, b}) - NCPoly::word({b, a}));
  s.relations = relation_vectors(rels, 8);
  return s;
}

}  // namespace

TEST_CASE("universal relation examples") {
  CHECK(universal_relations({QMatrix(4, 4), op_A(2), 2, 2}).dim() == 0);
  const Subspace aa = universal_relations({op_A(2), op_A(2), 2, 2});
  CHECK(aa.dim() == 3);
  Alphabet alpha = Alphabet::matrix("M", 2, 2);
  auto has = [&](const Subspace& s, const std::string& text) {
    return s.contains(degree_component_dense(parse_ncpoly(text, alpha, false), 2, 4));
  };
  CHECK(has(aa, "M[1,1]*M[2,1] - M[2,1]*M[1,1]"));
  CHECK(has(aa, "M[1,2]*M[2,2] - M[2,2]*M[1,2]"));
  CHECK(has(aa, "M[1,1]*M[2,2] - M[2,1]*M[1,2] + M[1,2]*M[2,1] - M[2,2]*M[1,1]"));
  CHECK_FALSE(has(aa, "M[1,1]*M[2,2] - M[2,1]*M[1,2]"));
  const Subspace a0 = universal_relations({op_A(2), QMatrix(4, 4), 2, 2});
  CHECK(a0.dim() == 4);
  CHECK(has(a0, "M[1,1]*M[2,2] - M[2,1]*M[1,2]"));
  CHECK(has(a0, "M[1,2]*M[2,1] - M[2,2]*M[1,1]"));
  CHECK(has(a0, "M[1,1]*M[2,1] - M[2,1]*M[1,1]"));
  CHECK(has(a0, "M[1,2]*M[2,2] - M[2,2]*M[1,2]"));
  CHECK_THROWS_AS(universal_relations({op_A(2), op_A(3), 2, 2}), InputError);
}

TEST_CASE("is_manin examples") {
  const ManinPair aa{op_A(2), op_A(2), 2, 2};
  const Alphabet alpha = Alphabet::matrix("M", 2, 2);
  const NCMatrix m = NCMatrix::generic(alpha, "M", 2, 2);
  CHECK(is_manin(aa, m, commutator_relations(4), 4));
  CHECK_FALSE(is_manin(aa, m, {}, 4));
  const Q q = 2;
  const QMatrix aq = op_Aqhat(standard_params(q, 2));
  NCMatrix diag(2, 2);
  diag(0, 0) = NCPoly::gen(0);
  diag(1, 1) = NCPoly::gen(1);
  const Subspace xq = relation_space({aq, 2, Variant::X});
  CHECK(is_manin({aq, op_A(2), 2, 2}, diag, xq));
  CHECK_FALSE(is_manin({aq, op_A(2), 2, 2}, diag, relation_space({op_A(2), 2, Variant::X})));
}

TEST_CASE("universal matrices satisfy their own relations") {
  const Q q = 2;
  const std::vector<ManinPair> pairs = {{op_A(2), op_A(2), 2, 2},
                                        {op_Aqhat(standard_params(q, 2)), op_Rhat_minus(Q(3), 2), 2, 2},
                                        {op_Aqhat(params3()), op_A(2), 3, 2},
                                        {op_B(3), op_A(3), 3, 3},
                                        {op_Btilde(4), op_A(2), 4, 2}};
  for (const auto& p : pairs) {
    const UniversalMatrix u = universal_matrix(p);
    CHECK(is_manin(p, u.m, u.relations, u.g));
  }
}

TEST_CASE("left-equivalent idempotents give the same Manin relations") {
  const Q q = 2;
  const QMatrix aq = op_Aqhat(standard_params(q, 2)), rm = op_Rhat_minus(q, 2);
  REQUIRE(left_equivalent(aq, rm));
  for (const QMatrix& b : {op_A(2), op_Aqhat(standard_params(Q(3), 2))}) {
    CHECK(subspace_equal(universal_relations({aq, b, 2, 2}), universal_relations({rm, b, 2, 2})));
    CHECK(subspace_equal(universal_relations({b, aq, 2, 2}), universal_relations({b, rm, 2, 2})));
  }
  const UniversalMatrix u = universal_matrix({aq, op_A(2), 2, 2});
  CHECK(is_manin({rm, op_A(2), 2, 2}, u.m, u.relations, u.g));
}

TEST_CASE("products of Manin matrices") {
  const ManinPair aa{op_A(2), op_A(2), 2, 2};
  const ProductSetup s = product_setup(aa, aa);
  const ProductCheck r = product_is_manin(aa, aa, s.m, s.n, s.relations, 8);
  CHECK(r.commute);
  CHECK(r.manin);
  const Q q = 2;
  const QMatrix aq = op_Aqhat(standard_params(q, 2));
  const ManinPair qq{aq, aq, 2, 2};
  const ProductSetup t = product_setup(qq, qq);
  CHECK(product_is_manin(qq, qq, t.m, t.n, t.relations, 8).manin);
  const ManinPair qa{aq, op_A(2), 2, 2};
  const ProductSetup w = product_setup(qa, aa);
  CHECK(product_is_manin(qa, aa, w.m, w.n, w.relations, 8).manin);
  std::vector<SparseVec> no_cross(s.relations.begin(), s.relations.begin() + 6);
  CHECK_FALSE(product_is_manin(aa, aa, s.m, s.n, no_cross, 8).commute);
}

TEST_CASE("product with the identity reduces to the Manin check") {
  const ManinPair aa{op_A(2), op_A(2), 2, 2};
  const Alphabet alpha = Alphabet::matrix("M", 2, 2);
  const NCMatrix m = NCMatrix::generic(alpha, "M", 2, 2), id = NCMatrix::scalar(QMatrix::identity(2));
  const auto rel = commutator_relations(4);
  CHECK(product_is_manin(aa, aa, m, id, rel, 4).manin == is_manin(aa, m, rel, 4));
  CHECK(product_is_manin(aa, aa, m, id, {}, 4).manin == is_manin(aa, m, {}, 4));
}

TEST_CASE("relation space equalities") {
  CHECK(rll_relations_equal_manin(2, 2, Q(2)));
  CHECK(rll_relations_equal_manin(3, 3, Q(2)));
  CHECK_THROWS_AS(rll_relations_equal_manin(2, 2, Q(1)), InputError);
  CHECK(manin_and_transpose_span_commutators(2, 2));
  CHECK(manin_and_transpose_span_commutators(3, 3));
  CHECK_FALSE(manin_span_equals_commutators(2, 2));
  CHECK(commutator_span(2, 2).dim() == 6);
}

TEST_CASE("transport by permutations") {
  const Q q = 2;
  const ManinPair p{op_Aqhat(standard_params(q, 2)), op_A(2), 2, 2};
  const ManinPair same = transport(p, perm_identity(2), perm_identity(2));
  CHECK(same.a == p.a);
  CHECK(same.b == p.b);
  for (int n = 2; n <= 3; ++n)
    for (const Perm& s : all_perms(n)) CHECK(conjugate_op(op_A(n), s) == op_A(n));
  const ManinPair sw = transport(p, perm_identity(2), Perm{2, 1});
  CHECK(sw.b == op_A(2));
  const ManinPair sa = transport(p, Perm{2, 1}, perm_identity(2));
  CHECK(sa.a == op_Aqhat(conjugate_params(standard_params(q, 2), Perm{2, 1})));
  CHECK(sa.a == op_Aqhat(standard_params(1 / q, 2)));
  CHECK_THROWS_AS(transport(p, Perm{1, 2, 3}, perm_identity(2)), InputError);
}

TEST_CASE("permuted universal matrices are Manin for the transported pair") {
  const QMatrix qh = params3();
  const ManinPair p{op_Aqhat(qh), op_Aqhat(qh), 3, 3};
  const UniversalMatrix u = universal_matrix(p);
  for (const Perm& s : all_perms(3)) {
    const Perm t{2, 3, 1};
    CHECK(is_manin(transport(p, s, t), permute_matrix(u.m, s, t), u.relations, u.g));
  }
}

TEST_CASE("submatrices of multiparametric Manin matrices") {
  const QMatrix qh = params3();
  QMatrix ph = params3().transpose();
  const UniversalMatrix u = universal_matrix({op_Aqhat(qh), op_Aqhat(ph), 3, 3});
  const std::vector<std::vector<int>> pairs = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& I : pairs)
    for (const auto& J : pairs) {
      const ManinPair sub{op_Aqhat(restrict_params(qh, I)), op_Aqhat(restrict_params(ph, J)), 2, 2};
      CHECK(is_manin(sub, u.m.submatrix(I, J), u.relations, u.g));
    }
  const ManinPair wrong{op_Aqhat(restrict_params(ph, {1, 2})), op_Aqhat(restrict_params(ph, {1, 2})), 2, 2};
  CHECK_FALSE(is_manin(wrong, u.m.submatrix({1, 2}, {1, 2}), u.relations, u.g));
}
