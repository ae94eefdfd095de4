#include "doctest.h"
#include "manin/idempotent.hpp"
#include "manin/manin.hpp"
#include "manin/minors.hpp"
#include "manin/pairing.hpp"
#include "manin/tensor.hpp"
#include "test_util.hpp"

using namespace manin;
using test::frac;

namespace {

struct Sym2 {
  Alphabet alpha;
  NCMatrix m;
  NCPoly a, b, c, d;
};

Sym2 abcd() {
  Sym2 s;
  s.m = NCMatrix(2, 2);
  s.a = parse_ncpoly("a", s.alpha);
  s.b = parse_ncpoly("b", s.alpha);
  s.c = parse_ncpoly("c", s.alpha);
  s.d = parse_ncpoly("d", s.alpha);
  s.m(0, 0) = s.a;
  s.m(0, 1) = s.b;
  s.m(1, 0) = s.c;
  s.m(1, 1) = s.d;
  return s;
}

QMatrix params(int k, int offset) {
  QMatrix q = QMatrix::identity(k);
  const Q vals[] = {2, 3, frac(1, 2), frac(1, 3), 5};
  int t = offset;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      q(i, j) = vals[t++ % 5];
      q(j, i) = 1 / q(i, j);
    }
  return q;
}

}  // namespace

TEST_CASE("minor operator examples") {
  const Sym2 s = abcd();
  CHECK(minor_operator(QMatrix::identity(2), QMatrix::identity(2), s.m, 1) == s.m);
  const NCMatrix am = minor_operator(op_A(2), QMatrix::identity(4), s.m, 2);
  const std::size_t i12 = encode_index({0, 1}, 2), i11 = encode_index({0, 0}, 2);
  CHECK(am(i12, i12) == frac(1, 2) * (s.a * s.d - s.c * s.b));
  const NCMatrix sm = minor_operator(QMatrix::identity(4), op_S(2), s.m, 2);
  CHECK(sm(i11, i12) == frac(1, 2) * (s.a * s.b + s.b * s.a));
}

TEST_CASE("q-determinant examples") {
  const Sym2 s = abcd();
  const Q q = 2;
  CHECK(det_qhat(standard_params(q, 2), s.m) == s.a * s.d - (1 / q) * (s.c * s.b));
  CHECK(det_qhat(standard_params(q, 3), NCMatrix::scalar(QMatrix::identity(3))) == NCPoly::constant(1));
  CHECK(det_qhat(standard_params(Q(1), 2), s.m) == s.a * s.d - s.c * s.b);
}

TEST_CASE("q-permanent examples") {
  const Sym2 s = abcd();
  const Q p = 3;
  CHECK(perm_qhat(standard_params(p, 2), s.m) == s.a * s.d + p * (s.b * s.c));
  CHECK(perm_qhat(standard_params(Q(1), 2), s.m) == s.a * s.d + s.b * s.c);
  NCMatrix one(1, 1);
  one(0, 0) = s.a;
  CHECK(perm_qhat(QMatrix::identity(1), one) == s.a);
}

TEST_CASE("verify_identity examples") {
  const Q q = 2, p = 3;
  const UniversalMatrix u = universal_matrix({op_Aqhat(standard_params(q, 2)), op_Aqhat(standard_params(p, 2)), 2, 2});
  const IdealSlice slice = build_slice(u.relations, u.g, 2);
  const NCPoly det = det_qhat(standard_params(q, 2), u.m);
  CHECK(verify_identity(det, det, slice));
  const NCPoly swapped = det_qhat(standard_params(q, 2), permute_matrix(u.m, perm_identity(2), Perm{2, 1}));
  CHECK(verify_identity(swapped, (-1 / p) * det, slice));
  CHECK_FALSE(verify_identity(swapped, (-1 / q) * det, slice));
  const UniversalMatrix v = universal_matrix({op_Aqhat(standard_params(q, 2)), op_Aqhat(standard_params(q, 2)), 2, 2});
  const IdealSlice vs = build_slice(v.relations, v.g, 2);
  const NCPoly a = v.m(0, 0), b = v.m(0, 1), c = v.m(1, 0), d = v.m(1, 1);
  CHECK(verify_identity(det_qhat(standard_params(q, 2), v.m), d * a - q * (b * c), vs));
  CHECK_FALSE(verify_identity(det_qhat(standard_params(q, 2), v.m), d * a - (1 / q) * (b * c), vs));
}

TEST_CASE("row law holds in the free algebra") {
  for (int k = 1; k <= 3; ++k)
    for (int off = 0; off < 2; ++off) CHECK(check_row_law(params(k, off)).pass);
}

TEST_CASE("column law and repeated columns modulo the Manin ideal") {
  for (int k = 2; k <= 3; ++k) CHECK(check_column_law(params(k, 0), params(k, 2)).pass);
  CHECK(check_repeated_column(params(3, 0), params(3, 1)).pass);
  CHECK(check_repeated_column(params(2, 0), params(2, 3)).pass);
}

TEST_CASE("Cauchy-Binet") {
  CHECK(check_cauchy_binet_det(Q(2), Q(3), Q(5)).pass);
  CHECK(check_cauchy_binet_perm(Q(2), Q(3), Q(5)).pass);
}

TEST_CASE("swap laws, absorption and concatenation") {
  for (const auto& c : check_swap_laws_2x2(Q(2), Q(3))) CHECK_MESSAGE(c.pass, c.id);
  CHECK(check_absorption(Q(2), Q(3)).pass);
  CHECK(check_concatenation(Q(2), Q(3)).pass);
}

TEST_CASE("Hecke and minor transport") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) CHECK(check_hecke_transport(Q(2), n, k).pass);
    CHECK(check_minor_transport(Q(2), Q(3), n).pass);
  }
  for (int k = 1; k <= 5; ++k) CHECK(check_inversion_generating_function(Q(2), k).pass);
}

TEST_CASE("minors of the free matrix are not Manin identities") {
  const Sym2 s = abcd();
  const IdealSlice none = build_slice(std::vector<SparseVec>{}, 4, 2);
  CHECK_FALSE(verify_identity(det_qhat(standard_params(Q(1), 2), s.m), s.d * s.a - s.b * s.c, none));
}
