#include "doctest.h"
#include "manin/ncpoly.hpp"
#include "test_util.hpp"

using namespace manin;
using test::frac;

TEST_CASE("multiplication examples") {
  Alphabet alpha;
  const NCPoly a = parse_ncpoly("a", alpha), b = parse_ncpoly("b", alpha);
  CHECK(NCPoly::constant(1) * (a + b) == a + b);
  CHECK(parse_ncpoly("(a+b)*(a-b)", alpha) == parse_ncpoly("a*a - a*b + b*a - b*b", alpha));
  CHECK(a * b != b * a);
  const Alphabet m = Alphabet::matrix("M", 2, 2);
  CHECK(NCPoly::gen(0) * NCPoly::gen(3) == NCPoly::word({0, 3}, Q(1)));
}

TEST_CASE("associativity and distributivity") {
  Alphabet alpha;
  const std::vector<NCPoly> ps = {parse_ncpoly("a + 2*b*c - 1/3", alpha), parse_ncpoly("c*a - a*c + 5*b", alpha),
                                  parse_ncpoly("a*b*c - 7*c*c*c + b", alpha), parse_ncpoly("3 - a*a", alpha)};
  for (const auto& x : ps)
    for (const auto& y : ps)
      for (const auto& z : ps) {
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
      }
}

TEST_CASE("degree component vectors") {
  const Alphabet alpha = Alphabet::matrix("M", 2, 2);
  CHECK(degree_component_vector(NCPoly(), 2, 4).empty());
  const SparseVec unit = degree_component_vector(NCPoly::word({1, 2}), 2, 4);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].first == word_index({1, 2}, 4));
  CHECK(unit[0].second == 1);
  const NCPoly p = Q(2) * NCPoly::word({0, 1}) - Q(3) * NCPoly::word({1, 0});
  const SparseVec v = degree_component_vector(p, 2, 4);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == std::make_pair(std::uint32_t(1), Q(2)));
  CHECK(v[1] == std::make_pair(std::uint32_t(4), Q(-3)));
  CHECK(poly_from_vector(v, 2, 4) == p);
  CHECK_THROWS_AS(degree_component_vector(NCPoly::gen(0) + NCPoly::word({0, 1}), 2, 4), InputError);
  CHECK(word_from_index(word_index({3, 1, 2}, 4), 4, 3) == Word{3, 1, 2});
}

TEST_CASE("degree component is linear") {
  const NCPoly x = NCPoly::word({0, 1}) + Q(2) * NCPoly::word({2, 2});
  const NCPoly y = Q(frac(1, 2)) * NCPoly::word({1, 0}) - NCPoly::word({2, 2});
  const auto dx = degree_component_dense(x, 2, 3), dy = degree_component_dense(y, 2, 3),
             dxy = degree_component_dense(Q(3) * x + y, 2, 3);
  for (std::size_t i = 0; i < dx.size(); ++i) CHECK(dxy[i] == 3 * dx[i] + dy[i]);
}

TEST_CASE("homogeneous degree") {
  Alphabet alpha;
  CHECK(parse_ncpoly("a*b - b*a", alpha).homogeneous_degree() == 2);
  CHECK(parse_ncpoly("a*b - b", alpha).homogeneous_degree() == -1);
  CHECK(NCPoly().homogeneous_degree() == -1);
  CHECK(NCPoly::constant(3).homogeneous_degree() == 0);
}

TEST_CASE("printing round trips through the parser") {
  Alphabet alpha;
  const NCPoly p = parse_ncpoly("M[1,2]*M[2,1] - 1/2*M[2,1]*M[1,2] + 3", alpha);
  const std::string s = to_string(p, alpha);
  CHECK(s == "3 + M[1,2]*M[2,1] - 1/2*M[2,1]*M[1,2]");
  CHECK(parse_ncpoly(s, alpha, false) == p);
  CHECK(to_string(NCPoly(), alpha) == "0");
}

TEST_CASE("parse errors report the position") {
  Alphabet alpha;
  try {
    parse_ncpoly("a + * b", alpha);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()) == "unexpected character at position 5 in 'a + * b'");
  }
  CHECK_THROWS_WITH_AS(parse_ncpoly("(a + b", alpha), "expected ')' at position 7 in '(a + b'", InputError);
  CHECK_THROWS_WITH_AS(parse_ncpoly("M[1,", alpha), "expected integer at position 5 in 'M[1,'", InputError);
  CHECK_THROWS_AS(parse_ncpoly("zz", alpha, false), InputError);
  CHECK_THROWS_AS(parse_ncpoly("1/0", alpha), InputError);
}

TEST_CASE("matrix helpers") {
  const Alphabet alpha = Alphabet::matrix("M", 3, 3);
  const NCMatrix m = NCMatrix::generic(alpha, "M", 3, 3);
  const NCMatrix s = m.submatrix({1, 3}, {2, 3});
  CHECK(s(0, 0) == NCPoly::gen(1));
  CHECK(s(1, 1) == NCPoly::gen(8));
  CHECK(remap(NCPoly::word({0, 1}), {5, 6}) == NCPoly::word({5, 6}));
  CHECK((NCMatrix::scalar(QMatrix::identity(3)) * m) == m);
  CHECK((m - m).is_zero());
}
