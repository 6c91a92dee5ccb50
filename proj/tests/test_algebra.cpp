#include <doctest.h>

#include <algorithm>

#include "dgalab/algebra.hpp"
#include "dgalab/errors.hpp"
#include "dgalab/expression.hpp"
#include "dgalab/io.hpp"
#include "oracles.hpp"

using namespace dgalab;

namespace {

Algebra a1_algebra() { return load_dga(oracle::fixture("a1.dga")).dga.algebra(); }

Element parse(const Algebra& a, const std::string& s) { return parse_expression(a, s); }

}  // namespace

TEST_CASE("products of generators follow the Koszul rule") {
  Algebra a = a1_algebra();
  CHECK(a.multiply(a.gen("y1"), a.gen("y1")).is_zero());
  CHECK(a.multiply(a.gen("x1"), a.gen("x2")) == parse(a, "x1 x2"));
  CHECK(a.multiply(a.gen("x2"), a.gen("x1")) == parse(a, "x1 x2"));
  CHECK(a.multiply(a.gen("y2"), a.gen("y1")) == parse(a, "-y1 y2"));
  CHECK(a.multiply(a.gen("y1"), a.gen("y2")) == parse(a, "y1 y2"));
  CHECK(a.multiply(a.gen("y3"), parse(a, "y1 y2")) == parse(a, "y1 y2 y3"));
  CHECK(a.multiply(parse(a, "y2 y3"), a.gen("y1")) == parse(a, "y1 y2 y3"));
  CHECK(a.multiply(a.gen("z"), a.gen("y1")) == parse(a, "-y1 z"));
}

TEST_CASE("the unit and powers") {
  Algebra a = a1_algebra();
  Element x = parse(a, "x1 + 2 x2 y1 y2 y3");
  CHECK(a.multiply(a.one(), x) == x);
  CHECK(a.multiply(x, a.one()) == x);
  CHECK(a.power(a.gen("x1"), 3) == parse(a, "x1^3"));
  CHECK(a.power(a.gen("y1"), 2).is_zero());
  CHECK(a.power(x, 0) == a.one());
}

TEST_CASE("basis_of_degree on small degrees") {
  Algebra a = a1_algebra();
  auto b4 = a.basis_of_degree(4);
  REQUIRE(b4.size() == 2);
  CHECK(a.format(b4[0]) == "x1^2");
  CHECK(a.format(b4[1]) == "x2");
  CHECK(a.basis_of_degree(3).empty());
  CHECK(a.basis_of_degree(0).size() == 1);
  CHECK(a.basis_of_degree(-1).empty());
}

TEST_CASE("basis_of_degree agrees with the brute-force enumerator") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"}) {
    Algebra a = load_dga(oracle::fixture(f)).dga.algebra();
    for (int n = 0; n <= 40; ++n) {
      auto got = a.basis_of_degree(n);
      auto want = oracle::exponent_vectors(a.generators(), n);
      std::vector<std::vector<std::uint16_t>> got_e;
      for (const auto& m : got) {
        CHECK(m.degree() == n);
        got_e.push_back(m.exponents());
      }
      CHECK(std::is_sorted(got.begin(), got.end(), MonomialOrder{}));
      auto sorted = got_e;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      std::sort(want.begin(), want.end());
      CHECK_MESSAGE(sorted == want, f << " degree " << n);
    }
  }
}

TEST_CASE("basis of the middle degree of A1 matches the enumerator") {
  Algebra a = a1_algebra();
  CHECK(a.basis_of_degree(32).size() == oracle::exponent_vectors(a.generators(), 32).size());
  CHECK(a.basis_of_degree(35).size() == oracle::exponent_vectors(a.generators(), 35).size());
}

TEST_CASE("expression grammar") {
  Algebra a = a1_algebra();
  AliasTable w{{"w", parse(a, "x2^2 y1 y2 - x1 x2 y1 y3 + x1^2 y2 y3")}};
  Element e = parse_expression(a, "x2 w", w);
  CHECK(e == parse(a, "x2^3 y1 y2 - x1 x2^2 y1 y3 + x1^2 x2 y2 y3"));
  CHECK(parse(a, "3/6 x1") == Q(1, 2) * a.gen("x1"));
  CHECK(parse(a, "-x1^2 + x1^2").is_zero());
  CHECK(parse(a, "2") == Q(2) * a.one());
  CHECK(parse(a, "y2 y1") == parse(a, "-y1 y2"));
  CHECK(parse(a, "y1 y1").is_zero());
  CHECK_THROWS_AS(parse(a, "x9"), InputError);
  CHECK_THROWS_AS(parse(a, "x1 +"), InputError);
  CHECK_THROWS_AS(parse(a, "1/0 x1"), InputError);
  CHECK_THROWS_AS(parse(a, "x1^"), InputError);
}

TEST_CASE("rational helpers") {
  CHECK(to_string(Q(-6, 4)) == "-3/2");
  CHECK(to_string(Q(4, 2)) == "2");
  CHECK(parse_rational("-3/6") == Q(-1, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(dgalab::pow(Q(2, 3), -2) == Q(9, 4));
  CHECK(exact_root(Q(-8, 27), 3) == Q(-2, 3));
  CHECK(exact_root(Q(4), 2) == Q(2));
  CHECK(!exact_root(Q(-4), 2));
  CHECK(!exact_root(Q(2), 2));
}
