#include <doctest.h>

#include <random>

#include "dgalab/lattice.hpp"
#include "dgalab/polynomial.hpp"
#include "oracles.hpp"

using namespace dgalab;

namespace {

Poly v(Var i) { return Poly::variable(i); }
std::string name(Var i) { return "u" + std::to_string(i); }

Poly random_poly(std::mt19937_64& rng, int vars, int terms) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    PowerProduct pp;
    for (Var i = 0; i < static_cast<Var>(vars); ++i)
      if (auto e = rng() % 3) pp.emplace_back(i, static_cast<std::uint32_t>(e));
    p.add_term(pp, oracle::random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic evaluates consistently") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    Poly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4);
    std::vector<Q> x{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng)};
    auto at = [&](Var i) { return x[i]; };
    CHECK((a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at));
    CHECK((a - b).evaluate(at) == a.evaluate(at) - b.evaluate(at));
    CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
    CHECK(a.pow(3).evaluate(at) == dgalab::pow(a.evaluate(at), 3));
    Poly s = a.substitute(1, b);
    std::vector<Q> y = x;
    y[1] = b.evaluate(at);
    CHECK(s.evaluate(at) == a.evaluate([&](Var i) { return y[i]; }));
    CHECK(a.substitute({{0, b}, {2, Poly(Q(2))}}).evaluate(at) ==
          a.evaluate([&](Var i) { return i == 0 ? b.evaluate(at) : i == 2 ? Q(2) : x[i]; }));
  }
}

TEST_CASE("polynomial structure queries") {
  Poly p = v(0) * v(1) * Q(3) + v(1) * v(1) * v(2) - Q(2);
  CHECK(p.variables() == std::set<Var>{0, 1, 2});
  CHECK(p.degree_in(1) == 2);
  CHECK(!p.linear_split(1));
  auto ls = p.linear_split(0);
  REQUIRE(ls);
  CHECK(ls->first == Q(3) * v(1));
  CHECK(ls->second == v(1) * v(1) * v(2) - Q(2));
  Poly q = v(0) * v(0) * v(1) + v(0) * v(1) * v(2);
  CHECK(q.common_factor() == PowerProduct{{0, 1}, {1, 1}});
  CHECK(q.divide_by(q.common_factor()) == v(0) + v(2));
  CHECK(Poly(Q(5)).is_constant());
  CHECK(Poly().is_zero());
  CHECK((v(0) - v(0)).is_zero());
  CHECK((Q(-2) * v(0) * v(0) + v(1)).to_string(name) == "-2*u0^2 + u1");
}

TEST_CASE("relation lattice derives powers") {
  // u0^2 u1 = 1, u1^3 = 8  =>  u0^6 = 1/8
  RelationLattice lat;
  lat.add({{{0, 2}, {1, 1}}, 1});
  lat.add({{{1, 3}}, 8});
  REQUIRE(lat.reduce());
  auto p0 = lat.power_of({{0, 1}});
  REQUIRE(p0);
  CHECK(p0->first == 6);
  CHECK(p0->second == Q(1, 8));
  auto p1 = lat.power_of({{1, 1}});
  REQUIRE(p1);
  CHECK(p1->first == 3);
  CHECK(p1->second == 8);
  CHECK(!lat.power_of({{2, 1}}));
}

TEST_CASE("relation lattice detects inconsistency") {
  RelationLattice lat;
  lat.add({{{0, 1}, {1, 1}}, 2});
  lat.add({{{0, 2}, {1, 2}}, 5});
  CHECK(!lat.reduce());
}

TEST_CASE("relation lattice rows are valid relations") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    // relations satisfied by a random point with small integer coordinates
    std::vector<Q> x{Q(static_cast<long>(rng() % 3) + 1), Q(-1), Q(1, static_cast<long>(rng() % 2) + 1)};
    RelationLattice lat;
    for (int k = 0; k < 3; ++k) {
      Relation r;
      Q val = 1;
      for (Var i = 0; i < 3; ++i) {
        long e = static_cast<long>(rng() % 5) - 2;
        if (!e) continue;
        r.exponents.emplace_back(i, e);
        val *= dgalab::pow(x[i], e);
      }
      r.value = val;
      if (!r.exponents.empty()) lat.add(r);
    }
    REQUIRE(lat.reduce());
    for (const auto& r : lat.rows()) {
      Q val = 1;
      for (const auto& [i, e] : r.exponents) val *= dgalab::pow(x[i], e);
      CHECK(val == r.value);
    }
  }
}
