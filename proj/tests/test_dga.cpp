#include <doctest.h>

#include "dgalab/dga.hpp"
#include "dgalab/errors.hpp"
#include "dgalab/expression.hpp"
#include "dgalab/io.hpp"
#include "oracles.hpp"

using namespace dgalab;

namespace {

DgaSpec load(const char* f) { return load_dga(oracle::fixture(f)).dga; }
Element parse(const DgaSpec& d, const std::string& s) { return parse_expression(d.algebra(), s); }

}  // namespace

TEST_CASE("differential on generators and products of A1") {
  DgaSpec a = load("a1.dga");
  CHECK(a.differential(parse(a, "y1")) == parse(a, "x1^3 x2"));
  CHECK(a.differential(parse(a, "x1")).is_zero());
  CHECK(a.differential(parse(a, "y1 y2")) == parse(a, "x1^3 x2 y2 - x1^2 x2^2 y1"));
  CHECK(oracle::leibniz(a, parse(a, "y1 y2")) == parse(a, "x1^3 x2 y2 - x1^2 x2^2 y1"));
}

TEST_CASE("Leibniz extension agrees with the letter-wise expander") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"}) {
    DgaSpec a = load(f);
    for (int n = 0; n <= 60; ++n)
      for (const auto& m : a.algebra().basis_of_degree(n))
        CHECK_MESSAGE(a.differential(m) == oracle::leibniz(a, m), f << " " << a.algebra().format(m));
  }
}

TEST_CASE("d squared vanishes on the fixtures and their tensor products") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"}) CHECK(check_d_squared(load(f)).pass);
  CHECK(check_d_squared(tensor_product(load("a3.dga"), load("a4.dga"))).pass);
  CHECK(check_d_squared(tensor_product(load("a4.dga"), load("a4.dga"))).pass);
}

TEST_CASE("a degree-correct corruption of dz is caught at z") {
  std::string text = read_file(oracle::fixture("a1.dga"));
  auto pos = text.find("+ x2^9");
  REQUIRE(pos != std::string::npos);
  // x1^8 y1 y2 has the degree of dz and is not a cocycle
  text.replace(pos, 6, "+ x2^9 + x1^8 y1 y2");
  DgaSpec bad = parse_dga(text).dga;
  auto r = check_d_squared(bad);
  CHECK(!r.pass);
  REQUIRE(r.failing_generator);
  CHECK(bad.algebra().generator(*r.failing_generator).name == "z");
  CHECK(!r.residue.is_zero());
}

TEST_CASE("a degree-incorrect differential is an input error") {
  std::string text = read_file(oracle::fixture("a1.dga"));
  auto pos = text.find("+ x2^9");
  text.replace(pos, 6, "+ x2^8 y1");
  CHECK_THROWS_AS(parse_dga(text), InputError);
}

TEST_CASE("an algebra with zero differential") {
  Algebra alg({{"a", 2}, {"b", 3}});
  DgaSpec d("Z", alg, {Element(), Element()});
  CHECK(check_d_squared(d).pass);
  auto s = structural_report(d);
  CHECK(s.simply_connected);
  CHECK(s.minimal);
  CHECK(s.pure);
}

TEST_CASE("structural flags") {
  auto s1 = structural_report(load("a1.dga"));
  CHECK(s1.simply_connected);
  CHECK(s1.minimal);
  CHECK(!s1.pure);
  auto s2 = structural_report(load("s2.dga"));
  CHECK(s2.simply_connected);
  CHECK(s2.minimal);
  CHECK(s2.pure);
  CHECK(!structural_report(load("a3.dga")).pure);

  Algebra alg({{"x", 2}, {"y", 3}, {"u", 4}});
  DgaSpec linear("L", alg, {Element(), parse_expression(alg, "x^2 + u"), Element()});
  CHECK(!structural_report(linear).minimal);
  Algebra low({{"t", 1}, {"x", 2}});
  DgaSpec nsc("N", low, {Element(), Element()});
  CHECK(!structural_report(nsc).simply_connected);
}

TEST_CASE("formal dimensions") {
  CHECK(formal_dimension(load("a1.dga")) == 64);
  CHECK(formal_dimension(load("a2.dga")) == 108);
  CHECK(formal_dimension(load("a3.dga")) == 208);
  CHECK(formal_dimension(load("a4.dga")) == 228);
  CHECK(formal_dimension(load("s2.dga")) == 2);
  const char* fs[] = {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"};
  for (const char* f : fs)
    for (const char* g : fs)
      CHECK(formal_dimension(tensor_product(load(f), load(g))) ==
            formal_dimension(load(f)) + formal_dimension(load(g)));
}

TEST_CASE("rational homotopy dimensions") {
  auto h = rational_homotopy_dims(load("a1.dga"), 64);
  CHECK(h[63] == 0);
  CHECK(h[2] == 1);
  CHECK(h[35] == 1);
  CHECK(h[3] == 0);
  CHECK(rational_homotopy_dims(load("a2.dga"), 227)[227] == 0);
}

TEST_CASE("tensor products") {
  DgaSpec t = tensor_product(load("a3.dga"), load("a3.dga"));
  CHECK(t.size() == 12);
  CHECK(t.algebra().generator(0).name == "x1_a");
  CHECK(t.algebra().generator(6).name == "x1_b");
  CHECK(check_d_squared(t).pass);
  auto b8 = t.algebra().basis_of_degree(8);
  REQUIRE(b8.size() == 2);
  CHECK(t.algebra().format(b8[0]) == "x1_a");
  CHECK(t.algebra().format(b8[1]) == "x1_b");
  CHECK(t.algebra().basis_of_degree(7).empty());

  DgaSpec a1 = load("a1.dga");
  DgaSpec unit("E", Algebra(std::vector<GeneratorSpec>{}), {});
  DgaSpec u = tensor_product(a1, unit);
  CHECK(u.size() == a1.size());
  for (std::size_t i = 0; i < a1.size(); ++i) {
    CHECK(u.algebra().generator(i).degree == a1.algebra().generator(i).degree);
    CHECK(u.algebra().generator(i).name == a1.algebra().generator(i).name + "_a");
  }
  CHECK(tensor_components(t).size() == 2);
  CHECK(tensor_components(a1).size() == 1);
}

TEST_CASE("chain maps") {
  DgaSpec a1 = load("a1.dga");
  CHECK(check_chain_map(a1, identity_endo(a1)).pass);
  CHECK(check_chain_map(a1, zero_endo(a1)).pass);
  CHECK_THROWS_AS(pure_scaling_endo(a1), PreconditionError);

  DgaSpec s2 = load("s2.dga");
  ConcreteEndo f = pure_scaling_endo(s2, 2);
  CHECK(f.image(0) == Q(4) * s2.algebra().gen("e"));
  CHECK(f.image(1) == Q(16) * s2.algebra().gen("e'"));
  CHECK(check_chain_map(s2, f).pass);
  for (const Q& base : {Q(2), Q(3), Q(1, 2)}) CHECK(check_chain_map(s2, pure_scaling_endo(s2, base)).pass);
  ConcreteEndo id = pure_scaling_endo(s2, 1);
  CHECK(id.images() == identity_endo(s2).images());

  // The exponent |y| - 1 on odd generators does not give a chain map.
  ConcreteEndo wrong({Q(4) * s2.algebra().gen("e"), Q(4) * s2.algebra().gen("e'")});
  auto r = check_chain_map(s2, wrong);
  CHECK(!r.pass);
  REQUIRE(r.failing_generator);
  CHECK(*r.failing_generator == 1);

  ConcreteEndo bad({s2.algebra().gen("e'"), s2.algebra().gen("e'")});
  CHECK_THROWS_AS(check_chain_map(s2, bad), InputError);
}
