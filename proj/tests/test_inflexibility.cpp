#include <doctest.h>

#include <memory>

#include "dgalab/expression.hpp"
#include "dgalab/inflexibility.hpp"
#include "dgalab/io.hpp"
#include "properties.hpp"

using namespace dgalab;

namespace {

using properties::satisfies;

struct Loaded {
  std::shared_ptr<Cohomology> h;
  FundamentalClass fc;
};

Loaded load(const char* f) {
  DgaDocument doc = load_dga(oracle::fixture(f));
  return {std::make_shared<Cohomology>(doc.dga), *doc.fundamental};
}

Loaded self_tensor(const char* f) {
  DgaDocument doc = load_dga(oracle::fixture(f));
  DgaSpec t = tensor_product(doc.dga, doc.dga);
  Element rep = tensor_element(t, doc.fundamental->representative, doc.dga.size(),
                               doc.fundamental->representative);
  return {std::make_shared<Cohomology>(t), {rep, 1}};
}

Var unknown(const EndoAnsatz& a, const char* name) {
  auto v = a.find(name);
  REQUIRE_MESSAGE(v, name);
  return *v;
}

const Poly* constraint_at(const DgaSpec& dga, const ConstraintSystem& cs, const char* gen,
                          const char* monomial) {
  Element m = parse_expression(dga.algebra(), monomial);
  for (const auto& c : cs.constraints)
    if (dga.algebra().generator(c.generator).name == gen && Element(c.monomial, 1) == m) return &c.poly;
  return nullptr;
}

bool equal_up_to_sign(const Poly& a, const Poly& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("ansatz sizes") {
  auto l = load("a1.dga");
  const auto& dga = l.h->dga();
  EndoAnsatz a = build_ansatz(dga);
  CHECK(a.unknowns_of(0).size() == 1);
  CHECK(a.unknowns_of(1).size() == 2);
  CHECK(a.find("c[x2|x2]"));
  CHECK(a.find("c[x2|x1^2]"));
  CHECK(a.unknowns_of(5).size() == oracle::exponent_vectors(dga.algebra().generators(), 35).size());
  std::size_t total = 0;
  for (std::size_t g = 0; g < dga.size(); ++g)
    total += oracle::exponent_vectors(dga.algebra().generators(), dga.algebra().generator(g).degree).size();
  CHECK(a.size() == total);
  CHECK(build_ansatz(load("a2.dga").h->dga()).unknowns_of(1).size() == 1);
}

TEST_CASE("the A1 constraint system contains the hand-derived relations") {
  auto l = load("a1.dga");
  const auto& dga = l.h->dga();
  EndoAnsatz a = build_ansatz(dga);
  ConstraintSystem cs = chain_constraints(dga, a);
  Poly a1 = Poly::variable(unknown(a, "c[x1|x1]"));
  Poly a2 = Poly::variable(unknown(a, "c[x2|x2]"));
  Poly a21 = Poly::variable(unknown(a, "c[x2|x1^2]"));
  Poly b1 = Poly::variable(unknown(a, "c[y1|y1]"));
  Poly b2 = Poly::variable(unknown(a, "c[y2|y2]"));
  Poly g = Poly::variable(unknown(a, "c[z|z]"));

  const Poly* s1 = constraint_at(dga, cs, "y1", "x1^3 x2");
  REQUIRE(s1);
  CHECK(equal_up_to_sign(*s1, b1 - a1.pow(3) * a2));
  const Poly* s2 = constraint_at(dga, cs, "y1", "x1^5");
  REQUIRE(s2);
  CHECK(equal_up_to_sign(*s2, a1.pow(3) * a21));
  const Poly* s3 = constraint_at(dga, cs, "z", "x1^18");
  REQUIRE(s3);
  CHECK(equal_up_to_sign(*s3, a1.pow(18) + a21.pow(9) - g));
  const Poly* s4 = constraint_at(dga, cs, "z", "x2^9");
  REQUIRE(s4);
  CHECK(equal_up_to_sign(*s4, a2.pow(9) - g));
  // γ = α2^7 α1^5 once β1 = α1^3 α2 and β2 = α1^2 α2^2
  const Poly* s5 = constraint_at(dga, cs, "z", "x2^4 y1 y2");
  REQUIRE(s5);
  Poly r = s5->substitute({{unknown(a, "c[y1|y1]"), a1.pow(3) * a2},
                           {unknown(a, "c[y2|y2]"), a1.pow(2) * a2.pow(2)}});
  CHECK(equal_up_to_sign(r, a2.pow(7) * a1.pow(5) - g));
  CHECK(satisfies(cs, a.identity_assignment()));
  (void)b2;
}

TEST_CASE("symbolic degrees") {
  struct Case {
    const char* file;
    const char* unknown;
    unsigned power;
  };
  for (const auto& c : {Case{"a1.dga", "c[x2|x2]", 16}, Case{"a2.dga", "c[x2|x2]", 18},
                        Case{"a3.dga", "c[x1|x1]", 26}, Case{"a4.dga", "c[x2|x2]", 19}}) {
    auto l = load(c.file);
    EndoAnsatz a = build_ansatz(l.h->dga());
    TopFunctional top(l.h, l.fc.scaled());
    Poly p = symbolic_degree(top, l.h->dga(), a, l.fc);
    CHECK_MESSAGE(p == Poly::variable(unknown(a, c.unknown)).pow(c.power), c.file);
    CHECK(p.evaluate([&](Var i) { return a.identity_assignment()[i]; }) == 1);
  }
}

TEST_CASE("A1 to A4 are certified inflexible with sound leaves") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga"}) {
    auto l = load(f);
    Certificate c = certify_inflexible(l.h, l.fc);
    CHECK_MESSAGE(c.verdict == Certificate::Overall::inflexible, f);
    CHECK(c.count(Verdict::inconclusive) == 0);
    auto r = properties::solver_soundness(l.h, l.fc, c);
    CHECK(r.failures == 0);
    CHECK(r.leaves_checked >= 1);
  }
}

TEST_CASE("A1 branch structure") {
  auto l = load("a1.dga");
  Certificate c = certify_inflexible(l.h, l.fc);
  CHECK(c.count(Verdict::degree_zero) >= 1);
  CHECK(c.count(Verdict::degree_unit) >= 1);
  CHECK(c.tree.nodes[0].rules.size() > 0);
  for (auto leaf : c.tree.leaves()) CHECK(c.tree.nodes[leaf].depth <= 2);
}

TEST_CASE("A3 tensor A3 is certified with the support rule") {
  auto l = self_tensor("a3.dga");
  Certificate c = certify_inflexible(l.h, l.fc);
  CHECK(c.verdict == Certificate::Overall::inflexible);
  CHECK(!c.support.empty());
  bool used = false;
  for (const auto& n : c.tree.nodes)
    for (const auto& r : n.rules) used = used || r.rule == "R-support";
  CHECK(used);
  CHECK(properties::solver_soundness(l.h, l.fc, c).failures == 0);

  // the factor swap is a chain map of degree 1
  const auto& dga = l.h->dga();
  std::vector<Element> images;
  const std::size_t half = dga.size() / 2;
  for (std::size_t g = 0; g < dga.size(); ++g) images.push_back(dga.algebra().gen(g < half ? g + half : g - half));
  ConcreteEndo swap(images);
  CHECK(check_chain_map(dga, swap).pass);
  CHECK(degree_of(l.h, swap, l.fc) == 1);
  std::vector<Q> x(c.ansatz.size());
  for (std::size_t g = 0; g < dga.size(); ++g) {
    auto v = c.ansatz.find(g, dga.algebra().generator_monomial(g < half ? g + half : g - half));
    REQUIRE(v);
    x[*v] = 1;
  }
  CHECK(satisfies(c.constraints, x));
  CHECK(c.degree.evaluate([&](Var i) { return x[i]; }) == 1);
  CHECK(c.tree.matching_leaves(x).size() == 1);

}

TEST_CASE("degree_of") {
  auto l = load("a1.dga");
  CHECK(degree_of(l.h, identity_endo(l.h->dga()), l.fc) == 1);
  CHECK(degree_of(l.h, zero_endo(l.h->dga()), l.fc) == 0);
  auto s = load("s2.dga");
  CHECK(degree_of(s.h, pure_scaling_endo(s.h->dga(), 2), s.fc) == 4);
  ConcreteEndo bad({Q(4) * s.h->dga().algebra().gen("e"), Q(4) * s.h->dga().algebra().gen("e'")});
  CHECK_THROWS_AS(degree_of(s.h, bad, s.fc), PreconditionError);
}

TEST_CASE("pure flexibility witnesses") {
  auto s = load("s2.dga");
  auto ws = pure_flexibility_witnesses(s.h);
  bool saw_two = false;
  for (const auto& w : ws) {
    CHECK(w.verified);
    CHECK(s.h->is_cocycle(w.component));
    if (w.degree == 0) CHECK(w.factor == 1);
    if (w.degree > 0) CHECK(w.flexible());
    if (w.degree == 2) {
      saw_two = true;
      CHECK(w.factor == 4);
    }
  }
  CHECK(saw_two);
  CHECK_THROWS_AS(pure_flexibility_witnesses(load("a1.dga").h), PreconditionError);

  // a pure algebra with an odd-word-length class: x, y even, u odd with du = x^2, v odd, dv = 0
  Algebra alg({{"x", 2}, {"u", 3}, {"v", 5}});
  DgaSpec p("P", alg, {Element(), parse_expression(alg, "x^2"), Element()});
  auto h = std::make_shared<Cohomology>(p);
  for (const auto& w : pure_flexibility_witnesses(h, 3)) {
    CHECK(w.verified);
    CHECK(h->is_cocycle(w.component));
    CHECK(w.factor == dgalab::pow(Q(3), w.degree + w.odd_length));
  }
}
