#include <doctest.h>

#include <memory>
#include <random>

#include "dgalab/expression.hpp"
#include "dgalab/io.hpp"
#include "dgalab/poincare.hpp"
#include "oracles.hpp"

using namespace dgalab;

namespace {

struct Loaded {
  std::shared_ptr<Cohomology> h;
  DgaDocument doc;
};

Loaded load(const char* f) {
  DgaDocument doc = load_dga(oracle::fixture(f));
  return {std::make_shared<Cohomology>(doc.dga), doc};
}

DenseMatrix m(std::initializer_list<std::initializer_list<int>> rows) {
  DenseMatrix out;
  for (auto r : rows) {
    out.emplace_back();
    for (int x : r) out.back().push_back(Q(x));
  }
  return out;
}

BilinearFormQ form(DenseMatrix mat) { return {std::move(mat), {}}; }

}  // namespace

TEST_CASE("Poincaré duality of the fixtures") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"}) {
    auto l = load(f);
    auto r = check_poincare(l.h, *l.doc.fundamental);
    CHECK_MESSAGE(r.pass, f << ": " << r.failure);
    CHECK(r.top_dimension == 1);
  }
  auto l = load("a1.dga");
  auto r = check_poincare(l.h, {parse_expression(l.h->dga().algebra(), "x1^19"), 1});
  CHECK(!r.pass);
  CHECK(r.representative_exact);
}

TEST_CASE("H above the formal dimension vanishes on a spot check") {
  auto l = load("a1.dga");
  auto r = check_poincare(l.h, *l.doc.fundamental, 6);
  CHECK(r.pass);
  CHECK(r.vanishing_checked.size() == 6);
}

TEST_CASE("intersection forms over the named bases") {
  auto a1 = load("a1.dga");
  auto f1 = intersection_form(a1.h, *a1.doc.fundamental, a1.doc.basis);
  CHECK(f1.matrix == m({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 1}}));
  CHECK(f1.unimodular_integral());
  for (const char* f : {"a2.dga", "a3.dga"}) {
    auto l = load(f);
    CHECK(intersection_form(l.h, *l.doc.fundamental, l.doc.basis).matrix == m({{0, -1}, {-1, 1}}));
  }
  auto a4 = load("a4.dga");
  CHECK(intersection_form(a4.h, *a4.doc.fundamental).dimension() == 0);
}

TEST_CASE("canonical-basis forms are symmetric and nonsingular") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga"}) {
    auto l = load(f);
    auto fm = intersection_form(l.h, *l.doc.fundamental);
    CHECK(fm.symmetric());
    CHECK(determinant(fm.matrix) != 0);
    CHECK(signature(fm) == oracle::signature(fm.matrix));
  }
}

TEST_CASE("scaling the fundamental class divides the form") {
  auto l = load("a1.dga");
  auto base = intersection_form(l.h, *l.doc.fundamental, l.doc.basis);
  for (const Q& a : {Q(1, 2), Q(3), Q(-5, 7)}) {
    FundamentalClass fc = *l.doc.fundamental;
    fc.scale = a;
    auto scaled = intersection_form(l.h, fc, l.doc.basis);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(scaled.matrix[i][j] == base.matrix[i][j] / a);
  }
}

TEST_CASE("intersection form needs formal dimension divisible by 4") {
  auto l = load("s2.dga");
  CHECK_THROWS(intersection_form(l.h, *l.doc.fundamental));
}

TEST_CASE("signature against the diagonalization oracle") {
  CHECK(signature(form(m({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 1}}))) == 0);
  CHECK(signature(form(m({{0, -1}, {-1, 1}}))) == 0);
  CHECK(signature(form(m({{1, 0}, {0, 1}}))) == 2);
  CHECK(signature(form(m({{0, 1}, {1, 0}}))) == 0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 6;
    DenseMatrix s(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s[i][j] = s[j][i] = rng() % 3 ? oracle::random_rational(rng) : Q(0);
    CHECK(signature(form(s)) == oracle::signature(s));
  }
}

TEST_CASE("signature is invariant under unimodular congruence") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + rng() % 4;
    DenseMatrix s(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s[i][j] = s[j][i] = oracle::random_rational(rng);
    // P = product of elementary integer matrices, det 1
    DenseMatrix p(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
    for (int k = 0; k < 5; ++k) {
      std::size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      Q c = static_cast<long>(rng() % 5) - 2;
      for (std::size_t r = 0; r < n; ++r) p[r][i] += c * p[r][j];
    }
    DenseMatrix ps(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) ps[i][j] += p[a][i] * s[a][b] * p[b][j];
    CHECK(signature(form(s)) == signature(form(ps)));
  }
}

TEST_CASE("Lagrangians") {
  auto a1form = form(m({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 1}}));
  CHECK(verify_lagrangian(a1form, {{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(1), Q(0), Q(0)}}));
  CHECK(!verify_lagrangian(a1form, {{Q(1), Q(0), Q(0), Q(0)}, {Q(2), Q(0), Q(0), Q(0)}}));
  CHECK(!verify_lagrangian(a1form, {{Q(0), Q(0), Q(0), Q(1)}, {Q(0), Q(1), Q(0), Q(0)}}));
  auto small = form(m({{0, -1}, {-1, 1}}));
  CHECK(verify_lagrangian(small, {{Q(1), Q(0)}}));
  auto id = form(m({{1, 0}, {0, 1}}));
  CHECK(!verify_lagrangian(id, {{Q(1), Q(0)}}));
  CHECK(!verify_lagrangian(id, {{Q(1), Q(1)}}));

  for (const auto& f : {a1form, small, form(m({{1, 0}, {0, -1}})), form(m({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}))}) {
    auto v = find_lagrangian(f);
    CHECK(v.metabolic == Metabolic::yes);
    CHECK(v.signature == 0);
    CHECK(verify_lagrangian(f, v.lagrangian));
  }
  CHECK(find_lagrangian(id).metabolic == Metabolic::no);
  CHECK(find_lagrangian(form(m({{1, 0}, {0, 2}}))).metabolic == Metabolic::no);
  // <1> ⊕ <-2> has no rational isotropic vector, so no Lagrangian exists
  auto w = find_lagrangian(form(m({{1, 0}, {0, -2}})));
  CHECK(w.metabolic != Metabolic::yes);
}

TEST_CASE("Barge-Sullivan conditions for the fixtures and scaled classes") {
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga"}) {
    auto l = load(f);
    for (const Q& a : {Q(1), Q(1, 2), Q(3)}) {
      FundamentalClass fc = *l.doc.fundamental;
      fc.scale = a;
      auto r = barge_sullivan_report(l.h, fc, l.doc.basis);
      CHECK_MESSAGE(r.witt_condition == Condition::holds, f << " scale " << to_string(a));
      CHECK(r.signature_condition == Condition::holds);
      CHECK(r.witt.metabolic == Metabolic::yes);
      CHECK(verify_lagrangian(r.form, r.witt.lagrangian));
    }
  }
}
