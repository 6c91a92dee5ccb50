#include <doctest.h>

#include <random>

#include "dgalab/linalg.hpp"
#include "oracles.hpp"

using namespace dgalab;

namespace {

DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double density) {
  std::bernoulli_distribution keep(density);
  DenseMatrix m(r, std::vector<Q>(c));
  for (auto& row : m)
    for (auto& x : row)
      if (keep(rng)) x = oracle::random_rational(rng, 7);
  // a few dependent rows
  if (r > 2) {
    for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = m[0][j] * Q(3, 2) - m[1][j];
  }
  return m;
}

DenseMatrix dense_rows(const Echelon& e) {
  DenseMatrix out;
  for (const auto& r : e.rows) out.push_back(to_dense(r, e.cols));
  return out;
}

std::vector<SparseVec> sparse_rows(const DenseMatrix& m) {
  std::vector<SparseVec> out;
  for (const auto& r : m) out.push_back(to_sparse(r));
  return out;
}

}  // namespace

TEST_CASE("sparse RREF equals the dense oracle in both execution modes") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    DenseMatrix m = random_matrix(rng, r, c, t % 2 ? 0.3 : 0.8);
    auto want = oracle::rref(m);
    CHECK(dense_rows(rref(sparse_rows(m), c, Exec::serial)) == want);
    CHECK(dense_rows(rref(sparse_rows(m), c, Exec::parallel)) == want);
    CHECK(dense_rows(reference::rref_dense(m, c)) == want);
  }
}

TEST_CASE("kernel basis and reduction") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 10;
    DenseMatrix m = random_matrix(rng, r, c, 0.5);
    Echelon e = rref(sparse_rows(m), c);
    auto ker = kernel_basis(e);
    CHECK(ker.size() + e.rank() == c);
    CHECK(e.rank() == oracle::rank(m));
    for (const auto& k : ker) {
      auto kd = to_dense(k, c);
      for (const auto& row : m) {
        Q s = 0;
        for (std::size_t j = 0; j < c; ++j) s += row[j] * kd[j];
        CHECK(s == 0);
      }
    }
    for (const auto& row : m) CHECK(e.contains(to_sparse(row)));
  }
}

TEST_CASE("linear solve") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    DenseMatrix m = random_matrix(rng, r, c, 0.6);
    std::vector<Q> x(c);
    for (auto& v : x) v = oracle::random_rational(rng);
    std::vector<Q> b(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] += m[i][j] * x[j];
    auto sol = solve(sparse_rows(m), c, to_sparse(b));
    REQUIRE(sol);
    auto sd = to_dense(*sol, c);
    for (std::size_t i = 0; i < r; ++i) {
      Q s = 0;
      for (std::size_t j = 0; j < c; ++j) s += m[i][j] * sd[j];
      CHECK(s == b[i]);
    }
  }
  DenseMatrix m{{Q(1), Q(1)}, {Q(2), Q(2)}};
  CHECK(!solve(sparse_rows(m), 2, to_sparse({Q(1), Q(3)})));
}

TEST_CASE("transpose") {
  DenseMatrix m{{Q(1), Q(0), Q(2)}, {Q(0), Q(3), Q(0)}};
  auto t = transpose(sparse_rows(m), 3);
  REQUIRE(t.size() == 3);
  CHECK(to_dense(t[0], 2) == std::vector<Q>{Q(1), Q(0)});
  CHECK(to_dense(t[1], 2) == std::vector<Q>{Q(0), Q(3)});
  CHECK(to_dense(t[2], 2) == std::vector<Q>{Q(2), Q(0)});
}
