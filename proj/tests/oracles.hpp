#pragma once

// Independent reference computations used to check the library. Each one is written
// for clarity over speed and shares no code with the routine it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dgalab/algebra.hpp"
#include "dgalab/dga.hpp"
#include "dgalab/io.hpp"
#include "dgalab/linalg.hpp"

namespace oracle {

using dgalab::Q;

inline std::string fixture(const std::string& name) {
  return std::string(DGALAB_FIXTURE_DIR) + "/" + name;
}

// All exponent vectors of total degree n, by recursion over the generators.
inline std::vector<std::vector<std::uint16_t>> exponent_vectors(
    const std::vector<dgalab::GeneratorSpec>& gens, int n) {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> cur(gens.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == gens.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int maxe = gens[i].odd() ? 1 : left / gens[i].degree;
    for (int e = 0; e <= maxe && e * gens[i].degree <= left; ++e) {
      cur[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e * gens[i].degree);
    }
    cur[i] = 0;
  };
  rec(0, n);
  return out;
}

// A monomial written as a word of generator indices in normal order.
inline std::vector<std::size_t> word_of(const dgalab::Monomial& m) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int k = 0; k < m[i]; ++k) w.push_back(i);
  return w;
}

// Product of a word of generators, multiplied out one letter at a time.
inline dgalab::Element word_product(const dgalab::Algebra& a,
                                    const std::vector<dgalab::Element>& letters) {
  dgalab::Element acc = a.one();
  for (const auto& l : letters) acc = a.multiply(acc, l);
  return acc;
}

// d of a word by the letter-wise Leibniz rule:
// d(g1...gk) = Σ_i (-1)^{|g1|+...+|g_{i-1}|} g1 ... d(gi) ... gk.
inline dgalab::Element leibniz(const dgalab::DgaSpec& dga, const dgalab::Monomial& m) {
  const auto& a = dga.algebra();
  auto w = word_of(m);
  dgalab::Element out;
  int before = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<dgalab::Element> letters;
    for (std::size_t j = 0; j < w.size(); ++j) letters.push_back(j == i ? dga.d(w[j]) : a.gen(w[j]));
    dgalab::Element t = word_product(a, letters);
    out += (before % 2 ? Q(-1) : Q(1)) * t;
    before += a.generator(w[i]).degree;
  }
  return out;
}

inline dgalab::Element leibniz(const dgalab::DgaSpec& dga, const dgalab::Element& e) {
  dgalab::Element out;
  for (const auto& [m, c] : e.terms()) out += c * leibniz(dga, m);
  return out;
}

// Textbook rank over Q of a dense matrix.
inline std::size_t rank(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Dense reduced row echelon form, returned as nonzero rows.
inline std::vector<std::vector<Q>> rref(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

// dim H^n = dim C^n - rank d_n - rank d_{n-1}, with monomial bases from the brute-force
// enumerator and differentials from the letter-wise Leibniz rule.
inline std::size_t cohomology_dimension(const dgalab::DgaSpec& dga, int n) {
  const auto& a = dga.algebra();
  auto monos = [&](int k) {
    std::vector<dgalab::Monomial> out;
    if (k < 0) return out;
    for (auto& e : exponent_vectors(a.generators(), k)) out.push_back(*a.monomial(e));
    return out;
  };
  auto matrix = [&](int k) {
    auto src = monos(k);
    auto dst = monos(k + 1);
    std::vector<std::vector<Q>> m(src.size(), std::vector<Q>(dst.size()));
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto d = leibniz(dga, src[i]);
      for (std::size_t j = 0; j < dst.size(); ++j) m[i][j] = d.coefficient(dst[j]);
    }
    return m;
  };
  const std::size_t cn = monos(n).size();
  return cn - rank(matrix(n)) - rank(matrix(n - 1));
}

// Congruence diagonalization of a symmetric matrix; returns the diagonal entries.
inline std::vector<Q> diagonalize(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  std::vector<Q> diag;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][p] == 0) ++p;
    if (p == n) {
      // no nonzero diagonal entry left: create one from an off-diagonal entry
      std::size_t i = n, j = n;
      for (std::size_t a = k; a < n && i == n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (m[a][b] != 0) {
            i = a;
            j = b;
            break;
          }
      if (i == n) {
        for (std::size_t a = k; a < n; ++a) diag.push_back(0);
        return diag;
      }
      // row/column i += row/column j
      for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
      for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
      p = i;
    }
    std::swap(m[p], m[k]);
    for (auto& row : m) std::swap(row[p], row[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Q f = m[i][k] / m[k][k];
      for (std::size_t c = 0; c < n; ++c) m[i][c] -= f * m[k][c];
      for (std::size_t r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
    }
    diag.push_back(m[k][k]);
  }
  return diag;
}

inline int signature(const std::vector<std::vector<Q>>& m) {
  int s = 0;
  for (const Q& d : diagonalize(m)) s += sgn(d);
  return s;
}

// Small rationals p/q with |p| <= bound, 1 <= q <= bound, each value once.
inline std::vector<Q> small_rationals(int bound) {
  std::set<Q> s;
  for (int q = 1; q <= bound; ++q)
    for (int p = -bound; p <= bound; ++p) {
      Q v(p, q);
      v.canonicalize();
      s.insert(v);
    }
  return {s.begin(), s.end()};
}

inline Q random_rational(std::mt19937_64& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Q v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

// Random homogeneous element of degree n: a random combination of up to `terms` basis
// monomials from the brute-force enumerator.
inline dgalab::Element random_element(const dgalab::Algebra& a, int n, std::mt19937_64& rng,
                                      int terms = 4) {
  auto ev = exponent_vectors(a.generators(), n);
  dgalab::Element e;
  if (ev.empty()) return e;
  std::uniform_int_distribution<std::size_t> pick(0, ev.size() - 1);
  for (int t = 0; t < terms; ++t) e.add_term(*a.monomial(ev[pick(rng)]), random_rational(rng));
  return e;
}

}  // namespace oracle
