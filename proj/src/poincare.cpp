#include "dgalab/poincare.hpp"

#include <algorithm>
#include <functional>

namespace dgalab {

namespace {

PoincareReport check_factors(const DgaSpec& dga, const std::vector<std::vector<std::size_t>>& comps,
                             const Monomial& m, const Q& coefficient, Exec exec, int above_check,
                             PoincareReport report) {
  auto split = split_monomial(dga, comps, m);
  report.pass = true;
  for (std::size_t b = 0; b < comps.size(); ++b) {
    auto sub = restrict_to(dga, comps[b], dga.name() + "#" + std::to_string(b));
    FundamentalClass part{Element(split.parts[b], b == 0 ? coefficient : Q(1)), 1};
    auto h = std::make_shared<const Cohomology>(std::move(sub), exec);
    auto r = check_poincare(h, part, above_check);
    if (!r.pass && report.failure.empty())
      report.failure = "tensor factor " + std::to_string(b) + ": " + r.failure;
    report.pass = report.pass && r.pass;
    report.factors.push_back(std::move(r));
  }
  report.top_dimension = report.pass ? 1 : 0;
  report.representative_exact = !report.pass && std::any_of(report.factors.begin(), report.factors.end(),
                                                            [](const auto& f) { return f.representative_exact; });
  return report;
}

}  // namespace

PoincareReport check_poincare(std::shared_ptr<const Cohomology> h, const FundamentalClass& fc,
                              int above_check) {
  const auto& dga = h->dga();
  PoincareReport report;
  report.formal_dimension = formal_dimension(dga);
  const int n = report.formal_dimension;
  Element rep = fc.scaled();
  if (rep.is_zero()) {
    report.failure = "fundamental class representative is zero";
    return report;
  }
  if (!rep.is_homogeneous()) {
    report.failure = "fundamental class representative is not homogeneous";
    return report;
  }
  report.representative_cocycle = h->is_cocycle(rep);
  if (!report.representative_cocycle) {
    report.failure = "fundamental class representative is not a cocycle";
    return report;
  }

  auto comps = tensor_components(dga);
  if (comps.size() > 1 && rep.size() == 1 && *rep.degree() == n) {
    const auto& [m, c] = *rep.terms().begin();
    return check_factors(dga, comps, m, c, h->exec(), above_check, std::move(report));
  }

  report.representative_exact = h->coboundary_witness(rep).has_value();
  if (report.representative_exact) {
    report.failure = "fundamental class representative is exact";
    return report;
  }
  if (*rep.degree() != n) {
    report.failure = "fundamental class has degree " + std::to_string(*rep.degree()) +
                     " but the formal dimension is " + std::to_string(n);
    return report;
  }
  report.top_dimension = h->space(n).dimension();
  if (report.top_dimension != 1) {
    report.failure = "top cohomology has dimension " + std::to_string(report.top_dimension);
    return report;
  }
  h->precompute(0, n);
  TopFunctional top(h, rep);
  for (int j = 0; j <= n / 2; ++j) {
    auto left = h->representatives(j);
    auto right = h->representatives(n - j);
    PairingCheck p;
    p.degree = j;
    p.rows = left.size();
    p.cols = right.size();
    if (p.rows == p.cols) {
      DenseMatrix m(p.rows, std::vector<Q>(p.cols));
      for (std::size_t a = 0; a < p.rows; ++a)
        for (std::size_t b = 0; b < p.cols; ++b) m[a][b] = top(dga.algebra().multiply(left[a], right[b]));
      p.perfect = determinant(m) != 0;
    }
    report.pairings.push_back(p);
    if (!p.perfect && report.failure.empty())
      report.failure = "pairing H^" + std::to_string(j) + " x H^" + std::to_string(n - j) +
                       " is not perfect";
  }
  for (int k = 1; k <= above_check; ++k) {
    if (h->space(n + k).dimension() != 0) {
      if (report.failure.empty()) report.failure = "H^" + std::to_string(n + k) + " is nonzero";
      break;
    }
    report.vanishing_checked.push_back(n + k);
  }
  report.pass = report.failure.empty();
  return report;
}

Q BilinearFormQ::pair(const std::vector<Q>& u, const std::vector<Q>& v) const {
  Q s = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (v[j] != 0) s += u[i] * matrix[i][j] * v[j];
  }
  return s;
}

bool BilinearFormQ::symmetric() const {
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (matrix[i][j] != matrix[j][i]) return false;
  return true;
}

bool BilinearFormQ::unimodular_integral() const {
  for (const auto& row : matrix)
    for (const auto& x : row)
      if (!is_integer(x)) return false;
  return abs(determinant(matrix)) == 1;
}

BilinearFormQ intersection_form(std::shared_ptr<const Cohomology> h, const FundamentalClass& fc,
                                const std::optional<std::vector<Element>>& basis) {
  const auto& dga = h->dga();
  const int n = fc.degree();
  if (n < 0 || n % 4 != 0)
    throw PreconditionError("intersection form needs formal dimension divisible by 4");
  const int k = n / 2;
  TopFunctional top(h, fc.scaled());
  std::vector<Element> b;
  if (basis) {
    b = *basis;
    std::vector<SparseVec> coords;
    for (const auto& e : b) {
      if (!e.is_zero() && e.degree() != k)
        throw PreconditionError("basis element " + dga.algebra().format(e) + " is not of degree " +
                                std::to_string(k));
      coords.push_back(to_sparse(h->class_of(e, k).coordinates));
    }
    const std::size_t dim = h->space(k).dimension();
    if (b.size() != dim || rref(coords, dim, h->exec()).rank() != dim)
      throw PreconditionError("supplied classes do not form a basis of H^" + std::to_string(k));
  } else {
    b = h->representatives(k);
  }
  BilinearFormQ f;
  f.matrix.assign(b.size(), std::vector<Q>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) {
    f.labels.push_back("[" + dga.algebra().format(b[i]) + "]");
    for (std::size_t j = 0; j < b.size(); ++j) f.matrix[i][j] = top(dga.algebra().multiply(b[i], b[j]));
  }
  return f;
}

Q determinant(const DenseMatrix& input) {
  DenseMatrix m = input;
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

int signature(const BilinearFormQ& f) {
  DenseMatrix a = f.matrix;
  const std::size_t n = a.size();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // No usable diagonal entry: e_i + e_j has square 2a_ij when a_ii = a_jj = 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
      for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
      p = pi;
    }
    swap_index(p, k);
    const Q piv = a[k][k];
    sig += piv > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Q factor = a[i][k] / piv;
      for (std::size_t t = 0; t < n; ++t) a[i][t] -= factor * a[k][t];
      for (std::size_t t = 0; t < n; ++t) a[t][i] -= factor * a[t][k];
    }
  }
  return sig;
}

bool verify_lagrangian(const BilinearFormQ& f, const std::vector<std::vector<Q>>& subspace) {
  const std::size_t n = f.dimension();
  for (const auto& v : subspace)
    if (v.size() != n) return false;
  std::vector<SparseVec> rows;
  for (const auto& v : subspace) rows.push_back(to_sparse(v));
  const std::size_t rank = rref(rows, n, Exec::serial).rank();
  if (rank != subspace.size() || 2 * rank != n) return false;
  for (const auto& u : subspace)
    for (const auto& v : subspace)
      if (f.pair(u, v) != 0) return false;
  return true;
}

const char* to_string(Metabolic m) {
  switch (m) {
    case Metabolic::yes: return "yes";
    case Metabolic::no: return "no";
    case Metabolic::undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::holds: return "holds";
    case Condition::fails: return "fails";
    case Condition::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

// Integer vectors of the given height (max |entry|), support size `support`, first nonzero
// positive; visits positions in lexicographic order. Stops when visit returns true.
bool for_each_vector(std::size_t dim, int height, std::size_t support,
                     const std::function<bool(const std::vector<Q>&)>& visit) {
  std::vector<int> values;
  for (int x = -height; x <= height; ++x)
    if (x != 0) values.push_back(x);
  const std::size_t first_offset = static_cast<std::size_t>(height);  // values[first_offset] == 1
  std::vector<std::size_t> pos(support);
  for (std::size_t i = 0; i < support; ++i) pos[i] = i;
  while (true) {
    std::vector<std::size_t> idx(support, 0);
    idx[0] = first_offset;
    while (true) {
      bool hits = false;
      for (auto k : idx) hits = hits || std::abs(values[k]) == height;
      if (hits) {
        std::vector<Q> v(dim, Q(0));
        for (std::size_t i = 0; i < support; ++i) v[pos[i]] = values[idx[i]];
        if (visit(v)) return true;
      }
      std::size_t i = support;
      while (i-- > 0) {
        if (idx[i] + 1 < values.size()) {
          ++idx[i];
          for (std::size_t j = i + 1; j < support; ++j) idx[j] = 0;
          break;
        }
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    std::size_t i = support;
    while (i-- > 0) {
      if (pos[i] < dim - support + i) {
        ++pos[i];
        for (std::size_t j = i + 1; j < support; ++j) pos[j] = pos[j - 1] + 1;
        break;
      }
    }
    if (i == static_cast<std::size_t>(-1)) return false;
  }
}

std::vector<Q> gram_times(const DenseMatrix& g, const std::vector<Q>& v) {
  std::vector<Q> out(g.size(), Q(0));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (v[j] != 0) out[i] += g[i][j] * v[j];
  return out;
}

}  // namespace

WittVerdict find_lagrangian(const BilinearFormQ& f, int height_bound) {
  WittVerdict out;
  out.height_bound = height_bound;
  out.signature = signature(f);
  const std::size_t n = f.dimension();
  if (n == 0) {
    out.metabolic = Metabolic::yes;
    out.reason = "zero form";
    return out;
  }
  if (determinant(f.matrix) == 0) {
    out.reason = "form is singular";
    return out;
  }
  if (n % 2 != 0 || out.signature != 0) {
    out.metabolic = Metabolic::no;
    out.reason = n % 2 ? "odd rank" : "nonzero signature";
    return out;
  }
  // basis: current subspace in original coordinates; gram: restricted form.
  std::vector<std::vector<Q>> basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Q> e(n, Q(0));
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  DenseMatrix gram = f.matrix;
  while (!basis.empty()) {
    const std::size_t m = basis.size();
    std::vector<Q> iso;
    bool found = false;
    for (int h = 1; h <= height_bound && !found; ++h)
      for (std::size_t s = 1; s <= m && !found; ++s)
        found = for_each_vector(m, h, s, [&](const std::vector<Q>& v) {
          Q q = 0;
          auto gv = gram_times(gram, v);
          for (std::size_t i = 0; i < m; ++i) q += v[i] * gv[i];
          if (q != 0) return false;
          iso = v;
          return true;
        });
    if (!found) {
      out.reason = "no isotropic vector of height <= " + std::to_string(height_bound);
      out.lagrangian.clear();
      return out;
    }
    auto gv = gram_times(gram, iso);
    std::size_t j = 0;
    while (gv[j] == 0) ++j;
    std::vector<Q> w(m, Q(0));
    w[j] = 1 / gv[j];
    auto gw = gram_times(gram, w);

    std::vector<Q> lifted(n, Q(0));
    for (std::size_t i = 0; i < m; ++i)
      if (iso[i] != 0)
        for (std::size_t t = 0; t < n; ++t) lifted[t] += iso[i] * basis[i][t];
    out.lagrangian.push_back(std::move(lifted));

    // Orthogonal complement of the hyperbolic plane span(iso, w).
    auto complement = kernel_basis(rref({to_sparse(gv), to_sparse(gw)}, m, Exec::serial));
    std::vector<std::vector<Q>> next_basis;
    std::vector<std::vector<Q>> local;
    for (const auto& c : complement) {
      auto x = to_dense(c, m);
      std::vector<Q> y(n, Q(0));
      for (std::size_t i = 0; i < m; ++i)
        if (x[i] != 0)
          for (std::size_t t = 0; t < n; ++t) y[t] += x[i] * basis[i][t];
      next_basis.push_back(std::move(y));
      local.push_back(std::move(x));
    }
    DenseMatrix next_gram(local.size(), std::vector<Q>(local.size()));
    for (std::size_t a = 0; a < local.size(); ++a) {
      auto ga = gram_times(gram, local[a]);
      for (std::size_t b = 0; b < local.size(); ++b) {
        Q s = 0;
        for (std::size_t i = 0; i < m; ++i) s += local[b][i] * ga[i];
        next_gram[a][b] = s;
      }
    }
    basis = std::move(next_basis);
    gram = std::move(next_gram);
  }
  if (!verify_lagrangian(f, out.lagrangian)) throw Error("assembled Lagrangian failed verification");
  out.metabolic = Metabolic::yes;
  out.reason = "explicit Lagrangian";
  return out;
}

BargeSullivanReport barge_sullivan_report(std::shared_ptr<const Cohomology> h,
                                          const FundamentalClass& fc,
                                          const std::optional<std::vector<Element>>& basis,
                                          int height_bound) {
  BargeSullivanReport r;
  r.form = intersection_form(std::move(h), fc, basis);
  r.witt = find_lagrangian(r.form, height_bound);
  r.witt_condition = r.witt.metabolic == Metabolic::yes ? Condition::holds : Condition::undetermined;
  r.signature_condition = r.witt.signature == 0 ? Condition::holds : Condition::fails;
  return r;
}

}  // namespace dgalab
