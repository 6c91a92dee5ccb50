#include "dgalab/linalg.hpp"

#include <algorithm>
#include <map>

namespace dgalab {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Z>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Z g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseVec& v) {
  Z l = 1;
  for (const auto& [c, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow row;
  row.reserve(v.size());
  for (const auto& [c, q] : v) {
    Z x = q.get_num() * (l / q.get_den());
    row.emplace_back(c, std::move(x));
  }
  make_primitive(row);
  return row;
}

Z entry_at(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : Z(0);
}

// target := a·target − b·pivot, where the entry of `pivot` at col is a and of target is b.
void eliminate(IntRow& target, const IntRow& pivot, std::size_t col) {
  Z a = entry_at(pivot, col);
  Z b = entry_at(target, col);
  if (b == 0) return;
  Z g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto i = target.begin();
  auto j = pivot.begin();
  while (i != target.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != target.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == target.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Z v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

}  // namespace

Echelon rref(const std::vector<SparseVec>& input, std::size_t cols, Exec exec) {
  const bool parallel = exec == Exec::parallel;
  std::vector<IntRow> rows;
  rows.reserve(input.size());
  for (const auto& v : input)
    if (!v.empty()) rows.push_back(to_int_row(v));

  std::map<std::size_t, std::vector<std::size_t>> by_lead;
  for (std::size_t r = 0; r < rows.size(); ++r) by_lead[rows[r].front().first].push_back(r);

  std::vector<IntRow> echelon;
  std::vector<std::size_t> pivots;
  while (!by_lead.empty()) {
    auto node = by_lead.extract(by_lead.begin());
    const std::size_t col = node.key();
    auto& group = node.mapped();
    auto best = std::min_element(group.begin(), group.end(), [&](std::size_t x, std::size_t y) {
      if (rows[x].size() != rows[y].size()) return rows[x].size() < rows[y].size();
      return x < y;
    });
    const std::size_t pivot = *best;
    group.erase(best);
    const long n = static_cast<long>(group.size());
#pragma omp parallel for schedule(dynamic) if (parallel && n > 8)
    for (long k = 0; k < n; ++k) eliminate(rows[group[static_cast<std::size_t>(k)]], rows[pivot], col);
    for (auto r : group)
      if (!rows[r].empty()) by_lead[rows[r].front().first].push_back(r);
    pivots.push_back(col);
    echelon.push_back(std::move(rows[pivot]));
  }

  // Back substitution: clear every pivot column above its pivot row.
  for (std::size_t k = echelon.size(); k-- > 0;) {
    const long n = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic) if (parallel && n > 8)
    for (long i = 0; i < n; ++i) eliminate(echelon[static_cast<std::size_t>(i)], echelon[k], pivots[k]);
  }

  Echelon out;
  out.cols = cols;
  out.pivots = std::move(pivots);
  out.rows.resize(echelon.size());
  const long m = static_cast<long>(echelon.size());
#pragma omp parallel for schedule(dynamic) if (parallel && m > 8)
  for (long i = 0; i < m; ++i) {
    const auto& row = echelon[static_cast<std::size_t>(i)];
    const Z& lead = row.front().second;
    SparseVec v;
    v.reserve(row.size());
    for (const auto& [c, x] : row) {
      Q q(x, lead);
      q.canonicalize();
      v.emplace_back(c, std::move(q));
    }
    out.rows[static_cast<std::size_t>(i)] = std::move(v);
  }
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v, std::vector<Q>* coefficients) const {
  std::map<std::size_t, Q> acc;
  for (const auto& [c, q] : v) acc[c] = q;
  if (coefficients) coefficients->assign(rows.size(), Q(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto it = acc.find(pivots[i]);
    if (it == acc.end()) continue;
    Q factor = it->second;
    if (coefficients) (*coefficients)[i] = factor;
    for (const auto& [c, q] : rows[i]) {
      auto [slot, inserted] = acc.try_emplace(c, 0);
      slot->second -= factor * q;
      if (slot->second == 0) acc.erase(slot);
    }
  }
  return SparseVec(acc.begin(), acc.end());
}

std::vector<SparseVec> kernel_basis(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::map<std::size_t, Q> v;
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      for (const auto& [c, q] : e.rows[i]) {
        if (c == f) {
          v[e.pivots[i]] = -q;
          break;
        }
      }
    }
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, std::size_t cols,
                               const SparseVec& rhs, Exec exec) {
  // Augmented system: row i of [M | b].
  std::vector<SparseVec> aug = rows;
  aug.resize(std::max(aug.size(), rhs.empty() ? std::size_t{0} : rhs.back().first + 1));
  for (const auto& [r, q] : rhs) aug[r].emplace_back(cols, q);
  Echelon e = rref(aug, cols + 1, exec);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  SparseVec x;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const auto& row = e.rows[i];
    if (!row.empty() && row.back().first == cols) x.emplace_back(e.pivots[i], row.back().second);
  }
  return x;
}

SparseVec to_sparse(const std::vector<Q>& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  return v;
}

std::vector<Q> to_dense(const SparseVec& v, std::size_t size) {
  std::vector<Q> out(size, Q(0));
  for (const auto& [c, q] : v) out[c] = q;
  return out;
}

std::vector<SparseVec> transpose(const std::vector<SparseVec>& rows, std::size_t cols) {
  std::vector<SparseVec> out(cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, q] : rows[r]) out[c].emplace_back(r, q);
  return out;
}

}  // namespace dgalab
