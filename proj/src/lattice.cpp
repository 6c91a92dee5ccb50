#include "dgalab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "dgalab/errors.hpp"

namespace dgalab {

std::size_t RelationLattice::column_of(Var v) {
  auto it = std::find(columns_.begin(), columns_.end(), v);
  if (it != columns_.end()) return static_cast<std::size_t>(it - columns_.begin());
  columns_.push_back(v);
  for (auto& r : rows_) r.e.push_back(0);
  return columns_.size() - 1;
}

void RelationLattice::add(const Relation& r) {
  for (const auto& [v, e] : r.exponents) column_of(v);
  Row row{std::vector<long>(columns_.size(), 0), r.value};
  for (const auto& [v, e] : r.exponents) row.e[column_of(v)] += e;
  rows_.push_back(std::move(row));
  pivots_.clear();
}

namespace {

// row_i ← row_i − q·row_j, with value_i ← value_i / value_j^q.
void subtract(std::vector<long>& ei, Q& vi, const std::vector<long>& ej, const Q& vj, long q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < ei.size(); ++c) ei[c] -= q * ej[c];
  vi /= pow(vj, q);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool RelationLattice::reduce() {
  pivots_.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns_.size() && r < rows_.size(); ++c) {
    while (true) {
      std::size_t best = rows_.size();
      for (std::size_t i = r; i < rows_.size(); ++i)
        if (rows_[i].e[c] != 0 &&
            (best == rows_.size() || std::labs(rows_[i].e[c]) < std::labs(rows_[best].e[c])))
          best = i;
      if (best == rows_.size()) break;
      std::swap(rows_[r], rows_[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows_.size(); ++i) {
        if (rows_[i].e[c] == 0) continue;
        subtract(rows_[i].e, rows_[i].value, rows_[r].e, rows_[r].value,
                 rows_[i].e[c] / rows_[r].e[c]);
        if (rows_[i].e[c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows_.size() && rows_[r].e[c] != 0) {
      if (rows_[r].e[c] < 0) {
        for (auto& x : rows_[r].e) x = -x;
        rows_[r].value = 1 / rows_[r].value;
      }
      for (std::size_t i = 0; i < r; ++i)
        subtract(rows_[i].e, rows_[i].value, rows_[r].e, rows_[r].value,
                 floor_div(rows_[i].e[c], rows_[r].e[c]));
      pivots_.push_back(c);
      ++r;
    }
  }
  for (std::size_t i = r; i < rows_.size(); ++i)
    if (rows_[i].value != 1) return false;
  rows_.resize(r);
  return true;
}

std::vector<Relation> RelationLattice::rows() const {
  std::vector<Relation> out;
  for (const auto& row : rows_) {
    Relation rel;
    rel.value = row.value;
    std::vector<std::pair<Var, long>> ex;
    for (std::size_t c = 0; c < columns_.size(); ++c)
      if (row.e[c] != 0) ex.emplace_back(columns_[c], row.e[c]);
    std::sort(ex.begin(), ex.end());
    rel.exponents = std::move(ex);
    out.push_back(std::move(rel));
  }
  return out;
}

std::optional<std::pair<long, Q>> RelationLattice::power_of(
    const std::vector<std::pair<Var, long>>& e) const {
  if (pivots_.size() != rows_.size()) throw Error("relation lattice used before reduce()");
  std::vector<Q> target(columns_.size(), 0);
  for (const auto& [v, x] : e) {
    auto it = std::find(columns_.begin(), columns_.end(), v);
    if (it == columns_.end()) {
      if (x != 0) return std::nullopt;
      continue;
    }
    target[static_cast<std::size_t>(it - columns_.begin())] += x;
  }
  std::vector<Q> coeff(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    coeff[i] = target[c] / rows_[i].e[c];
    if (coeff[i] == 0) continue;
    for (std::size_t k = 0; k < columns_.size(); ++k) target[k] -= coeff[i] * rows_[i].e[k];
  }
  for (const auto& t : target)
    if (t != 0) return std::nullopt;
  Z k = 1;
  for (const auto& x : coeff) {
    Z den = x.get_den();
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), den.get_mpz_t());
  }
  if (!k.fits_slong_p()) return std::nullopt;
  Q value = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Q m = coeff[i] * k;
    value *= pow(rows_[i].value, m.get_num().get_si());
  }
  return std::make_pair(k.get_si(), value);
}

}  // namespace dgalab
