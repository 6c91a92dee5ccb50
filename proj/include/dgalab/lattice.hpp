#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dgalab/polynomial.hpp"
#include "dgalab/rational.hpp"

namespace dgalab {

// Multiplicative relation ∏ u^e = value among unknowns known to be nonzero. Exponents
// may be negative.
struct Relation {
  std::vector<std::pair<Var, long>> exponents;  // sorted by variable, nonzero entries
  Q value = 1;
};

// Integer row span of a set of relations, kept in Hermite normal form. Every row
// operation carries the relation values along, so each row is itself a valid relation.
class RelationLattice {
 public:
  void add(const Relation& r);

  // Echelonizes; returns false when a row reduces to 1 = value with value ≠ 1, i.e. the
  // relations have no common solution.
  bool reduce();

  const std::vector<Var>& columns() const { return columns_; }
  std::vector<Relation> rows() const;

  // Smallest k > 0 with k·e in the lattice, and the value V of that row: m^k = V for the
  // power product m with exponent vector e. Requires reduce() to have succeeded.
  std::optional<std::pair<long, Q>> power_of(const std::vector<std::pair<Var, long>>& e) const;

 private:
  struct Row {
    std::vector<long> e;
    Q value;
  };
  std::size_t column_of(Var v);
  std::vector<Var> columns_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;  // pivot column per row after reduce()
};

}  // namespace dgalab
