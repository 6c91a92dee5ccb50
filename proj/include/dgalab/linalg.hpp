#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dgalab/rational.hpp"

namespace dgalab {

// Sorted by column, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Q>>;
using DenseMatrix = std::vector<std::vector<Q>>;

enum class Exec { serial, parallel };

// Reduced row echelon form of a row space: rows[i] has a 1 at pivots[i] and 0 at
// every other pivot column. Unique for a given row space, so any elimination order
// produces the same object.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseVec> rows;

  std::size_t rank() const { return pivots.size(); }
  // v minus its projection onto the row space along the pivot coordinates. When
  // `coefficients` is given it receives the multiple of each row that was removed.
  SparseVec reduce(const SparseVec& v, std::vector<Q>* coefficients = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
};

// Fraction-free sparse Gauss-Jordan: rows are scaled to primitive integer vectors and
// eliminated column by column; row updates run under OpenMP when exec is parallel.
Echelon rref(const std::vector<SparseVec>& rows, std::size_t cols, Exec exec = Exec::parallel);

// Basis of {x : M x = 0} for the matrix whose row space is given in echelon form,
// one vector per free column (that coordinate is 1).
std::vector<SparseVec> kernel_basis(const Echelon& e);

// Solves M x = b where M has the given rows; nullopt when inconsistent. Free variables are 0.
std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, std::size_t cols,
                               const SparseVec& rhs, Exec exec = Exec::parallel);

SparseVec to_sparse(const std::vector<Q>& dense);
std::vector<Q> to_dense(const SparseVec& v, std::size_t size);

// Transpose of a matrix given by rows with `cols` columns.
std::vector<SparseVec> transpose(const std::vector<SparseVec>& rows, std::size_t cols);

namespace reference {

// Textbook dense Gauss-Jordan over Q, first-nonzero pivoting. Kept as a test oracle and
// benchmark baseline for the sparse kernel.
Echelon rref_dense(const DenseMatrix& m, std::size_t cols);

}  // namespace reference

}  // namespace dgalab
