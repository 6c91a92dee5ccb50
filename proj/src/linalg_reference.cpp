#include "dgalab/linalg.hpp"

namespace dgalab::reference {

Echelon rref_dense(const DenseMatrix& input, std::size_t cols) {
  DenseMatrix m = input;
  std::size_t r = 0;
  Echelon out;
  out.cols = cols;
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
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) out.rows.push_back(to_sparse(m[i]));
  return out;
}

}  // namespace dgalab::reference
