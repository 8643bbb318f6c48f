#pragma once

#include <vector>

#include "polymux/formulas.hpp"

namespace polymux {

// Rank of an integer matrix by fraction-free elimination: rows are combined
// with cross-multiplication only, so every intermediate stays an exact
// integer.  Entry growth is irrelevant at the handful-of-rows scale used
// for the spanning check.
inline int matrix_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Int a = m[rank][col];
      Int b = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
    }
    ++rank;
  }
  return rank;
}

}  // namespace polymux
