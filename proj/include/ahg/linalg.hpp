#pragma once

#include "ahg/numeric.hpp"

#include <optional>
#include <vector>

namespace ahg {

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(QMat& M) {
  int rows = static_cast<int>(M.rows());
  int cols = static_cast<int>(M.cols());
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (sgn(M(r, c)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) M.row(piv).swap(M.row(row));
    Rat lead = M(row, c);
    for (int cc = c; cc < cols; ++cc) M(row, cc) /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == row || sgn(M(r, c)) == 0) continue;
      Rat f = M(r, c);
      for (int cc = c; cc < cols; ++cc) M(r, cc) -= f * M(row, cc);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

/// Basis of the right nullspace of M, one vector per free column, in
/// ascending free-column order (deterministic).
inline std::vector<QVec> nullspace(QMat M) {
  int cols = static_cast<int>(M.cols());
  std::vector<int> pivots = rref(M);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> out;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v = QVec::Zero(cols);
    v[c] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M(r, c);
    out.push_back(v);
  }
  return out;
}

/// Solves M x = b; nullopt when inconsistent (any solution returned).
inline std::optional<QVec> solve_linear(QMat M, QVec b) {
  int rows = static_cast<int>(M.rows());
  int cols = static_cast<int>(M.cols());
  QMat Aug(rows, cols + 1);
  Aug.leftCols(cols) = M;
  Aug.col(cols) = b;
  std::vector<int> pivots = rref(Aug);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == cols) return std::nullopt;
  QVec x = QVec::Zero(cols);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = Aug(r, cols);
  return x;
}

}  // namespace ahg
