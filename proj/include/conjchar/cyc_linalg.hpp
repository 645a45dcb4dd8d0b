#pragma once

#include <vector>

#include "cyclotomic.hpp"

namespace conjchar {

using CycVec = std::vector<Cyc>;
using CycMat = std::vector<CycVec>;

/// Reduced basis of {v : v M = 0} by exact elimination over Q(zeta);
/// deterministic pivoting (first nonzero column, lowest row).
inline std::vector<CycVec> nullspace_left(const CycMat& M) {
  if (M.empty()) return {};
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  // v M = 0  <=>  M^t v^t = 0: eliminate A = M^t (cols x rows), unknowns = v
  CycMat A(cols, CycVec(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A[j][i] = M[i][j];
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < rows && r < cols; ++c) {
    int pr = -1;
    for (int i = r; i < cols; ++i)
      if (!A[i][c].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[pr], A[r]);
    Cyc inv = A[r][c].inverse();
    for (int j = 0; j < rows; ++j) A[r][j] = A[r][j] * inv;
    for (int i = 0; i < cols; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Cyc f = A[i][c];
      for (int j = 0; j < rows; ++j) A[i][j] = A[i][j] - f * A[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(rows, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<CycVec> basis;
  for (int c = 0; c < rows; ++c) {
    if (is_pivot[c]) continue;
    CycVec v(rows, Cyc(0));
    v[c] = Cyc(1);
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -A[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves c M = rhs for a square invertible M.
inline CycVec solve_left(const CycMat& M, const CycVec& rhs) {
  const int n = static_cast<int>(M.size());
  // M^t c^t = rhs^t
  CycMat aug(n, CycVec(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = M[j][i];
    aug[i][n] = rhs[i];
  }
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int i = col; i < n; ++i)
      if (!aug[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) throw InputError("matrix is singular");
    std::swap(aug[pr], aug[col]);
    Cyc inv = aug[col][col].inverse();
    for (int j = col; j <= n; ++j) aug[col][j] = aug[col][j] * inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      Cyc f = aug[i][col];
      for (int j = col; j <= n; ++j) aug[i][j] = aug[i][j] - f * aug[col][j];
    }
  }
  CycVec c(n);
  for (int i = 0; i < n; ++i) c[i] = aug[i][n];
  return c;
}

}  // namespace conjchar
