#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "base.hpp"
#include "numeric.hpp"

namespace conjchar {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  IntMatrix multiply(const IntMatrix& o) const {
    if (cols != o.rows) throw InputError("matrix dimension mismatch");
    IntMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const BigInt& v = at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) = default;
};

/// U * A * V = diag(d) with d_1 | d_2 | ... and U, V unimodular.
struct SmithDecomposition {
  std::vector<BigInt> diagonal;
  IntMatrix U, V;
};

inline SmithDecomposition smith_normal_form(IntMatrix A) {
  const int n = A.rows, m = A.cols;
  IntMatrix U = IntMatrix::identity(n), V = IntMatrix::identity(m);
  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < m; ++j) std::swap(A.at(r1, j), A.at(r2, j));
    for (int j = 0; j < n; ++j) std::swap(U.at(r1, j), U.at(r2, j));
  };
  auto swap_cols = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < n; ++i) std::swap(A.at(i, c1), A.at(i, c2));
    for (int i = 0; i < m; ++i) std::swap(V.at(i, c1), V.at(i, c2));
  };
  auto row_sub = [&](int r, int src, const BigInt& q) {  // row r -= q * row src
    if (q == 0) return;
    for (int j = 0; j < m; ++j) A.at(r, j) -= q * A.at(src, j);
    for (int j = 0; j < n; ++j) U.at(r, j) -= q * U.at(src, j);
  };
  auto col_sub = [&](int c, int src, const BigInt& q) {  // col c -= q * col src
    if (q == 0) return;
    for (int i = 0; i < n; ++i) A.at(i, c) -= q * A.at(i, src);
    for (int i = 0; i < m; ++i) V.at(i, c) -= q * V.at(i, src);
  };
  auto negate_row = [&](int r) {
    for (int j = 0; j < m; ++j) A.at(r, j) = -A.at(r, j);
    for (int j = 0; j < n; ++j) U.at(r, j) = -U.at(r, j);
  };

  int t = 0;
  while (t < n && t < m) {
    // pivot: minimal nonzero absolute value, ties by (row, col)
    int pr = -1, pc = -1;
    BigInt best;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j) {
        if (A.at(i, j) == 0) continue;
        BigInt v = boost::multiprecision::abs(A.at(i, j));
        if (pr < 0 || v < best) pr = i, pc = j, best = v;
      }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (A.at(i, t) == 0) continue;
        BigInt q = A.at(i, t) / A.at(t, t);
        row_sub(i, t, q);
        if (A.at(i, t) != 0) {  // remainder becomes the new, smaller pivot
          swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < m; ++j) {
        if (A.at(t, j) == 0) continue;
        BigInt q = A.at(t, j) / A.at(t, t);
        col_sub(j, t, q);
        if (A.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: pivot must divide every remaining entry
        bool fixed = false;
        for (int i = t + 1; i < n && !fixed; ++i)
          for (int j = t + 1; j < m && !fixed; ++j)
            if (A.at(i, j) % A.at(t, t) != 0) {
              row_sub(t, i, BigInt(-1));  // add row i to row t
              fixed = true;
            }
        if (fixed) clean = false;
      }
    }
    if (A.at(t, t) < 0) negate_row(t);
    ++t;
  }
  SmithDecomposition S;
  S.diagonal.resize(std::min(n, m));
  for (int i = 0; i < std::min(n, m); ++i) S.diagonal[i] = A.at(i, i);
  S.U = std::move(U);
  S.V = std::move(V);
  return S;
}

inline BigInt elementary_divisor_largest(const IntMatrix& A) {
  if (A.rows != A.cols) throw InputError("matrix is not square");
  auto S = smith_normal_form(A);
  if (S.diagonal.empty() || S.diagonal.back() == 0) throw InputError("matrix is singular");
  return S.diagonal.back();
}

/// Fraction-free determinant (Bareiss).
inline BigInt det_bareiss(IntMatrix A) {
  if (A.rows != A.cols) throw InputError("matrix is not square");
  int n = A.rows;
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (A.at(t, t) == 0) {
      int r = -1;
      for (int i = t + 1; i < n; ++i)
        if (A.at(i, t) != 0) {
          r = i;
          break;
        }
      if (r < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(t, j), A.at(r, j));
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        A.at(i, j) = (A.at(i, j) * A.at(t, t) - A.at(i, t) * A.at(t, j)) / prev;
    prev = A.at(t, t);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : -A.at(n - 1, n - 1);
}

/// Number of x (mod m) with A x = b (mod m); exact, 0 when inconsistent.
inline BigInt count_solutions_mod(const IntMatrix& A, const std::vector<BigInt>& b, const BigInt& m) {
  if (static_cast<int>(b.size()) != A.rows) throw InputError("rhs length mismatch");
  auto S = smith_normal_form(A);
  std::vector<BigInt> c(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.rows; ++j) c[i] += S.U.at(i, j) * b[j];
    c[i] %= m;
    if (c[i] < 0) c[i] += m;
  }
  int mn = std::min(A.rows, A.cols);
  BigInt total = 1;
  for (int i = 0; i < mn; ++i) {
    BigInt d = S.diagonal[i] % m;
    BigInt g = big_gcd(d, m);  // gcd(0, m) = m
    if (c[i] % g != 0) return 0;
    total *= g;
  }
  for (int i = mn; i < A.rows; ++i)
    if (c[i] != 0) return 0;
  for (int j = mn; j < A.cols; ++j) total *= m;
  return total;
}

/// Text format: first line "rows cols", then whitespace-separated entries row-major.
inline IntMatrix load_matrix(std::istream& in) {
  int r, c;
  if (!(in >> r >> c) || r < 0 || c < 0) throw InputError("matrix header must be 'rows cols'");
  IntMatrix M(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      std::string tok;
      if (!(in >> tok)) throw InputError("matrix entry missing at row " + std::to_string(i));
      try {
        M.at(i, j) = BigInt(tok);
      } catch (const std::exception&) {
        throw InputError("bad matrix entry '" + tok + "'");
      }
    }
  return M;
}

inline void save_matrix(const IntMatrix& M, std::ostream& out) {
  out << M.rows << ' ' << M.cols << '\n';
  for (int i = 0; i < M.rows; ++i) {
    for (int j = 0; j < M.cols; ++j) out << (j ? " " : "") << M.at(i, j);
    out << '\n';
  }
}

}  // namespace conjchar
