#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "char_table.hpp"
#include "perm_group.hpp"

namespace conjchar {

namespace dixondetail {

struct ModP {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;  // row-major

/// Characteristic polynomial via Hessenberg reduction, coefficients low-first.
inline Vec char_poly(Mat A, const ModP& F) {
  const int n = static_cast<int>(A.size());
  // reduce to upper Hessenberg by similarity transformations
  for (int col = 0; col < n - 2; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (A[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      std::swap(A[piv], A[col + 1]);
      for (int r = 0; r < n; ++r) std::swap(A[r][piv], A[r][col + 1]);
    }
    std::uint64_t inv = F.inv(A[col + 1][col]);
    for (int r = col + 2; r < n; ++r) {
      if (!A[r][col]) continue;
      std::uint64_t f = F.mul(A[r][col], inv);
      for (int c = 0; c < n; ++c) A[r][c] = F.sub(A[r][c], F.mul(f, A[col + 1][c]));
      for (int rr = 0; rr < n; ++rr) A[rr][col + 1] = F.add(A[rr][col + 1], F.mul(f, A[rr][r]));
    }
  }
  // p_0 = 1; p_k = char poly of leading k x k block of the Hessenberg matrix
  std::vector<Vec> P(n + 1);
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // p_k(x) = (x - A[k-1][k-1]) p_{k-1}(x) - sum_{m} (prod of subdiagonal) A[i][k-1] ...
    Vec pk(k + 1, 0);
    for (int i = 0; i < k; ++i) pk[i + 1] = P[k - 1][i];
    for (int i = 0; i < k; ++i)
      pk[i] = F.sub(pk[i], F.mul(A[k - 1][k - 1], P[k - 1][i]));
    std::uint64_t run = 1;
    for (int m = k - 1; m >= 1; --m) {
      run = F.mul(run, A[m][m - 1]);
      if (!run) break;
      std::uint64_t coeff = F.mul(run, A[m - 1][k - 1]);
      if (!coeff) continue;
      for (int i = 0; i < m; ++i) pk[i] = F.sub(pk[i], F.mul(coeff, P[m - 1][i]));
    }
    P[k] = std::move(pk);
  }
  return P[n];
}

inline Mat nullspace(Mat A, const ModP& F) {
  const int n = static_cast<int>(A.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int pr = -1;
    for (int i = r; i < n; ++i)
      if (A[i][c]) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[pr], A[r]);
    std::uint64_t inv = F.inv(A[r][c]);
    for (int j = 0; j < n; ++j) A[r][j] = F.mul(A[r][j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == r || !A[i][c]) continue;
      std::uint64_t f = A[i][c];
      for (int j = 0; j < n; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  Mat basis;
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, 0);
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = F.sub(0, A[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dixondetail

/// Exact irreducible character table by the Dixon-Schneider method: class-algebra
/// structure constants, simultaneous eigenspace splitting over F_l with
/// l = 1 (mod exp G) and l > 2 sqrt(|G|), then lifting to cyclotomics by
/// discrete-Fourier multiplicity counting over the power maps.
inline CharTable dixon_schneider(const PermGroup& G, const Budget& budget = {},
                                 const std::string& name = "") {
  using namespace dixondetail;
  Classification cl = classify_elements(G, budget);
  const int k = static_cast<int>(cl.classes.size());
  if (k > budget.max_characters) throw BudgetError("class count exceeds Dixon budget");
  const long long n = cl.order;
  const int deg = G.degree();

  // Dixon prime
  long long ell = 0;
  {
    long long bound = 2 * static_cast<long long>(std::sqrt(static_cast<double>(n))) + 2;
    for (long long c = cl.exponent + 1;; c += cl.exponent)
      if (c > bound && is_prime(c)) {
        ell = c;
        break;
      }
  }
  const ModP F{static_cast<std::uint64_t>(ell)};
  std::uint64_t root;  // smallest primitive root mod ell
  {
    auto fac = factorize(ell - 1);
    for (root = 2;; ++root) {
      bool ok = true;
      for (auto& [q, e] : fac)
        if (F.pow(root, (ell - 1) / q) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
  }

  // class element lists + inverse classes + power-class tables
  std::vector<std::vector<std::string>> members(k);
  for (const auto& [key, id] : cl.element_class) members[id].push_back(key);
  std::vector<int> inverse_class(k);
  std::vector<std::vector<int>> power_class(k);  // class of rep^j, j = 0..order-1
  for (int m = 0; m < k; ++m) {
    const Permutation& rep = cl.classes[m].representative;
    inverse_class[m] = cl.element_class.at(rep.inverse().pack());
    long long o = cl.classes[m].element_order;
    power_class[m].resize(o);
    Permutation cur = Permutation::identity(deg);
    for (long long j = 0; j < o; ++j) {
      power_class[m][j] = cl.element_class.at(cur.pack());
      cur = cur.then(rep);
    }
  }

  // eigenspace splitting, class matrices cheapest-first
  std::vector<int> order_by_size;
  for (int i = 1; i < k; ++i) order_by_size.push_back(i);
  std::sort(order_by_size.begin(), order_by_size.end(), [&](int a, int b) {
    if (cl.classes[a].size != cl.classes[b].size) return cl.classes[a].size < cl.classes[b].size;
    return a < b;
  });

  std::vector<Mat> spaces;  // each: list of basis vectors (length k), M-invariant
  {
    Mat full;
    for (int i = 0; i < k; ++i) {
      Vec e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }

  auto all_split = [&] {
    for (const auto& s : spaces)
      if (s.size() > 1) return false;
    return true;
  };

  for (int ci : order_by_size) {
    if (all_split()) break;
    // M[j][m] = #{(x,y) in C_ci x C_j : x y = rep_m}
    Mat M(k, Vec(k, 0));
    for (int m = 0; m < k; ++m) {
      const Permutation rep = cl.classes[m].representative;
      for (const auto& xs : members[ci]) {
        Permutation x = Permutation::unpack(xs, deg);
        int j = cl.element_class.at(x.inverse().then(rep).pack());
        M[j][m] = F.add(M[j][m], 1);
      }
    }
    std::vector<Mat> next;
    for (auto& space : spaces) {
      const int d = static_cast<int>(space.size());
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Column-echelon basis: coordinates of a member vector are read off pivot rows.
      std::vector<int> pivot(d, -1);
      {
        // space rows are basis vectors; echelonize over F
        Mat B = space;
        int r = 0;
        for (int c = 0; c < k && r < d; ++c) {
          int pr = -1;
          for (int i = r; i < d; ++i)
            if (B[i][c]) {
              pr = i;
              break;
            }
          if (pr < 0) continue;
          std::swap(B[pr], B[r]);
          std::uint64_t inv = F.inv(B[r][c]);
          for (int j = 0; j < k; ++j) B[r][j] = F.mul(B[r][j], inv);
          for (int i = 0; i < d; ++i) {
            if (i == r || !B[i][c]) continue;
            std::uint64_t f = B[i][c];
            for (int j = 0; j < k; ++j) B[i][j] = F.sub(B[i][j], F.mul(f, B[r][j]));
          }
          pivot[r] = c;
          ++r;
        }
        if (r != d) throw ConsistencyError("eigenspace basis degenerated");
        space = std::move(B);
      }
      // restriction A: columns = coordinates of M * basis vectors
      Mat A(d, Vec(d, 0));
      for (int b = 0; b < d; ++b) {
        Vec img(k, 0);
        for (int row = 0; row < k; ++row) {
          std::uint64_t acc = 0;
          for (int m = 0; m < k; ++m)
            if (M[row][m] && space[b][m]) acc = F.add(acc, F.mul(M[row][m], space[b][m]));
          img[row] = acc;
        }
        for (int a = 0; a < d; ++a) A[a][b] = img[pivot[a]];
        // consistency: img must equal sum of coordinates * basis
        Vec rec(k, 0);
        for (int a = 0; a < d; ++a)
          if (A[a][b])
            for (int m = 0; m < k; ++m)
              if (space[a][m]) rec[m] = F.add(rec[m], F.mul(A[a][b], space[a][m]));
        if (rec != img) throw ConsistencyError("class matrix does not stabilize subspace");
      }
      Vec poly = char_poly(A, F);
      int found = 0;
      for (std::uint64_t lam = 0; lam < F.p; ++lam) {
        // Horner
        std::uint64_t v = 0;
        for (int i = d; i >= 0; --i) v = F.add(F.mul(v, lam), poly[i]);
        if (v) continue;
        Mat shifted(d, Vec(d));
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) shifted[i][j] = (i == j) ? F.sub(A[i][j], lam) : A[i][j];
        Mat kernel = nullspace(shifted, F);
        if (kernel.empty()) continue;
        Mat sub;
        for (auto& coords : kernel) {
          Vec v2(k, 0);
          for (int a = 0; a < d; ++a)
            if (coords[a])
              for (int m = 0; m < k; ++m)
                if (space[a][m]) v2[m] = F.add(v2[m], F.mul(coords[a], space[a][m]));
          sub.push_back(std::move(v2));
        }
        found += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
        if (found == d) break;
      }
      if (found != d) throw ConsistencyError("class matrix not diagonalizable over F_l");
    }
    spaces = std::move(next);
  }
  if (!all_split()) throw ConsistencyError("class matrices exhausted before full split");

  // each 1-dim space: central character omega, then degree and values mod l
  std::vector<std::uint64_t> class_size(k), inv_class_size(k);
  for (int m = 0; m < k; ++m) {
    class_size[m] = static_cast<std::uint64_t>(to_ll(cl.classes[m].size) % ell);
    inv_class_size[m] = F.inv(class_size[m]);
  }
  long long sqrt_n = static_cast<long long>(std::sqrt(static_cast<double>(n))) + 1;
  std::vector<Vec> values;  // values[chi][class] in F_l
  std::vector<long long> degrees;
  for (auto& space : spaces) {
    Vec w = space[0];
    if (!w[0]) throw ConsistencyError("central character vanishes on the identity class");
    std::uint64_t norm = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, norm);
    std::uint64_t s = 0;
    for (int m = 0; m < k; ++m)
      s = F.add(s, F.mul(F.mul(w[m], w[inverse_class[m]]), inv_class_size[m]));
    if (!s) throw ConsistencyError("degree equation degenerate");
    std::uint64_t target = F.mul(static_cast<std::uint64_t>(n % ell), F.inv(s));
    long long d = 0;
    for (long long c = 1; c <= sqrt_n; ++c)
      if (F.mul(c % ell, c % ell) == target) {
        d = c;
        break;
      }
    if (!d) throw ConsistencyError("no valid character degree");
    Vec x(k);
    for (int m = 0; m < k; ++m)
      x[m] = F.mul(F.mul(static_cast<std::uint64_t>(d % ell), w[m]), inv_class_size[m]);
    degrees.push_back(d);
    values.push_back(std::move(x));
  }

  // lift to cyclotomics: multiplicities of each zeta_o^s as eigenvalue counts
  CharTable T;
  T.name = name.empty() ? ("group of order " + std::to_string(n)) : name;
  T.order = n;
  T.classes = class_infos(cl);
  for (size_t chi = 0; chi < values.size(); ++chi) {
    std::vector<Cyc> row(k);
    for (int m = 0; m < k; ++m) {
      long long o = cl.classes[m].element_order;
      std::uint64_t z = F.pow(root, (ell - 1) / o);
      std::uint64_t zinv = F.inv(z);
      std::uint64_t oinv = F.inv(static_cast<std::uint64_t>(o % ell));
      std::vector<std::pair<long long, Fraction>> terms;
      long long total = 0;
      for (long long sdx = 0; sdx < o; ++sdx) {
        std::uint64_t acc = 0, zp = F.pow(zinv, sdx), cur = 1;
        for (long long j = 0; j < o; ++j) {
          acc = F.add(acc, F.mul(values[chi][power_class[m][j]], cur));
          cur = F.mul(cur, zp);
        }
        std::uint64_t c = F.mul(acc, oinv);
        if (static_cast<long long>(c) > degrees[chi])
          throw ConsistencyError("eigenvalue multiplicity out of range");
        if (c) terms.emplace_back(sdx, Fraction(static_cast<long long>(c)));
        total += static_cast<long long>(c);
      }
      if (total != degrees[chi])
        throw ConsistencyError("eigenvalue multiplicities do not sum to the degree");
      row[m] = Cyc::from_terms(o, terms);
    }
    T.irr.push_back(std::move(row));
  }
  sort_rows_canonical(T);
  auto R = verify_table(T);
  if (!R.ok) throw ConsistencyError("Dixon table failed verification: " + R.first());
  return T;
}

}  // namespace conjchar
