#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "char_table.hpp"

namespace conjchar {

/// All partitions of n, parts descending (enumeration order is not part of any contract).
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace mndetail {

inline std::vector<int> beta_set(const std::vector<int>& lambda) {
  int L = static_cast<int>(lambda.size());
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = lambda[i] + (L - 1 - i);
  return b;  // strictly decreasing
}

inline std::vector<int> partition_of_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int L = static_cast<int>(b.size());
  std::vector<int> lambda;
  for (int i = 0; i < L; ++i) {
    int part = b[i] - (L - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

struct MnMemo {
  std::map<std::pair<std::vector<int>, int>, long long> cache;
};

/// Murnaghan-Nakayama: sum over rim hooks of length mu[idx], sign by leg length.
inline long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, int idx,
                        MnMemo& memo) {
  if (lambda.empty()) return 1;
  auto key = std::make_pair(lambda, idx);
  auto it = memo.cache.find(key);
  if (it != memo.cache.end()) return it->second;
  int r = mu[idx];
  std::vector<int> b = beta_set(lambda);
  long long total = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    int target = b[i] - r;
    if (target < 0) continue;
    bool clash = false;
    int height = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == target) clash = true;
      if (b[j] > target && b[j] < b[i]) ++height;
    }
    if (clash) continue;
    std::vector<int> b2 = b;
    b2[i] = target;
    long long sub = mn_rec(partition_of_beta(std::move(b2)), mu, idx + 1, memo);
    total += (height % 2) ? -sub : sub;
  }
  memo.cache.emplace(std::move(key), total);
  return total;
}

inline std::vector<int> power_type(const std::vector<int>& mu, long long q) {
  std::vector<int> t;
  for (int part : mu) {
    long long g = ll_gcd(part, q);
    for (long long i = 0; i < g; ++i) t.push_back(static_cast<int>(part / g));
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

/// Lexicographically minimal permutation with the given cycle type:
/// cycles ascending on consecutive blocks, each block a forward cycle.
inline Permutation min_rep_of_type(const std::vector<int>& mu, int n) {
  std::vector<int> parts = mu;
  std::sort(parts.begin(), parts.end());
  std::vector<Point> img(n);
  int a = 0;
  for (int len : parts) {
    for (int i = 0; i < len - 1; ++i) img[a + i] = static_cast<Point>(a + i + 1);
    img[a + len - 1] = static_cast<Point>(a);
    a += len;
  }
  return Permutation(std::move(img));
}

}  // namespace mndetail

/// chi_lambda(mu) for partitions of the same n.
inline long long mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
  mndetail::MnMemo memo;
  return mndetail::mn_rec(lambda, mu, 0, memo);
}

/// Exact character table of S_n by the Murnaghan-Nakayama rule, canonical orders.
inline CharTable mn_symmetric_table(int n) {
  if (n < 1 || n > 20) throw InputError("mn_symmetric_table supports 1 <= n <= 20");
  auto parts_list = partitions(n);

  struct Col {
    std::vector<int> type;
    long long order;
    BigInt size;
    BigInt centralizer;
  };
  BigInt nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  std::vector<Col> cols;
  for (const auto& mu : parts_list) {
    Col c;
    c.type = mu;
    c.order = 1;
    for (int p : mu) c.order = ll_lcm(c.order, p);
    BigInt z = 1;
    int run = 1;
    for (size_t i = 0; i < mu.size(); ++i) {
      z *= mu[i];
      if (i + 1 < mu.size() && mu[i + 1] == mu[i]) {
        ++run;
        z *= run;
      } else {
        run = 1;
      }
    }
    c.centralizer = z;
    c.size = nfact / z;
    cols.push_back(std::move(c));
  }
  std::sort(cols.begin(), cols.end(), [&](const Col& a, const Col& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return mndetail::min_rep_of_type(a.type, n) < mndetail::min_rep_of_type(b.type, n);
  });
  std::map<std::vector<int>, int> col_index;
  for (size_t j = 0; j < cols.size(); ++j) col_index[cols[j].type] = static_cast<int>(j);

  long long expo = 1;
  for (int i = 2; i <= n; ++i) expo = ll_lcm(expo, i);

  CharTable T;
  T.name = "sym:" + std::to_string(n);
  T.order = nfact;
  for (const auto& c : cols) {
    ClassInfo ci;
    ci.size = c.size;
    ci.centralizer = c.centralizer;
    ci.element_order = c.order;
    for (long long q : prime_divisors(expo))
      ci.power_map[q] = col_index.at(mndetail::power_type(c.type, q));
    T.classes.push_back(std::move(ci));
  }
  // per-column memoization is shared across all rows
  std::vector<std::vector<long long>> vals(parts_list.size(),
                                           std::vector<long long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    mndetail::MnMemo memo;
    for (size_t i = 0; i < parts_list.size(); ++i)
      vals[i][j] = mndetail::mn_rec(parts_list[i], cols[j].type, 0, memo);
  }
  for (size_t i = 0; i < parts_list.size(); ++i) {
    std::vector<Cyc> row;
    row.reserve(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) row.emplace_back(vals[i][j]);
    T.irr.push_back(std::move(row));
  }
  sort_rows_canonical(T);
  auto R = verify_table(T);
  if (!R.ok) throw ConsistencyError("MN table failed verification: " + R.first());
  return T;
}

}  // namespace conjchar
