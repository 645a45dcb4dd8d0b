#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "conjchar/int_matrix.hpp"

using namespace conjchar;

namespace {

IntMatrix from_values(int r, int c, std::initializer_list<long long> vals) {
  IntMatrix M(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.at(i, j) = *it++;
  return M;
}

/// gcd of all k x k minors, the independent route to the elementary divisors.
BigInt minor_gcd(const IntMatrix& A, int k) {
  std::vector<int> rows(k), cols(k);
  BigInt g = 0;
  auto minor_det = [&]() {
    IntMatrix M(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) M.at(i, j) = A.at(rows[i], cols[j]);
    return det_bareiss(M);
  };
  auto choose = [&](auto&& self, std::vector<int>& idx, int pos, int lo, int n, auto&& done) -> void {
    if (pos == k) {
      done();
      return;
    }
    for (int v = lo; v < n; ++v) {
      idx[pos] = v;
      self(self, idx, pos + 1, v + 1, n, done);
    }
  };
  choose(choose, rows, 0, 0, A.rows, [&] {
    choose(choose, cols, 0, 0, A.cols, [&] { g = big_gcd(g, minor_det()); });
  });
  return g;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto d46 = from_values(2, 2, {4, 0, 0, 6});
  CHECK(smith_normal_form(d46).diagonal == std::vector<BigInt>{2, 12});
  CHECK(smith_normal_form(IntMatrix::identity(4)).diagonal == std::vector<BigInt>(4, 1));
  auto A = from_values(3, 3, {3, 1, 1, 1, 3, 1, 1, 1, 5});
  CHECK(smith_normal_form(A).diagonal == std::vector<BigInt>{1, 2, 18});
  CHECK(elementary_divisor_largest(A) == 18);
  CHECK(elementary_divisor_largest(from_values(2, 2, {2, 0, 0, 3})) == 6);
  CHECK(elementary_divisor_largest(from_values(2, 2, {2, 0, 0, 2})) == 2);
  CHECK_THROWS_AS(elementary_divisor_largest(from_values(2, 2, {1, 1, 1, 1})), InputError);
  CHECK_THROWS_AS(elementary_divisor_largest(from_values(2, 3, {1, 1, 1, 1, 1, 1})), InputError);
}

TEST_CASE("smith normal form against the gcd-of-minors oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-9, 9), dim(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMatrix A(r, c);
    for (auto& v : A.a) v = entry(rng);
    auto S = smith_normal_form(A);
    // reconstruction and divisibility chain
    IntMatrix D = S.U.multiply(A).multiply(S.V);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        CHECK(D.at(i, j) == (i == j && i < static_cast<int>(S.diagonal.size()) ? S.diagonal[i]
                                                                               : BigInt(0)));
    for (size_t i = 0; i + 1 < S.diagonal.size(); ++i)
      if (S.diagonal[i + 1] != 0) {
        CHECK(S.diagonal[i] != 0);
        CHECK(S.diagonal[i + 1] % S.diagonal[i] == 0);
      }
    BigInt du = det_bareiss(S.U), dv = det_bareiss(S.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // divisor products match gcds of minors
    BigInt prod = 1;
    for (size_t k = 1; k <= S.diagonal.size(); ++k) {
      prod *= S.diagonal[k - 1];
      CHECK(prod == minor_gcd(A, static_cast<int>(k)));
      if (prod == 0) break;
    }
  }
}

TEST_CASE("count_solutions_mod against enumeration") {
  auto two = from_values(1, 1, {2});
  CHECK(count_solutions_mod(two, {BigInt(0)}, 9) == 1);  // 2x = 0 mod 9 forces x = 0
  auto zero = from_values(1, 1, {0});
  CHECK(count_solutions_mod(zero, {BigInt(0)}, 25) == 25);
  CHECK(count_solutions_mod(IntMatrix::identity(3), {BigInt(1), BigInt(2), BigInt(3)}, 8) == 1);
  CHECK(count_solutions_mod(zero, {BigInt(3)}, 9) == 0);  // inconsistent

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (long long m : {4LL, 9LL, 25LL, 8LL}) {
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + trial % 3, c = 1 + (trial / 3) % 3;
      IntMatrix A(r, c);
      for (auto& v : A.a) v = entry(rng);
      std::vector<BigInt> b(r);
      for (auto& v : b) v = entry(rng);
      long long count = 0;
      std::vector<long long> x(c);
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == c) {
          for (int i = 0; i < r; ++i) {
            BigInt s = 0;
            for (int j = 0; j < c; ++j) s += A.at(i, j) * x[j];
            if ((s - b[i]) % m != 0) return;
          }
          ++count;
          return;
        }
        for (x[pos] = 0; x[pos] < m; ++x[pos]) self(self, pos + 1);
      };
      rec(rec, 0);
      INFO("m=" << m << " trial=" << trial);
      CHECK(count_solutions_mod(A, b, m) == count);
    }
  }
}

TEST_CASE("determinants") {
  CHECK(det_bareiss(from_values(3, 3, {3, 1, 1, 1, 3, 1, 1, 1, 5})) == 36);
  CHECK(det_bareiss(from_values(2, 2, {0, 1, 1, 0})) == -1);
  CHECK(det_bareiss(from_values(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(det_bareiss(IntMatrix::identity(5)) == 1);
}

TEST_CASE("matrix text io") {
  auto A = from_values(3, 3, {3, 1, 1, 1, 3, 1, 1, 1, 5});
  std::ostringstream os;
  save_matrix(A, os);
  CHECK(os.str() == "3 3\n3 1 1\n1 3 1\n1 1 5\n");
  std::istringstream is(os.str());
  CHECK(load_matrix(is) == A);
  std::istringstream bad("2 2\n1 2 3");
  CHECK_THROWS_AS(load_matrix(bad), InputError);
  std::istringstream junk("2 2\n1 2 x 4");
  CHECK_THROWS_AS(load_matrix(junk), InputError);
}
