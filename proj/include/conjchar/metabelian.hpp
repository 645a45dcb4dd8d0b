#pragma once

#include <array>
#include <string>
#include <vector>

#include "int_matrix.hpp"

namespace conjchar {

/// The order-3^9 5^5 group G = (A x B) : C with A = C_9^4, B = C_25^2, C = C_15,
/// where c acts on A by the companion matrix of x^4+x^3+x^2+x+1 composed with the
/// fourth-power map, and on B by the companion matrix of x^2+x+1 composed with the
/// sixth-power map. Elements are written v * c^k with v in A x B; centralizer
/// counting reduces to linear congruence systems over Z/9 and Z/25.
class MetabelianGroup {
 public:
  struct Element {
    std::array<int, 4> a{};  // exponents in A = Z_9^4
    std::array<int, 2> b{};  // exponents in B = Z_25^2
    int k = 0;               // exponent of c in Z_15

    bool is_identity() const {
      return k == 0 && a == std::array<int, 4>{} && b == std::array<int, 2>{};
    }
  };

  MetabelianGroup() {
    // column i = image of basis vector i under conjugation by c
    static const int MA[4][4] = {{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    static const int MB[2][2] = {{0, -1}, {1, -1}};
    ma_[0] = identity4();
    mb_[0] = identity2();
    Mat4 A;
    Mat2 B;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A[i][j] = ((4 * MA[i][j]) % 9 + 9) % 9;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) B[i][j] = ((6 * MB[i][j]) % 25 + 25) % 25;
    for (int j = 1; j < 15; ++j) {
      ma_[j] = mul4(ma_[j - 1], A);
      mb_[j] = mul2(mb_[j - 1], B);
    }
  }

  static BigInt order() { return big_pow(3, 9) * big_pow(5, 5); }

  /// Exact |G : C_G(g)|: for each candidate c-exponent m of a commuting element,
  /// count the (alpha, beta) solutions of the induced linear congruences.
  BigInt centralizer_index(const Element& g) const {
    BigInt cent = 0;
    for (int m = 0; m < 15; ++m) {
      // (psi^{-k} - I) w = (psi^{-m} - I) v, componentwise over Z_9 and Z_25
      IntMatrix A4(4, 4);
      std::vector<BigInt> rhs4(4);
      const Mat4& pk = ma_[(15 - g.k) % 15];
      const Mat4& pm = ma_[(15 - m) % 15];
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          A4.at(i, j) = (pk[i][j] - (i == j ? 1 : 0)) % 9;
          rhs4[i] += (pm[i][j] - (i == j ? 1 : 0)) * g.a[j];
        }
      BigInt ca = count_solutions_mod(A4, rhs4, 9);
      if (ca == 0) continue;
      IntMatrix B2(2, 2);
      std::vector<BigInt> rhs2(2);
      const Mat2& qk = mb_[(15 - g.k) % 15];
      const Mat2& qm = mb_[(15 - m) % 15];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          B2.at(i, j) = (qk[i][j] - (i == j ? 1 : 0)) % 25;
          rhs2[i] += (qm[i][j] - (i == j ? 1 : 0)) * g.b[j];
        }
      cent += ca * count_solutions_mod(B2, rhs2, 25);
    }
    BigInt n = order();
    if (cent == 0 || n % cent != 0) throw ConsistencyError("centralizer order does not divide |G|");
    return n / cent;
  }

  int a_action_order() const { return matrix_order(ma_); }
  int b_action_order() const { return matrix_order(mb_); }
  bool a_power_is_identity(int j) const { return ma_[j % 15] == ma_[0]; }
  bool b_power_is_identity(int j) const { return mb_[j % 15] == mb_[0]; }

  /// Solutions w_A of (psi^{-j} - I) w_A = 0 mod 9 (the A-part of C_G(c^j)).
  BigInt fixed_space_a(int j) const {
    IntMatrix A4(4, 4);
    const Mat4& p = ma_[(15 - j % 15) % 15];
    for (int i = 0; i < 4; ++i)
      for (int t = 0; t < 4; ++t) A4.at(i, t) = (p[i][t] - (i == t ? 1 : 0)) % 9;
    return count_solutions_mod(A4, std::vector<BigInt>(4), 9);
  }
  BigInt fixed_space_b(int j) const {
    IntMatrix B2(2, 2);
    const Mat2& p = mb_[(15 - j % 15) % 15];
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < 2; ++t) B2.at(i, t) = (p[i][t] - (i == t ? 1 : 0)) % 25;
    return count_solutions_mod(B2, std::vector<BigInt>(2), 25);
  }

 private:
  using Mat4 = std::array<std::array<int, 4>, 4>;
  using Mat2 = std::array<std::array<int, 2>, 2>;
  std::array<Mat4, 15> ma_;  // ma_[j] = action of c^j on A, mod 9
  std::array<Mat2, 15> mb_;  // mb_[j] = action of c^j on B, mod 25

  static Mat4 identity4() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
  }
  static Mat2 identity2() {
    Mat2 m{};
    for (int i = 0; i < 2; ++i) m[i][i] = 1;
    return m;
  }
  static Mat4 mul4(const Mat4& x, const Mat4& y) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        int acc = 0;
        for (int t = 0; t < 4; ++t) acc += x[i][t] * y[t][j];
        r[i][j] = acc % 9;
      }
    return r;
  }
  static Mat2 mul2(const Mat2& x, const Mat2& y) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        int acc = 0;
        for (int t = 0; t < 2; ++t) acc += x[i][t] * y[t][j];
        r[i][j] = acc % 25;
      }
    return r;
  }
  template <class Arr>
  static int matrix_order(const Arr& pows) {
    for (int j = 1; j < 15; ++j)
      if (pows[j] == pows[0]) return j;
    return 15;
  }
};

struct Metabelian3955Verdict {
  bool pass = false;
  BigInt sum_over_cp;      // sum of |G : C_G(g)| over C_G(P)
  BigInt sum_over_cq;      // sum over C_G(Q)
  long long cp_mod3 = -1;  // == 2, i.e. -1 (mod 3)
  long long cq_mod5 = -1;  // == 3, i.e. -2 (mod 5)
  std::vector<std::string> failures;
};

/// Audits the order-3^9 5^5 example: C_G(P) = <a_1^3,...,a_4^3> of order 81,
/// C_G(Q) = <b_1^5, b_2^5> of order 25, and the two congruences
/// (sum over C_G(P)) = -1 mod 3 and (sum over C_G(Q)) = -2 mod 5, forcing e' = 1.
inline Metabelian3955Verdict verify_3955_example() {
  Metabelian3955Verdict V;
  MetabelianGroup G;
  auto fail = [&](const std::string& s) { V.failures.push_back(s); };

  if (G.a_action_order() != 15) fail("action of c on A does not have order 15");
  if (G.b_action_order() != 15) fail("action of c on B does not have order 15");
  if (G.a_power_is_identity(5) || !G.a_power_is_identity(15))
    fail("c^5 does not act with order 3 on A");
  if (G.b_power_is_identity(3) || !G.b_power_is_identity(15))
    fail("c^3 does not act with order 5 on B");

  // C_G(P): no power c^m with 0 < m < 15 fixes A pointwise, so m = 0; the A-part is
  // the fixed space of c^5 on A and the B-part is trivial.
  for (int m = 1; m < 15; ++m)
    if (G.a_power_is_identity(m)) fail("c^" + std::to_string(m) + " centralizes A");
  if (G.fixed_space_a(5) != 81) fail("|C_A(c^5)| != 81");
  if (G.fixed_space_b(5) != 1) fail("|C_B(c^5)| != 1");
  for (int m = 1; m < 15; ++m)
    if (G.b_power_is_identity(m)) fail("c^" + std::to_string(m) + " centralizes B");
  if (G.fixed_space_a(3) != 1) fail("|C_A(c^3)| != 1");
  if (G.fixed_space_b(3) != 25) fail("|C_B(c^3)| != 25");

  // each claimed generator a_i^3 resp. b_i^5 genuinely lies in the centralizer
  // (81 resp. 25 candidates below are exactly the subgroups <a_i^3>, <b_i^5>)
  V.sum_over_cp = 0;
  for (int x0 = 0; x0 < 3; ++x0)
    for (int x1 = 0; x1 < 3; ++x1)
      for (int x2 = 0; x2 < 3; ++x2)
        for (int x3 = 0; x3 < 3; ++x3) {
          MetabelianGroup::Element g;
          g.a = {3 * x0, 3 * x1, 3 * x2, 3 * x3};
          BigInt idx = G.centralizer_index(g);
          if (g.is_identity()) {
            if (idx != 1) fail("identity has nontrivial centralizer index");
          } else if (idx != 5) {
            fail("element of C_G(P) has index != 5");
          }
          V.sum_over_cp += idx;
        }
  V.sum_over_cq = 0;
  for (int y0 = 0; y0 < 5; ++y0)
    for (int y1 = 0; y1 < 5; ++y1) {
      MetabelianGroup::Element g;
      g.b = {5 * y0, 5 * y1};
      BigInt idx = G.centralizer_index(g);
      if (g.is_identity()) {
        if (idx != 1) fail("identity has nontrivial centralizer index");
      } else if (idx != 3) {
        fail("element of C_G(Q) has index != 3");
      }
      V.sum_over_cq += idx;
    }
  V.cp_mod3 = static_cast<long long>(V.sum_over_cp % 3);
  V.cq_mod5 = static_cast<long long>(V.sum_over_cq % 5);
  if (V.cp_mod3 != 2) fail("sum over C_G(P) is not -1 mod 3");
  if (V.cq_mod5 != 3) fail("sum over C_G(Q) is not -2 mod 5");
  V.pass = V.failures.empty();
  return V;
}

}  // namespace conjchar
