#pragma once

#include <set>
#include <string>
#include <vector>

#include "char_table.hpp"
#include "int_matrix.hpp"

namespace conjchar {

/// |G|^2 [pi~, chi] = sum over classes of size^2 * conj(chi); always a rational integer.
inline std::vector<BigInt> pi_tilde_numerators(const CharTable& T) {
  std::vector<BigInt> out;
  for (const auto& row : T.irr) {
    CycSum s;
    for (int j = 0; j < T.num_classes(); ++j)
      s.add(Cyc(Fraction(T.classes[j].size * T.classes[j].size)) * row[j].conj());
    Cyc v = s.value();
    if (!v.is_rational() || !v.is_integral())
      throw ConsistencyError("non-rational inner product [pi~, chi]: corrupt table");
    out.push_back(num(v.rational_value()));
  }
  return out;
}

/// [pi~, chi] per irreducible character, exact.
inline std::vector<Fraction> pi_tilde_inner(const CharTable& T) {
  auto nums = pi_tilde_numerators(T);
  std::vector<Fraction> out;
  for (const auto& s : nums) out.emplace_back(s, T.order * T.order);
  return out;
}

/// e(G) = lcm of the denominators of |G|[pi~, chi]; e'(G) = |G|/e(G).
inline std::pair<BigInt, BigInt> compute_e(const CharTable& T) {
  auto nums = pi_tilde_numerators(T);
  BigInt e = 1;
  for (const auto& s : nums) {
    Fraction q(s, T.order);  // |G| [pi~, chi]
    e = big_lcm(e, den(q));
  }
  if (T.order % e != 0) throw ConsistencyError("e does not divide the group order");
  return {e, T.order / e};
}

/// Y = conj(X) X^t: symmetric non-negative integral; entry (i,j) = [pi, chi_i conj(chi_j)].
inline IntMatrix build_Y(const CharTable& T) {
  int k = T.num_classes();
  IntMatrix Y(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      CycSum s;
      for (int l = 0; l < k; ++l) s.add(T.irr[i][l].conj() * T.irr[j][l]);
      Cyc v = s.value();
      if (!v.is_rational() || !v.is_integral() || num(v.rational_value()) < 0)
        throw ConsistencyError("Y has a non-integral or negative entry: corrupt table");
      Y.at(i, j) = num(v.rational_value());
      Y.at(j, i) = Y.at(i, j);
    }
  return Y;
}

/// e(G) as (largest elementary divisor of Y) / |G|.
inline std::pair<BigInt, BigInt> compute_e_via_snf(const CharTable& T) {
  IntMatrix Y = build_Y(T);
  BigInt d = elementary_divisor_largest(Y);
  if (d % T.order != 0)
    throw ConsistencyError("largest elementary divisor of Y is not divisible by |G|");
  BigInt e = d / T.order;
  if (T.order % e != 0) throw ConsistencyError("SNF-route e does not divide the group order");
  return {e, T.order / e};
}

/// f_p(G) from the ordinary table: smallest m with |G|_p |G| m [pi~, chi]^0 integral for all chi.
inline BigInt compute_f_p(const CharTable& T, long long p) {
  auto preg = p_regular_classes(T, p);
  BigInt gp = p_part(T.order, p);
  BigInt f = 1;
  for (const auto& row : T.irr) {
    CycSum s;
    for (int j : preg)
      s.add(Cyc(Fraction(T.classes[j].size * T.classes[j].size)) * row[j].conj());
    Cyc v = s.value();
    if (!v.is_rational() || !v.is_integral())
      throw ConsistencyError("non-rational restricted inner product: corrupt table");
    // |G|_p |G| [pi~,chi]^0 = |G|_p * S / |G|
    Fraction q(gp * num(v.rational_value()), T.order);
    f = big_lcm(f, den(q));
  }
  return f;
}

/// [pi~, chi] != 0 per chi; a flagged chi must lie in Irr(G/Z), i.e. be Z-trivial.
inline std::vector<bool> constituents(const CharTable& T) {
  auto nums = pi_tilde_numerators(T);
  std::vector<bool> flags;
  std::vector<int> central;
  for (int j = 0; j < T.num_classes(); ++j)
    if (T.classes[j].size == 1) central.push_back(j);
  for (size_t i = 0; i < T.irr.size(); ++i) {
    bool flag = nums[i] != 0;
    if (flag)
      for (int j : central)
        if (!(T.irr[i][j] == T.irr[i][0]))
          throw ConsistencyError("constituent of pi~ is not trivial on the center");
    flags.push_back(flag);
  }
  return flags;
}

/// Primes p <= n whose p-adic expansion of n has a digit a_i (i >= 1) with 2 a_i >= p.
inline std::set<long long> symmetric_digit_criterion(long long n) {
  if (n < 1) throw InputError("n must be positive");
  std::set<long long> out;
  for (long long p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    long long rest = n / p;
    while (rest > 0) {
      if (2 * (rest % p) >= p) {
        out.insert(p);
        break;
      }
      rest /= p;
    }
  }
  return out;
}

/// The paper's closed forms for e'.
inline BigInt family_closed_form(const std::string& family, long long param) {
  if (family == "dihedral") {
    if (param < 4 || param % 2) throw InputError("dihedral closed form needs an even order >= 4");
    long long n = param / 2;
    return n % 4 == 2 ? 4 : 2;
  }
  auto prime_power = [](long long q) {
    auto f = factorize(q);
    return q > 1 && f.size() == 1;
  };
  if (family == "gl2") {
    if (!prime_power(param)) throw InputError("q is not a prime power");
    return param % 2 ? BigInt(param - 1) : BigInt(2 * (param - 1));
  }
  if (family == "sl2" || family == "psl2") {
    if (!prime_power(param)) throw InputError("q is not a prime power");
    return param % 3 ? 2 : 6;
  }
  throw InputError("no closed form for family: " + family);
}

}  // namespace conjchar
