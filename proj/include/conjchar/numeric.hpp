#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "base.hpp"

namespace conjchar {

using BigInt = boost::multiprecision::cpp_int;
using Fraction = boost::multiprecision::cpp_rational;

inline BigInt num(const Fraction& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Fraction& q) { return boost::multiprecision::denominator(q); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline long long ll_gcd(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long ll_lcm(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / ll_gcd(a, b) * b;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

inline std::vector<long long> prime_divisors(const BigInt& n) {
  if (n > std::numeric_limits<long long>::max())
    throw BudgetError("order too large to factor");
  return prime_divisors(static_cast<long long>(n));
}

/// Largest power of p dividing n (n != 0).
inline BigInt p_part(BigInt n, long long p) {
  if (n < 0) n = -n;
  BigInt r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

inline BigInt p_prime_part(const BigInt& n, long long p) {
  BigInt a = n < 0 ? BigInt(-n) : n;
  return a / p_part(a, p);
}

inline long long euler_phi(long long n) {
  long long r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

/// x^-1 mod m for gcd(x, m) = 1.
inline long long inverse_mod(long long x, long long m) {
  long long a = ((x % m) + m) % m, b = m, u = 1, v = 0;
  while (b) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw InputError("inverse_mod: arguments not coprime");
  return ((u % m) + m) % m;
}

inline long long to_ll(const BigInt& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw BudgetError("value exceeds 64-bit range");
  return static_cast<long long>(n);
}

inline BigInt big_pow(BigInt base, int exp) {
  BigInt r = 1;
  for (; exp > 0; --exp) r *= base;
  return r;
}

inline bool is_integer(const Fraction& q) { return den(q) == 1; }

/// n/d with sign normalization (cpp_rational rejects negative denominators).
inline Fraction frac(const BigInt& n, const BigInt& d) {
  if (d == 0) throw InputError("zero denominator");
  return d < 0 ? Fraction(-n, -d) : Fraction(n, d);
}

}  // namespace conjchar
