#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "base.hpp"
#include "numeric.hpp"

namespace conjchar {

namespace cycdetail {

/// Integer polynomials, low degree first, for cyclotomic polynomial bookkeeping.
using IPoly = std::vector<BigInt>;

inline IPoly ipoly_div_exact(const IPoly& num, const IPoly& den) {
  IPoly r = num, q(num.size() - den.size() + 1);
  for (int d = static_cast<int>(r.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
    BigInt c = r[d] / den.back();  // den is monic here, division exact
    q[d - den.size() + 1] = c;
    if (c == 0) continue;
    for (size_t i = 0; i < den.size(); ++i) r[d - den.size() + 1 + i] -= c * den[i];
  }
  for (const auto& c : r)
    if (c != 0) throw ConsistencyError("inexact cyclotomic polynomial division");
  return q;
}

struct ConductorData {
  long long n = 1;
  long long phi = 1;
  IPoly cyclotomic;                     // Phi_n, monic, degree phi
  std::vector<IPoly> high_power;       // x^e mod Phi_n for e in [phi, n), each of length phi
};

class Cache {
 public:
  static const ConductorData& get(long long n) {
    static Cache cache;
    std::lock_guard<std::mutex> lock(cache.mutex_);
    auto it = cache.data_.find(n);
    if (it != cache.data_.end()) return it->second;
    ConductorData d;
    d.n = n;
    d.phi = euler_phi(n);
    d.cyclotomic = cache.phi_poly(n);
    d.high_power.reserve(static_cast<size_t>(n - d.phi));
    IPoly cur(d.phi);  // coefficients of x^e, starting at e = phi
    for (long long i = 0; i < d.phi; ++i) cur[i] = -d.cyclotomic[i];
    for (long long e = d.phi; e < n; ++e) {
      d.high_power.push_back(cur);
      if (e + 1 == n) break;
      BigInt top = cur[d.phi - 1];
      for (long long i = d.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (long long i = 0; i < d.phi; ++i) cur[i] -= top * d.cyclotomic[i];
    }
    return cache.data_.emplace(n, std::move(d)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<long long, ConductorData> data_;
  std::map<long long, IPoly> phis_;

  IPoly phi_poly(long long n) {
    auto it = phis_.find(n);
    if (it != phis_.end()) return it->second;
    IPoly num(n + 1);
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    for (long long d = 1; d < n; ++d) {
      if (n % d) continue;
      num = ipoly_div_exact(num, phi_poly(d));
    }
    return phis_.emplace(n, std::move(num)).first->second;
  }
};

inline long long crt(long long a, long long m1, long long b, long long m2) {
  long long t = ((b - a) % m2 + m2) % m2;
  return a + m1 * (t * inverse_mod(m1 % m2, m2) % m2);
}

}  // namespace cycdetail

/// An exact element of the cyclotomic field Q(zeta_N), stored at its minimal
/// conductor (N = 1, odd, or divisible by 4) in the power basis of Q[x]/Phi_N.
class Cyc {
 public:
  Cyc() : n_(1), c_{Fraction(0)} {}
  Cyc(long long v) : n_(1), c_{Fraction(v)} {}       // NOLINT: implicit by design
  Cyc(const BigInt& v) : n_(1), c_{Fraction(v)} {}   // NOLINT
  Cyc(const Fraction& v) : n_(1), c_{v} {}           // NOLINT

  static Cyc zeta(long long n, long long power = 1) {
    return from_terms(n, {{power, Fraction(1)}});
  }

  /// Sum of coeff * zeta_n^exp; exponents need not lie in the power basis.
  static Cyc from_terms(long long n, const std::vector<std::pair<long long, Fraction>>& terms) {
    if (n < 1) throw InputError("conductor must be positive");
    Cyc v;
    if (n % 4 == 2) {
      // zeta_{2m}^s = (-1)^x zeta_m^y, m odd
      long long m = n / 2;
      std::vector<std::pair<long long, Fraction>> mapped;
      for (auto& [e, c] : terms) {
        long long s = ((e % n) + n) % n;
        long long x = s % 2;
        long long y = ((s - x * m) / 2 % m + m) % m;
        mapped.emplace_back(y, x ? -c : c);
      }
      return from_terms(m, mapped);
    }
    const auto& D = cycdetail::Cache::get(n);
    v.n_ = n;
    v.c_.assign(static_cast<size_t>(D.phi), Fraction(0));
    for (auto& [e, c] : terms) {
      long long s = ((e % n) + n) % n;
      if (s < D.phi) {
        v.c_[s] += c;
      } else {
        const auto& row = D.high_power[s - D.phi];
        for (long long i = 0; i < D.phi; ++i)
          if (row[i] != 0) v.c_[i] += c * Fraction(row[i]);
      }
    }
    v.reduce();
    return v;
  }

  long long conductor() const { return n_; }
  const std::vector<Fraction>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const { return n_ == 1; }
  Fraction rational_value() const {
    if (n_ != 1) throw InputError("value is not rational");
    return c_[0];
  }
  bool is_integral() const {
    for (const auto& c : c_)
      if (den(c) != 1) return false;
    return true;
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    if (a.n_ == 1 && b.n_ == 1) return Cyc(a.c_[0] + b.c_[0]);
    long long L = ll_lcm(a.n_, b.n_);
    Cyc r = a.lift_to(L);
    Cyc bb = b.lift_to(L);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += bb.c_[i];
    r.reduce();
    return r;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
  Cyc operator-() const {
    Cyc r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.n_ == 1 && b.n_ == 1) return Cyc(a.c_[0] * b.c_[0]);
    if (a.n_ == 1) {
      if (a.c_[0] == 0) return Cyc();
      Cyc r = b;
      for (auto& c : r.c_) c *= a.c_[0];
      return r;  // scaling cannot change the conductor unless it is zero
    }
    if (b.n_ == 1) return b * a;
    long long L = ll_lcm(a.n_, b.n_);
    Cyc x = a.lift_to(L), y = b.lift_to(L);
    const auto& D = cycdetail::Cache::get(L);
    std::vector<Fraction> conv(static_cast<size_t>(2 * D.phi - 1), Fraction(0));
    for (long long i = 0; i < D.phi; ++i) {
      if (x.c_[i] == 0) continue;
      for (long long j = 0; j < D.phi; ++j)
        if (y.c_[j] != 0) conv[i + j] += x.c_[i] * y.c_[j];
    }
    Cyc r;
    r.n_ = L;
    r.c_.assign(static_cast<size_t>(D.phi), Fraction(0));
    for (long long e = 0; e < static_cast<long long>(conv.size()); ++e) {
      if (conv[e] == 0) continue;
      long long s = e % L;
      if (s < D.phi) {
        r.c_[s] += conv[e];
      } else {
        const auto& row = D.high_power[s - D.phi];
        for (long long i = 0; i < D.phi; ++i)
          if (row[i] != 0) r.c_[i] += conv[e] * Fraction(row[i]);
      }
    }
    r.reduce();
    return r;
  }

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  /// Galois map zeta -> zeta^k, gcd(k, conductor) = 1.
  Cyc galois(long long k) const {
    if (n_ == 1) return *this;
    long long kk = ((k % n_) + n_) % n_;
    if (ll_gcd(kk, n_) != 1) throw InputError("galois exponent not coprime to conductor");
    std::vector<std::pair<long long, Fraction>> terms;
    for (long long i = 0; i < static_cast<long long>(c_.size()); ++i)
      if (c_[i] != 0) terms.emplace_back(i * kk % n_, c_[i]);
    return from_terms(n_, terms);
  }

  Cyc conj() const { return galois(-1); }

  Cyc inverse() const {
    if (is_zero()) throw InputError("division by zero");
    if (n_ == 1) return Cyc(frac(den(c_[0]), num(c_[0])));
    using QPoly = std::vector<Fraction>;
    const auto& D = cycdetail::Cache::get(n_);
    QPoly r0(D.cyclotomic.size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Fraction(D.cyclotomic[i]);
    QPoly r1(c_.begin(), c_.end());
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    QPoly s0{Fraction(0)}, s1{Fraction(1)};
    auto deg = [](const QPoly& p) { return static_cast<int>(p.size()) - 1; };
    while (deg(r1) > 0) {
      QPoly q(deg(r0) - deg(r1) + 1, Fraction(0)), rem = r0;
      for (int d = deg(rem); d >= deg(r1); --d) {
        if (rem[d] == 0) continue;
        Fraction c = rem[d] / r1.back();
        q[d - deg(r1)] = c;
        for (int i = 0; i <= deg(r1); ++i) rem[d - deg(r1) + i] -= c * r1[i];
      }
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      // s_{k+1} = s_{k-1} - q * s_k
      QPoly s2 = s0;
      s2.resize(std::max(s2.size(), q.size() + s1.size()), Fraction(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
      while (s2.size() > 1 && s2.back() == 0) s2.pop_back();
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.empty() || r1[0] == 0) throw ConsistencyError("cyclotomic inverse failed");
    std::vector<std::pair<long long, Fraction>> terms;
    for (size_t i = 0; i < s1.size(); ++i)
      if (s1[i] != 0) terms.emplace_back(static_cast<long long>(i), s1[i] / r1[0]);
    return from_terms(n_, terms);
  }

  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

  friend bool operator==(const Cyc& a, const Cyc& b) = default;
  friend bool operator<(const Cyc& a, const Cyc& b) { return compare(a, b) < 0; }

  /// Canonical total order: conductor, then coefficient vector.
  static int compare(const Cyc& a, const Cyc& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    return 0;
  }

  std::string str() const {
    if (n_ == 1) {
      std::ostringstream os;
      os << c_[0];
      return os.str();
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Fraction v = c_[i];
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      first = false;
      Fraction av = v < 0 ? Fraction(-v) : v;
      if (i == 0) {
        os << av;
      } else {
        if (av != 1) os << av << "*";
        os << "z" << n_;
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

  /// Coefficients after lifting to conductor L (n_ must divide L).
  Cyc lift_to(long long L) const {
    if (L == n_) return *this;
    if (L % n_ != 0) throw InputError("lift target is not a multiple of the conductor");
    const auto& D = cycdetail::Cache::get(L);
    Cyc r;
    r.n_ = L;
    r.c_.assign(static_cast<size_t>(D.phi), Fraction(0));
    long long step = L / n_;
    for (long long i = 0; i < static_cast<long long>(c_.size()); ++i) {
      if (c_[i] == 0) continue;
      long long e = i * step % L;
      if (e < D.phi) {
        r.c_[e] += c_[i];
      } else {
        const auto& row = D.high_power[e - D.phi];
        for (long long t = 0; t < D.phi; ++t)
          if (row[t] != 0) r.c_[t] += c_[i] * Fraction(row[t]);
      }
    }
    return r;
  }

 private:
  long long n_;
  std::vector<Fraction> c_;

  /// Reduce to the minimal conductor, one prime step at a time.
  void reduce() {
    while (n_ > 1) {
      bool high_zero = true;
      for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) {
          high_zero = false;
          break;
        }
      if (high_zero) {  // rationals sit at coefficient 0 of any power basis
        c_.resize(1);
        n_ = 1;
        return;
      }
      bool stepped = false;
      for (long long p : prime_divisors(n_)) {
        long long m, k;  // candidate conductor and a generator of Gal(Q_n / Q_m)
        if (p == 2) {
          if (n_ % 8 == 0) {
            m = n_ / 2;
            k = 1 + n_ / 2;
          } else {  // 4 exactly divides n_
            m = n_ / 4;
            if (m == 1) k = n_ - 1;
            else k = cycdetail::crt(3, 4, 1, m);
          }
        } else if ((n_ / p) % p == 0) {
          m = n_ / p;
          k = 1 + n_ / p;
        } else {
          m = n_ / p;
          long long g = 2;
          while (true) {  // smallest primitive root mod p
            bool prim = true;
            long long x = 1;
            for (long long i = 1; i < p - 1 && prim; ++i) {
              x = x * g % p;
              if (x == 1) prim = false;
            }
            if (prim) break;
            ++g;
          }
          k = (m == 1) ? (g % n_) : cycdetail::crt(g % p, p, 1, m);
        }
        if (galois_fixed(k)) {
          down_convert(m);
          stepped = true;
          break;
        }
      }
      if (!stepped) return;
    }
    if (n_ == 1 && c_.size() != 1) c_.resize(1);
  }

  bool galois_fixed(long long k) const {
    Cyc img = galois_raw(k);
    return img.c_ == c_;
  }

  /// Galois image without conductor reduction (stays at n_).
  Cyc galois_raw(long long k) const {
    const auto& D = cycdetail::Cache::get(n_);
    Cyc r;
    r.n_ = n_;
    r.c_.assign(c_.size(), Fraction(0));
    for (long long i = 0; i < static_cast<long long>(c_.size()); ++i) {
      if (c_[i] == 0) continue;
      long long e = i * (k % n_) % n_;
      if (e < 0) e += n_;
      if (e < D.phi) {
        r.c_[e] += c_[i];
      } else {
        const auto& row = D.high_power[e - D.phi];
        for (long long t = 0; t < D.phi; ++t)
          if (row[t] != 0) r.c_[t] += c_[i] * Fraction(row[t]);
      }
    }
    return r;
  }

  /// Rewrite the value in the power basis of Q(zeta_m); caller guarantees membership.
  void down_convert(long long m) {
    const auto& DN = cycdetail::Cache::get(n_);
    const int phiN = static_cast<int>(DN.phi);
    const int phiM = static_cast<int>(euler_phi(m));
    // columns: coefficients at conductor n_ of zeta_m^j, augmented with the value
    std::vector<std::vector<Fraction>> aug(static_cast<size_t>(phiN),
                                           std::vector<Fraction>(phiM + 1, Fraction(0)));
    long long step = n_ / m;
    for (int j = 0; j < phiM; ++j) {
      long long e = j * step % n_;
      if (e < DN.phi) {
        aug[e][j] += 1;
      } else {
        const auto& row = DN.high_power[e - DN.phi];
        for (int t = 0; t < phiN; ++t)
          if (row[t] != 0) aug[t][j] += Fraction(row[t]);
      }
    }
    for (int t = 0; t < phiN; ++t) aug[t][phiM] = c_[t];
    // Gaussian elimination; the system is consistent with a unique solution.
    std::vector<int> pivot_row(phiM, -1);
    int r = 0;
    for (int col = 0; col < phiM && r < phiN; ++col) {
      int pr = -1;
      for (int i = r; i < phiN; ++i)
        if (aug[i][col] != 0) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(aug[r], aug[pr]);
      Fraction inv = frac(den(aug[r][col]), num(aug[r][col]));
      for (int j = col; j <= phiM; ++j) aug[r][j] *= inv;
      for (int i = 0; i < phiN; ++i) {
        if (i == r || aug[i][col] == 0) continue;
        Fraction f = aug[i][col];
        for (int j = col; j <= phiM; ++j) aug[i][j] -= f * aug[r][j];
      }
      pivot_row[col] = r;
      ++r;
    }
    std::vector<Fraction> sol(phiM, Fraction(0));
    for (int col = 0; col < phiM; ++col)
      if (pivot_row[col] >= 0) sol[col] = aug[pivot_row[col]][phiM];
    for (int i = r; i < phiN; ++i)
      if (aug[i][phiM] != 0) throw ConsistencyError("conductor reduction was inconsistent");
    n_ = m;
    c_ = std::move(sol);
  }

  friend class CycSum;
};

/// Accumulator that adds many values at a shared conductor, canonicalizing once at the end.
class CycSum {
 public:
  void add(const Cyc& v) {
    if (v.is_zero()) return;
    long long L = ll_lcm(n_, v.conductor());
    if (L != n_) {
      Cyc lifted = acc_.lift_to(L);
      acc_ = lifted;
      n_ = L;
    }
    if (v.conductor() == n_) {
      for (size_t i = 0; i < v.coeffs().size(); ++i) acc_.c_[i] += v.coeffs()[i];
    } else {
      Cyc lifted = v.lift_to(n_);
      for (size_t i = 0; i < lifted.coeffs().size(); ++i) acc_.c_[i] += lifted.c_[i];
    }
  }

  Cyc value() const {
    Cyc r = acc_;
    r.reduce();
    return r;
  }

 private:
  long long n_ = 1;
  Cyc acc_;
};

}  // namespace conjchar
