#pragma once

#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "perm_group.hpp"

namespace conjchar {

/// Small finite field F_q, q = p^k <= 16, elements 0..q-1 with table arithmetic.
class SmallField {
 public:
  explicit SmallField(int q) : q_(q) {
    auto f = factorize(q);
    if (q < 2 || f.size() != 1) throw InputError("q is not a prime power: " + std::to_string(q));
    p_ = static_cast<int>(f[0].first);
    k_ = f[0].second;
    if (q > 16) throw InputError("q out of supported range (<= 16): " + std::to_string(q));
    // modulus polynomial for the extension, low-degree coefficients first
    std::vector<int> mod;
    switch (q) {
      case 4: mod = {1, 1, 1}; break;          // x^2+x+1 over F_2
      case 8: mod = {1, 1, 0, 1}; break;       // x^3+x+1 over F_2
      case 9: mod = {1, 0, 1}; break;          // x^2+1 over F_3
      case 16: mod = {1, 1, 0, 0, 1}; break;   // x^4+x+1 over F_2
      default: break;                          // prime field
    }
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        auto va = digits(a), vb = digits(b);
        std::vector<int> s(k_), prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i) s[i] = (va[i] + vb[i]) % p_;
        add_[a * q_ + b] = static_cast<int>(value(s));
        for (int i = 0; i < k_; ++i)
          for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p_;
        for (int d = 2 * k_ - 2; d >= k_; --d) {
          int c = prod[d];
          if (!c) continue;
          prod[d] = 0;
          for (int i = 0; i < k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * mod[i]) % p_ + p_) % p_;
        }
        prod.resize(k_);
        mul_[a * q_ + b] = static_cast<int>(value(prod));
      }
    for (int g = 1; g < q_; ++g) {
      int x = g, n = 1;
      while (x != 1) x = mul(x, g), ++n;
      if (n == q_ - 1) {
        primitive_ = g;
        break;
      }
    }
  }

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const {
    for (int b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  int primitive_element() const { return primitive_; }
  /// z^i for i < k: an F_p-basis of F_q used to generate all transvections.
  std::vector<int> power_basis() const {
    std::vector<int> b{1};
    for (int i = 1; i < k_; ++i) b.push_back(mul(b.back(), primitive_));
    return b;
  }

 private:
  int q_, p_, k_ = 1, primitive_ = 1;
  std::vector<int> add_, mul_;

  std::vector<int> digits(int a) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) d[i] = a % p_, a /= p_;
    return d;
  }
  long long value(const std::vector<int>& d) const {
    long long v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + d[i];
    return v;
  }
};

namespace detail {

using Mat2 = std::array<int, 4>;  // row-major [[a,b],[c,d]]

/// Permutation of the nonzero row vectors of F_q^2 induced by v -> v*M.
inline Permutation matrix_on_vectors(const SmallField& F, const Mat2& M) {
  int q = F.size();
  auto index = [&](int x, int y) { return x * q + y - 1; };  // (0,0) excluded
  std::vector<Point> img(q * q - 1);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (!x && !y) continue;
      int nx = F.add(F.mul(x, M[0]), F.mul(y, M[2]));
      int ny = F.add(F.mul(x, M[1]), F.mul(y, M[3]));
      img[index(x, y)] = static_cast<Point>(index(nx, ny));
    }
  return Permutation(std::move(img));
}

/// Permutation of the projective line induced by M: points [x:1] = x, [1:0] = q.
inline Permutation matrix_on_projective_line(const SmallField& F, const Mat2& M) {
  int q = F.size();
  std::vector<Point> img(q + 1);
  auto act = [&](int x, int y) -> Point {
    int nx = F.add(F.mul(x, M[0]), F.mul(y, M[2]));
    int ny = F.add(F.mul(x, M[1]), F.mul(y, M[3]));
    if (ny == 0) return static_cast<Point>(q);
    // normalize [nx:ny] -> [nx/ny:1]
    for (int z = 0; z < q; ++z)
      if (F.mul(z, ny) == nx) return static_cast<Point>(z);
    throw ConsistencyError("projective normalization failed");
  };
  for (int x = 0; x < q; ++x) img[x] = act(x, 1);
  img[q] = act(1, 0);
  return Permutation(std::move(img));
}

inline std::vector<Mat2> sl2_generator_matrices(const SmallField& F) {
  std::vector<Mat2> ms;
  for (int a : F.power_basis()) {
    ms.push_back({1, a, 0, 1});
    ms.push_back({1, 0, a, 1});
  }
  return ms;
}

}  // namespace detail

inline PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  int da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<Point> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = g(static_cast<Point>(i));
    for (int i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : B.generators()) {
    std::vector<Point> img(da + db);
    for (int i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (int i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g(static_cast<Point>(i)));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(da + db, std::move(gens));
}

/// One generator per line, cycles with 1-based points, '#' comments, blank lines ignored.
inline std::vector<Permutation> parse_permutation_file(std::istream& in) {
  std::vector<std::vector<std::vector<int>>> all;  // per generator: cycles of 0-based points
  int max_point = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t i = 0;
    auto skip_ws = [&] { while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i; };
    skip_ws();
    if (i == line.size()) continue;
    std::vector<std::vector<int>> cycles;
    while (i < line.size()) {
      skip_ws();
      if (i == line.size()) break;
      if (line[i] != '(')
        throw InputError("line " + std::to_string(lineno) + ": expected '('");
      ++i;
      std::vector<int> cyc;
      while (true) {
        skip_ws();
        if (i < line.size() && line[i] == ')') { ++i; break; }
        size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        if (j == i) throw InputError("line " + std::to_string(lineno) + ": expected point number");
        int pt = std::stoi(line.substr(i, j - i));
        if (pt < 1) throw InputError("line " + std::to_string(lineno) + ": points are 1-based");
        cyc.push_back(pt - 1);
        max_point = std::max(max_point, pt);
        i = j;
        skip_ws();
        if (i < line.size() && line[i] == ',') ++i;
      }
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    all.push_back(std::move(cycles));
  }
  if (all.empty()) throw InputError("no generators in permutation file");
  std::vector<Permutation> gens;
  for (auto& cycles : all) gens.push_back(Permutation::from_cycles(cycles, max_point));
  return gens;
}

/// Group descriptor grammar:
///   sym:N | alt:N | dihedral:2N | cyclic:N | quaternion:Q | sl2:Q | gl2:Q | psl2:Q
///   | perm:PATH | product:SPEC+SPEC (left-associative)
struct GroupSpec {
  std::string text;
  std::string kind;
  long long param = 0;
  std::string path;
  std::vector<GroupSpec> factors;

  static GroupSpec parse(const std::string& s) {
    GroupSpec spec;
    spec.text = s;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("bad group spec: " + s);
    spec.kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    if (spec.kind == "product") {
      size_t start = 0;
      for (size_t i = 0; i <= rest.size(); ++i) {
        if (i == rest.size() || rest[i] == '+') {
          if (i == start) throw InputError("bad product spec: " + s);
          spec.factors.push_back(parse(rest.substr(start, i - start)));
          start = i + 1;
        }
      }
      if (spec.factors.size() < 2) throw InputError("product needs at least two factors: " + s);
      return spec;
    }
    if (spec.kind == "perm") {
      if (rest.empty()) throw InputError("perm: needs a file path");
      spec.path = rest;
      return spec;
    }
    static const char* kinds[] = {"sym", "alt", "dihedral", "cyclic", "quaternion", "sl2", "gl2", "psl2"};
    bool known = false;
    for (auto* k : kinds) known = known || spec.kind == k;
    if (!known) throw InputError("unknown group family: " + spec.kind);
    try {
      size_t used = 0;
      spec.param = std::stoll(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("bad numeric parameter in group spec: " + s);
    }
    if (spec.param < 1) throw InputError("parameter out of supported range: " + s);
    return spec;
  }
};

inline PermGroup construct_named(const GroupSpec& spec);

inline PermGroup construct_named(const std::string& text) {
  return construct_named(GroupSpec::parse(text));
}

inline PermGroup construct_named(const GroupSpec& spec) {
  const long long n = spec.param;
  auto range_check = [&](bool ok) {
    if (!ok) throw InputError("parameter out of supported range: " + spec.text);
  };
  if (spec.kind == "sym") {
    range_check(n >= 1 && n <= 16);
    if (n == 1) return PermGroup::trivial(1);
    std::vector<Permutation> gens{Permutation::from_cycles({{0, 1}}, static_cast<int>(n))};
    if (n > 2) {
      std::vector<int> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0);
      gens.push_back(Permutation::from_cycles({cyc}, static_cast<int>(n)));
    }
    return PermGroup(static_cast<int>(n), std::move(gens));
  }
  if (spec.kind == "alt") {
    range_check(n >= 1 && n <= 16);
    if (n <= 2) return PermGroup::trivial(static_cast<int>(n));
    std::vector<Permutation> gens{Permutation::from_cycles({{0, 1, 2}}, static_cast<int>(n))};
    if (n > 3) {
      std::vector<int> cyc;
      if (n % 2) {
        cyc.resize(n);
        std::iota(cyc.begin(), cyc.end(), 0);
      } else {
        cyc.resize(n - 1);
        std::iota(cyc.begin(), cyc.end(), 1);
      }
      gens.push_back(Permutation::from_cycles({cyc}, static_cast<int>(n)));
    }
    return PermGroup(static_cast<int>(n), std::move(gens));
  }
  if (spec.kind == "cyclic") {
    range_check(n <= 4096);
    if (n == 1) return PermGroup::trivial(1);
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    return PermGroup(static_cast<int>(n), {Permutation::from_cycles({cyc}, static_cast<int>(n))});
  }
  if (spec.kind == "dihedral") {
    range_check(n % 2 == 0 && n >= 2 && n <= 4096);
    long long m = n / 2;  // rotation order
    if (m == 1) return construct_named("cyclic:2");
    if (m == 2)  // Klein four-group, faithful on two blocks of two
      return PermGroup(4, {Permutation::from_cycles({{0, 1}}, 4), Permutation::from_cycles({{2, 3}}, 4)});
    std::vector<int> rot(m);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<Point> refl(m);
    for (long long i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
    return PermGroup(static_cast<int>(m),
                     {Permutation::from_cycles({rot}, static_cast<int>(m)), Permutation(std::move(refl))});
  }
  if (spec.kind == "quaternion") {
    // generalized quaternion Q_n = <a, b | a^{n/2}=1, b^2=a^{n/4}, a^b=a^-1>, regular action
    range_check(n >= 8 && n <= 512 && (n & (n - 1)) == 0);
    long long half = n / 2;
    auto idx = [&](long long j, long long e) { return static_cast<Point>(e * half + j); };
    std::vector<Point> pa(n), pb(n);
    for (long long j = 0; j < half; ++j) {
      pa[idx(j, 0)] = idx((j + 1) % half, 0);
      pa[idx(j, 1)] = idx((j - 1 + half) % half, 1);
      pb[idx(j, 0)] = idx(j, 1);
      pb[idx(j, 1)] = idx((j + n / 4) % half, 0);
    }
    return PermGroup(static_cast<int>(n), {Permutation(std::move(pa)), Permutation(std::move(pb))});
  }
  if (spec.kind == "sl2" || spec.kind == "gl2" || spec.kind == "psl2") {
    range_check(n >= 2 && n <= 16);
    SmallField F(static_cast<int>(n));
    auto mats = detail::sl2_generator_matrices(F);
    if (spec.kind == "gl2") mats.push_back({F.primitive_element(), 0, 0, 1});
    std::vector<Permutation> gens;
    for (auto& M : mats)
      gens.push_back(spec.kind == "psl2" ? detail::matrix_on_projective_line(F, M)
                                         : detail::matrix_on_vectors(F, M));
    PermGroup G = PermGroup::from_generators(gens);
    BigInt q = n, expected;
    if (spec.kind == "gl2") expected = (q * q - 1) * (q * q - q);
    else if (spec.kind == "sl2") expected = q * (q * q - 1);
    else expected = q * (q * q - 1) / ((n % 2) ? 2 : 1);
    if (G.order() != expected) throw ConsistencyError("matrix group has unexpected order");
    return G;
  }
  if (spec.kind == "perm") {
    std::ifstream in(spec.path);
    if (!in) throw InputError("cannot open permutation file: " + spec.path);
    return PermGroup::from_generators(parse_permutation_file(in));
  }
  if (spec.kind == "product") {
    PermGroup G = construct_named(spec.factors[0]);
    for (size_t i = 1; i < spec.factors.size(); ++i)
      G = direct_product(G, construct_named(spec.factors[i]));
    return G;
  }
  throw InputError("unknown group family: " + spec.kind);
}

}  // namespace conjchar
