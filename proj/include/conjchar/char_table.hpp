#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "base.hpp"
#include "cyclotomic.hpp"
#include "numeric.hpp"
#include "perm_group.hpp"

namespace conjchar {

struct ClassInfo {
  BigInt size;
  BigInt centralizer;
  long long element_order = 1;
  std::map<long long, int> power_map;  // prime -> class index of rep^prime
};

/// An exact character table over labeled conjugacy classes. prime == 0 means an
/// ordinary table; prime p > 0 means a p-Brauer table over the p-regular classes.
struct CharTable {
  std::string name;
  BigInt order = 1;
  long long prime = 0;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyc>> irr;  // rows = characters, column 0 = identity class
  std::string ordinary_ref;           // Brauer only: companion ordinary table file
  BigInt derived_order = -1;          // optional |G'| metadata, -1 when absent

  int num_classes() const { return static_cast<int>(classes.size()); }

  BigInt degree(int row) const {
    const Cyc& v = irr[row][0];
    if (!v.is_rational() || !v.is_integral()) throw ConsistencyError("non-integral degree");
    return num(v.rational_value());
  }

  friend bool operator==(const CharTable& a, const CharTable& b) {
    return a.name == b.name && a.order == b.order && a.prime == b.prime &&
           a.classes.size() == b.classes.size() && a.irr == b.irr &&
           a.ordinary_ref == b.ordinary_ref && a.derived_order == b.derived_order &&
           std::equal(a.classes.begin(), a.classes.end(), b.classes.begin(),
                      [](const ClassInfo& x, const ClassInfo& y) {
                        return x.size == y.size && x.centralizer == y.centralizer &&
                               x.element_order == y.element_order && x.power_map == y.power_map;
                      });
  }
};

inline std::vector<int> p_regular_classes(const CharTable& T, long long p) {
  std::vector<int> idx;
  for (int j = 0; j < T.num_classes(); ++j)
    if (T.classes[j].element_order % p != 0) idx.push_back(j);
  return idx;
}

/// Canonical row order: (degree, then lexicographic on canonically-compared values).
inline void sort_rows_canonical(CharTable& T) {
  std::sort(T.irr.begin(), T.irr.end(), [](const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    int c = Cyc::compare(a[0], b[0]);
    if (c) return c < 0;
    for (size_t i = 1; i < a.size(); ++i) {
      c = Cyc::compare(a[i], b[i]);
      if (c) return c < 0;
    }
    return false;
  });
}

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    ok = false;
    failures.push_back(what);
  }
  std::string first() const { return failures.empty() ? "" : failures.front(); }
};

/// Checks the type invariants: class metadata arithmetic, both orthogonality
/// relations (ordinary) or invertibility plus the determinant identity (Brauer).
inline VerifyReport verify_table(const CharTable& T) {
  VerifyReport R;
  int k = T.num_classes();
  if (k == 0) {
    R.fail("table has no classes");
    return R;
  }
  if (static_cast<int>(T.irr.size()) != k) R.fail("row count differs from class count");
  for (const auto& row : T.irr)
    if (static_cast<int>(row.size()) != k) R.fail("ragged character matrix");
  if (!R.ok) return R;

  if (T.classes[0].element_order != 1 || T.classes[0].size != 1)
    R.fail("class 0: not the identity class");
  BigInt size_sum = 0;
  for (int j = 0; j < k; ++j) {
    const ClassInfo& c = T.classes[j];
    if (c.size < 1 || c.centralizer < 1 || c.element_order < 1)
      R.fail("class " + std::to_string(j) + ": non-positive data");
    else if (c.size * c.centralizer != T.order)
      R.fail("class " + std::to_string(j) + ": orbit-stabilizer violated");
    if (T.prime > 0 && c.element_order % T.prime == 0)
      R.fail("class " + std::to_string(j) + ": not p-regular");
    for (auto& [q, to] : c.power_map)
      if (to < 0 || to >= k) R.fail("class " + std::to_string(j) + ": power map out of range");
    size_sum += c.size;
  }
  if (T.prime == 0 && size_sum != T.order) R.fail("class sizes do not sum to the group order");
  if (!R.ok) return R;

  // degrees
  BigInt degsq = 0;
  for (int i = 0; i < k; ++i) {
    const Cyc& d = T.irr[i][0];
    if (!d.is_rational() || !d.is_integral() || num(d.rational_value()) < 1) {
      R.fail("row " + std::to_string(i) + ": degree is not a positive integer");
      return R;
    }
    degsq += num(d.rational_value()) * num(d.rational_value());
  }
  if (T.prime == 0 && degsq != T.order) R.fail("degree squares do not sum to the group order");

  if (T.prime == 0) {
    bool all_int = true;
    for (const auto& row : T.irr)
      for (const auto& v : row)
        if (!v.is_rational() || !v.is_integral()) {
          all_int = false;
          break;
        }
    if (all_int) {  // integer-valued table: plain big-integer sums
      std::vector<std::vector<BigInt>> X(k, std::vector<BigInt>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) X[i][j] = num(T.irr[i][j].rational_value());
      for (int i = 0; i < k && R.ok; ++i)
        for (int j = i; j < k; ++j) {
          BigInt s = 0;
          for (int l = 0; l < k; ++l) s += T.classes[l].size * X[i][l] * X[j][l];
          if (s != ((i == j) ? T.order : BigInt(0))) {
            R.fail("row orthogonality (" + std::to_string(i) + "," + std::to_string(j) + ")");
            break;
          }
        }
      for (int g = 0; g < k && R.ok; ++g)
        for (int h = g; h < k; ++h) {
          BigInt s = 0;
          for (int i = 0; i < k; ++i) s += X[i][g] * X[i][h];
          if (s != ((g == h) ? T.classes[g].centralizer : BigInt(0))) {
            R.fail("column orthogonality (" + std::to_string(g) + "," + std::to_string(h) + ")");
            break;
          }
        }
      return R;
    }
    for (int i = 0; i < k && R.ok; ++i)
      for (int j = i; j < k; ++j) {
        CycSum s;
        for (int l = 0; l < k; ++l)
          s.add(Cyc(Fraction(T.classes[l].size)) * T.irr[i][l] * T.irr[j][l].conj());
        Cyc v = s.value();
        Cyc expect = (i == j) ? Cyc(T.order) : Cyc(0);
        if (!(v == expect)) {
          R.fail("row orthogonality (" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
    for (int g = 0; g < k && R.ok; ++g)
      for (int h = g; h < k; ++h) {
        CycSum s;
        for (int i = 0; i < k; ++i) s.add(T.irr[i][g] * T.irr[i][h].conj());
        Cyc v = s.value();
        Cyc expect = (g == h) ? Cyc(T.classes[g].centralizer) : Cyc(0);
        if (!(v == expect)) {
          R.fail("column orthogonality (" + std::to_string(g) + "," + std::to_string(h) + ")");
          break;
        }
      }
  } else {
    // det identity: |det(X_p)|^2 = prod of p'-parts of the centralizer orders
    std::vector<std::vector<Cyc>> M = T.irr;
    Cyc det(1);
    int n = k;
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int pr = -1;
      for (int r = col; r < n; ++r)
        if (!M[r][col].is_zero()) {
          pr = r;
          break;
        }
      if (pr < 0) {
        singular = true;
        break;
      }
      if (pr != col) {
        std::swap(M[pr], M[col]);
        det = -det;
      }
      det = det * M[col][col];
      Cyc inv = M[col][col].inverse();
      for (int r = col + 1; r < n; ++r) {
        if (M[r][col].is_zero()) continue;
        Cyc f = M[r][col] * inv;
        for (int c2 = col; c2 < n; ++c2) M[r][c2] = M[r][c2] - f * M[col][c2];
      }
    }
    if (singular) {
      R.fail("Brauer character matrix is singular");
    } else {
      Cyc norm = det * det.conj();
      BigInt expect = 1;
      for (const auto& c : T.classes) expect *= p_prime_part(c.centralizer, T.prime);
      if (!(norm == Cyc(expect))) R.fail("Brauer determinant identity violated");
    }
  }
  return R;
}

/// Restriction for p not dividing |G|: the ordinary table is the Brauer table.
inline CharTable brauer_restrict(const CharTable& ordinary, long long p) {
  if (ordinary.prime != 0) throw InputError("expected an ordinary table");
  if (ordinary.order % p == 0)
    throw InputError("Brauer tables for p dividing the order must be ingested, not restricted");
  CharTable B = ordinary;
  B.prime = p;
  B.ordinary_ref.clear();
  return B;
}

// ---- class metadata from a classified group ----

inline std::vector<ClassInfo> class_infos(const Classification& cl) {
  std::vector<ClassInfo> out;
  for (const auto& c : cl.classes) {
    ClassInfo ci;
    ci.size = c.size;
    ci.centralizer = c.centralizer_order;
    ci.element_order = c.element_order;
    ci.power_map = c.power_map;
    out.push_back(std::move(ci));
  }
  return out;
}

// ---- JSON serialization (schema shared by ordinary and Brauer tables) ----

namespace tabledetail {

inline nlohmann::ordered_json cyc_to_json(const Cyc& v) {
  nlohmann::ordered_json j;
  j["conductor"] = v.conductor();
  auto terms = nlohmann::ordered_json::array();
  for (size_t i = 0; i < v.coeffs().size(); ++i) {
    const Fraction& c = v.coeffs()[i];
    if (c == 0) continue;
    terms.push_back({static_cast<long long>(i), to_ll(num(c)), to_ll(den(c))});
  }
  j["terms"] = std::move(terms);
  return j;
}

inline Cyc cyc_from_json(const nlohmann::json& j, const std::string& where) {
  try {
    long long n = j.at("conductor").get<long long>();
    std::vector<std::pair<long long, Fraction>> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw InputError(where + ": term is not [exp,num,den]");
      long long d = t[2].get<long long>();
      if (d == 0) throw InputError(where + ": zero denominator");
      terms.emplace_back(t[0].get<long long>(), frac(t[1].get<long long>(), d));
    }
    return Cyc::from_terms(n, terms);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace tabledetail

inline void save_table(const CharTable& T, std::ostream& out) {
  nlohmann::ordered_json j;
  j["name"] = T.name;
  j["order"] = to_ll(T.order);
  j["prime"] = T.prime;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : T.classes) {
    nlohmann::ordered_json cj;
    cj["size"] = to_ll(c.size);
    cj["centralizer"] = to_ll(c.centralizer);
    cj["elementOrder"] = c.element_order;
    nlohmann::ordered_json pm = nlohmann::ordered_json::object();
    for (auto& [q, to] : c.power_map) pm[std::to_string(q)] = to;
    cj["powerMaps"] = std::move(pm);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  auto irr = nlohmann::ordered_json::array();
  for (const auto& row : T.irr) {
    auto rj = nlohmann::ordered_json::array();
    for (const auto& v : row) rj.push_back(tabledetail::cyc_to_json(v));
    irr.push_back(std::move(rj));
  }
  j["irr"] = std::move(irr);
  if (!T.ordinary_ref.empty()) j["ordinaryRef"] = T.ordinary_ref;
  if (T.derived_order >= 0) j["derivedOrder"] = to_ll(T.derived_order);
  out << j.dump(1) << '\n';
}

inline void save_table(const CharTable& T, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write table file: " + path);
  save_table(T, out);
}

/// Loads and (by default) verifies a table; imported tables are never trusted as-is.
inline CharTable load_table(std::istream& in, bool verify = true) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("table file is not valid JSON: ") + e.what());
  }
  CharTable T;
  try {
    T.name = j.at("name").get<std::string>();
    T.order = j.at("order").get<long long>();
    T.prime = j.at("prime").get<long long>();
    int ci = 0;
    for (const auto& cj : j.at("classes")) {
      ClassInfo c;
      std::string where = "classes[" + std::to_string(ci) + "]";
      c.size = cj.at("size").get<long long>();
      c.centralizer = cj.at("centralizer").get<long long>();
      c.element_order = cj.at("elementOrder").get<long long>();
      if (cj.contains("powerMaps"))
        for (auto it = cj["powerMaps"].begin(); it != cj["powerMaps"].end(); ++it) {
          long long q;
          try {
            q = std::stoll(it.key());
          } catch (const std::exception&) {
            throw InputError(where + ": power map key is not a prime");
          }
          c.power_map[q] = it.value().get<int>();
        }
      T.classes.push_back(std::move(c));
      ++ci;
    }
    int ri = 0;
    for (const auto& rj : j.at("irr")) {
      std::vector<Cyc> row;
      int vi = 0;
      for (const auto& vj : rj) {
        row.push_back(tabledetail::cyc_from_json(
            vj, "irr[" + std::to_string(ri) + "][" + std::to_string(vi) + "]"));
        ++vi;
      }
      T.irr.push_back(std::move(row));
      ++ri;
    }
    if (j.contains("ordinaryRef")) T.ordinary_ref = j["ordinaryRef"].get<std::string>();
    if (j.contains("derivedOrder")) T.derived_order = j["derivedOrder"].get<long long>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("table schema violation: ") + e.what());
  }
  if (verify) {
    auto R = verify_table(T);
    if (!R.ok) throw InputError("table verification failed: " + R.first());
  }
  return T;
}

inline CharTable load_table(const std::string& path, bool verify = true) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file: " + path);
  return load_table(in, verify);
}

}  // namespace conjchar
