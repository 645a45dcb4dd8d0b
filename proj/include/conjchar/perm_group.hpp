#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "base.hpp"
#include "numeric.hpp"
#include "permutation.hpp"

namespace conjchar {

/// Stabilizer chain for the fixed base 0, 1, 2, ... (deterministic Schreier-Sims,
/// no randomization). Level i holds every strong generator fixing the points < i.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens) : degree_(degree) {
    for (const auto& g : gens)
      if (!g.is_identity() && std::find(sgens_.begin(), sgens_.end(), g) == sgens_.end())
        sgens_.push_back(g);
    sync_levels();
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) complete(i);
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& lv : levels_) o *= static_cast<long long>(lv.orbit.size());
    return o;
  }

  /// Strips g through the transversals; identity residue means membership.
  Permutation sift(const Permutation& g, size_t from = 0) const {
    Permutation r = g;
    for (size_t i = from; i < levels_.size(); ++i) {
      if (r.is_identity()) break;
      const Level& lv = levels_[i];
      Point p = r(lv.base);
      if (p == lv.base) continue;
      int idx = lv.where[p];
      if (idx < 0) return r;
      r = r.then(lv.trans[idx].inverse());
    }
    return r;
  }

  bool contains(const Permutation& g) const { return sift(g).is_identity(); }

  /// Enumerates every group element exactly once, in a fixed deterministic order.
  template <class F>
  void for_each_element(F&& fn) const {
    walk(static_cast<int>(levels_.size()) - 1, Permutation::identity(degree_), fn);
  }

  size_t num_levels() const { return levels_.size(); }

 private:
  struct Level {
    Point base;
    std::vector<int> gen_idx;       // strong generators fixing all earlier bases
    std::vector<Point> orbit;       // BFS order, orbit[0] == base
    std::vector<int> where;         // point -> index into trans, -1 outside orbit
    std::vector<Permutation> trans; // base^trans[i] == orbit[i]
  };

  int degree_;
  std::vector<Permutation> sgens_;
  std::vector<Level> levels_;

  template <class F>
  void walk(int level, const Permutation& acc, F&& fn) const {
    if (level < 0) {
      fn(acc);
      return;
    }
    for (const auto& u : levels_[level].trans) walk(level - 1, acc.then(u), fn);
  }

  static int first_moved(const Permutation& g) {
    for (int i = 0; i < g.degree(); ++i)
      if (g(static_cast<Point>(i)) != i) return i;
    return g.degree();
  }

  /// Recreate the level list (bases 0..L-1) and orbits from the strong generators.
  void sync_levels() {
    int L = 0;
    for (const auto& g : sgens_) L = std::max(L, first_moved(g) + 1);
    levels_.assign(L, Level{});
    for (int i = 0; i < L; ++i) levels_[i].base = static_cast<Point>(i);
    for (int gi = 0; gi < static_cast<int>(sgens_.size()); ++gi)
      for (int i = 0; i <= first_moved(sgens_[gi]) && i < L; ++i)
        levels_[i].gen_idx.push_back(gi);
    for (int i = 0; i < L; ++i) recompute_orbit(i);
  }

  void recompute_orbit(int i) {
    Level& lv = levels_[i];
    lv.orbit = {lv.base};
    lv.where.assign(degree_, -1);
    lv.where[lv.base] = 0;
    lv.trans = {Permutation::identity(degree_)};
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
      Point p = lv.orbit[head];
      Permutation up = lv.trans[head];  // copy: trans reallocates while growing
      for (int gi : lv.gen_idx) {
        const Permutation& s = sgens_[gi];
        Point q = s(p);
        if (lv.where[q] < 0) {
          lv.where[q] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.trans.push_back(up.then(s));
        }
      }
    }
  }

  /// Establish the Sims condition at level i (deeper levels assumed complete):
  /// every Schreier generator of (orbit_i, S_i) must sift to identity below.
  /// Each added residue strictly enlarges the group below level i, so this terminates.
  void complete(int i) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      recompute_orbit(i);
      for (size_t head = 0; head < levels_[i].orbit.size() && !dirty; ++head) {
        for (size_t si = 0; si < levels_[i].gen_idx.size() && !dirty; ++si) {
          const Level& lv = levels_[i];
          const Permutation& s = sgens_[lv.gen_idx[si]];
          Point p = lv.orbit[head];
          Point q = s(p);
          Permutation schreier = lv.trans[head].then(s).then(lv.trans[lv.where[q]].inverse());
          Permutation h = sift(schreier, i + 1);
          if (h.is_identity()) continue;
          // h extends the stabilizer below level i: register, re-complete bottom-up.
          int j = first_moved(h);
          int gi = static_cast<int>(sgens_.size());
          sgens_.push_back(h);
          if (j >= static_cast<int>(levels_.size())) {
            size_t old = levels_.size();
            levels_.resize(static_cast<size_t>(j) + 1);
            for (size_t t = old; t < levels_.size(); ++t) {
              levels_[t].base = static_cast<Point>(t);
              recompute_orbit(static_cast<int>(t));
            }
          }
          for (int t = 0; t <= j; ++t) levels_[t].gen_idx.push_back(gi);
          for (int t = j; t > i; --t) complete(t);
          dirty = true;  // orbits at this level may have grown: restart
        }
      }
    }
  }
};

/// A finite permutation group given by generators, with its stabilizer chain and exact order.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> gens)
      : degree_(degree), gens_(std::move(gens)), chain_(make_chain()), order_(chain_.order()) {}

  static PermGroup from_generators(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw InputError("empty generator list");
    int deg = gens.front().degree();
    for (const auto& g : gens)
      if (g.degree() != deg) throw InputError("degree mismatch among generators");
    return PermGroup(deg, gens);
  }

  static PermGroup trivial(int degree) { return PermGroup(degree, {Permutation::identity(degree)}); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  long long order_ll() const { return to_ll(order_); }
  const StabilizerChain& chain() const { return chain_; }
  bool contains(const Permutation& g) const {
    return g.degree() == degree_ && chain_.contains(g);
  }

 private:
  int degree_;
  std::vector<Permutation> gens_;
  StabilizerChain chain_;
  BigInt order_;

  StabilizerChain make_chain() const {
    std::vector<Permutation> gs;
    for (const auto& g : gens_) {
      if (g.degree() != degree_) throw InputError("degree mismatch among generators");
      if (!g.is_identity()) gs.push_back(g);
    }
    return StabilizerChain(degree_, gs);
  }
};

struct ConjClassData {
  Permutation representative;           // lexicographically minimal class element
  BigInt size;
  BigInt centralizer_order;
  long long element_order = 1;
  std::map<long long, int> power_map;   // prime q dividing exp(G) -> class index of rep^q
};

/// Full classification: class list in canonical order plus element -> class index.
struct Classification {
  long long order = 1;
  long long exponent = 1;
  std::vector<ConjClassData> classes;
  std::unordered_map<std::string, std::int32_t> element_class;

  int class_of(const Permutation& g) const {
    auto it = element_class.find(g.pack());
    if (it == element_class.end()) throw InputError("element not in group");
    return it->second;
  }
};

/// Canonical class order: identity first, then (element order, size, minimal representative).
inline Classification classify_elements(const PermGroup& G, const Budget& budget = {}) {
  if (G.order() > budget.max_order) throw BudgetError("group order exceeds budget");
  Classification cl;
  cl.order = G.order_ll();
  cl.element_class.reserve(static_cast<size_t>(cl.order) * 2);
  const auto& gens = G.generators();
  int deg = G.degree();

  struct Raw {
    std::string min_rep;
    long long size;
  };
  std::vector<Raw> raw;

  long long total = 0;
  G.chain().for_each_element([&](const Permutation& e) {
    std::string key = e.pack();
    if (cl.element_class.count(key)) return;
    // conjugation orbit closure
    std::int32_t id = static_cast<std::int32_t>(raw.size());
    if (static_cast<int>(raw.size()) >= budget.max_classes)
      throw BudgetError("class count exceeds budget");
    std::deque<std::string> queue{key};
    cl.element_class.emplace(key, id);
    std::string min_rep = key;
    long long size = 0;
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      ++size;
      if (cur < min_rep) min_rep = cur;
      Permutation x = Permutation::unpack(cur, deg);
      for (const auto& t : gens) {
        std::string y = x.conjugated_by(t).pack();
        if (cl.element_class.emplace(y, id).second) queue.push_back(y);
      }
    }
    raw.push_back({std::move(min_rep), size});
    total += size;
  });
  if (total != cl.order) throw ConsistencyError("class sizes do not sum to group order");

  // Canonical reorder.
  std::vector<int> perm(raw.size());
  std::vector<std::pair<std::tuple<long long, long long, std::string>, int>> keys;
  for (size_t i = 0; i < raw.size(); ++i) {
    Permutation rep = Permutation::unpack(raw[i].min_rep, deg);
    keys.push_back({{rep.order(), raw[i].size, raw[i].min_rep}, static_cast<int>(i)});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::int32_t> remap(raw.size());
  for (size_t pos = 0; pos < keys.size(); ++pos) remap[keys[pos].second] = static_cast<std::int32_t>(pos);
  for (auto& [k, v] : cl.element_class) v = remap[v];

  for (auto& [key, old] : keys) {
    const Raw& r = raw[old];
    ConjClassData c;
    c.representative = Permutation::unpack(r.min_rep, deg);
    c.size = r.size;
    if (cl.order % r.size != 0) throw ConsistencyError("class size does not divide group order");
    c.centralizer_order = cl.order / r.size;
    c.element_order = c.representative.order();
    cl.exponent = ll_lcm(cl.exponent, c.element_order);
    cl.classes.push_back(std::move(c));
  }
  for (auto& c : cl.classes)
    for (long long q : prime_divisors(cl.exponent))
      c.power_map[q] = cl.element_class.at(c.representative.power(q).pack());
  return cl;
}

inline std::vector<ConjClassData> conjugacy_classes(const PermGroup& G, const Budget& budget = {}) {
  return classify_elements(G, budget).classes;
}

/// |C_G(g)| via orbit-stabilizer on the conjugation orbit of g.
inline BigInt centralizer_order(const PermGroup& G, const Permutation& g, const Budget& budget = {}) {
  if (!G.contains(g)) throw InputError("element not in group");
  if (G.order() > budget.max_order) throw BudgetError("group order exceeds budget");
  std::unordered_map<std::string, char> seen;
  std::deque<std::string> queue{g.pack()};
  seen.emplace(queue.front(), 1);
  long long orbit = 0;
  int deg = G.degree();
  while (!queue.empty()) {
    Permutation x = Permutation::unpack(queue.front(), deg);
    queue.pop_front();
    ++orbit;
    for (const auto& t : G.generators()) {
      std::string y = x.conjugated_by(t).pack();
      if (seen.emplace(y, 1).second) queue.push_back(y);
    }
  }
  return G.order() / orbit;
}

/// g = g_p * g_p' with commuting factors of p-power and p'-order (CRT on the exponent).
inline std::pair<Permutation, Permutation> p_decompose(const Permutation& g, long long order,
                                                       long long p) {
  long long pk = 1, m = order;
  while (m % p == 0) m /= p, pk *= p;
  if (pk == 1) return {Permutation::identity(g.degree()), g};
  if (m == 1) return {g, Permutation::identity(g.degree())};
  long long u = inverse_mod(m % pk, pk);
  long long ep = static_cast<long long>((__int128)m * u % order);
  long long epp = ((1 - ep) % order + order) % order;
  return {g.power(ep), g.power(epp)};
}

}  // namespace conjchar
