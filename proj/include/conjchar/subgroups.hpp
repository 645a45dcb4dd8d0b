#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "perm_group.hpp"

namespace conjchar {

struct SubgroupResult {
  std::vector<Permutation> generators;  // always nonempty (identity for the trivial subgroup)
  BigInt order;
  std::string tag;

  PermGroup group(int degree) const { return PermGroup(degree, generators); }
};

namespace detail {

inline SubgroupResult make_result(const PermGroup& G, std::vector<Permutation> gens, std::string tag) {
  if (gens.empty()) gens.push_back(Permutation::identity(G.degree()));
  PermGroup H(G.degree(), gens);
  return {std::move(gens), H.order(), std::move(tag)};
}

/// Smallest subgroup containing the seeds and closed under conjugation by G.
inline std::vector<Permutation> normal_closure_gens(const PermGroup& G,
                                                    std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (auto& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  if (gens.empty()) return {Permutation::identity(G.degree())};
  PermGroup H(G.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < gens.size(); ++i)
      for (const auto& t : G.generators()) {
        Permutation c = gens[i].conjugated_by(t);
        if (!H.contains(c)) {
          gens.push_back(c);
          H = PermGroup(G.degree(), gens);
          grew = true;
        }
      }
  }
  return gens;
}

/// Element list of a subgroup, packed, sorted (canonical set key material).
inline std::vector<std::string> sorted_elements(const PermGroup& H, const Budget& budget) {
  if (H.order() > budget.max_order) throw BudgetError("subgroup too large to enumerate");
  std::vector<std::string> elems;
  elems.reserve(static_cast<size_t>(H.order_ll()));
  H.chain().for_each_element([&](const Permutation& g) { elems.push_back(g.pack()); });
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace detail

inline SubgroupResult center(const PermGroup& G, const Budget& budget = {}) {
  auto cl = classify_elements(G, budget);
  std::vector<Permutation> gens;
  for (const auto& c : cl.classes)
    if (c.size == 1 && !c.representative.is_identity()) gens.push_back(c.representative);
  return detail::make_result(G, std::move(gens), "center");
}

inline SubgroupResult derived_subgroup(const PermGroup& G, const Budget& budget = {}) {
  (void)budget;
  std::vector<Permutation> comms;
  const auto& gs = G.generators();
  for (const auto& a : gs)
    for (const auto& b : gs)
      comms.push_back(a.inverse().then(b.inverse()).then(a).then(b));
  return detail::make_result(G, detail::normal_closure_gens(G, std::move(comms)), "derived");
}

/// O_{p'}(G): generated by all classes of p'-elements whose normal closure is a p'-group.
inline SubgroupResult o_p_prime(const PermGroup& G, long long p, const Budget& budget = {}) {
  auto cl = classify_elements(G, budget);
  std::string tag = "o_p_prime(" + std::to_string(p) + ")";
  std::vector<Permutation> core_gens;
  std::optional<PermGroup> core;
  for (const auto& c : cl.classes) {
    if (c.representative.is_identity() || c.element_order % p == 0) continue;
    if (core && core->contains(c.representative)) continue;
    auto closure = detail::normal_closure_gens(G, {c.representative});
    PermGroup H(G.degree(), closure);
    if (H.order() % p != 0) {
      core_gens.insert(core_gens.end(), closure.begin(), closure.end());
      core_gens = detail::normal_closure_gens(G, std::move(core_gens));
      core.emplace(G.degree(), core_gens);
      if (core->order() % p == 0) throw ConsistencyError("p'-core grew to order divisible by p");
    }
  }
  return detail::make_result(G, std::move(core_gens), tag);
}

/// N_G(H) via the conjugation orbit of H (as an element set) with Schreier generators.
inline SubgroupResult normalizer(const PermGroup& G, const PermGroup& H, const Budget& budget = {}) {
  auto key_of = [](const std::vector<std::string>& elems) {
    std::string key;
    for (const auto& e : elems) key += e;
    return key;
  };
  auto base_elems = detail::sorted_elements(H, budget);
  int deg = G.degree();
  auto conj_set = [&](const std::vector<std::string>& elems, const Permutation& t) {
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(Permutation::unpack(e, deg).conjugated_by(t).pack());
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<Permutation> ngens = H.generators();
  PermGroup N(deg, ngens);
  // orbit of the subgroup under conjugation; node -> conjugator u with H^u = node
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<std::string>> sets{base_elems};
  std::vector<Permutation> reach{Permutation::identity(deg)};
  index.emplace(key_of(base_elems), 0);
  for (size_t head = 0; head < sets.size(); ++head) {
    if (static_cast<long long>(sets.size()) > budget.max_order)
      throw BudgetError("subgroup conjugation orbit exceeds budget");
    for (const auto& t : G.generators()) {
      auto img = conj_set(sets[head], t);
      std::string key = key_of(img);
      auto [it, fresh] = index.emplace(key, static_cast<int>(sets.size()));
      if (fresh) {
        sets.push_back(std::move(img));
        reach.push_back(reach[head].then(t));
      } else {
        // Schreier generator: reach[head] * t * reach[it->second]^-1 normalizes H
        Permutation s = reach[head].then(t).then(reach[it->second].inverse());
        if (!N.contains(s)) {
          ngens.push_back(s);
          N = PermGroup(deg, ngens);
        }
      }
    }
  }
  if (N.order() * static_cast<long long>(sets.size()) != G.order())
    throw ConsistencyError("normalizer orbit-stabilizer mismatch");
  return {std::move(ngens), N.order(), "normalizer"};
}

/// Sylow p-subgroup by iterated growth inside normalizers.
inline SubgroupResult sylow_subgroup(const PermGroup& G, long long p, const Budget& budget = {}) {
  std::string tag = "sylow(" + std::to_string(p) + ")";
  BigInt target = p_part(G.order(), p);
  if (target == 1) return detail::make_result(G, {}, tag);
  auto cl = classify_elements(G, budget);
  std::vector<Permutation> pgens;
  for (const auto& c : cl.classes) {
    if (c.element_order % p != 0) continue;
    auto [gp, gpp] = p_decompose(c.representative, c.element_order, p);
    pgens.push_back(gp);
    break;
  }
  if (pgens.empty()) throw ConsistencyError("no p-element found though p divides the order");
  PermGroup P(G.degree(), pgens);
  while (P.order() < target) {
    auto N = normalizer(G, P, budget);
    PermGroup NG(G.degree(), N.generators);
    // find a p-element of N_G(P) outside P; <P, x_p> is then a larger p-group
    bool extended = false;
    auto ncl = classify_elements(NG, budget);
    for (const auto& c : ncl.classes) {
      if (c.element_order % p != 0) continue;
      auto [gp, gpp] = p_decompose(c.representative, c.element_order, p);
      if (!P.contains(gp)) {
        pgens.push_back(gp);
        P = PermGroup(G.degree(), pgens);
        extended = true;
        break;
      }
    }
    if (!extended) throw ConsistencyError("Sylow growth stalled below target order");
  }
  if (P.order() != target) throw ConsistencyError("Sylow subgroup has wrong order");
  return {std::move(pgens), target, tag};
}

inline SubgroupResult sylow_normalizer(const PermGroup& G, long long p, const Budget& budget = {}) {
  auto P = sylow_subgroup(G, p, budget);
  auto N = normalizer(G, P.group(G.degree()), budget);
  N.tag = "sylow_normalizer(" + std::to_string(p) + ")";
  return N;
}

inline bool is_normal(const PermGroup& G, const PermGroup& N) {
  for (const auto& h : N.generators())
    for (const auto& t : G.generators())
      if (!N.contains(h.conjugated_by(t))) return false;
  return true;
}

/// Permutation image of G acting on the cosets of a normal subgroup N.
inline PermGroup coset_action(const PermGroup& G, const PermGroup& N, const Budget& budget = {}) {
  if (!is_normal(G, N)) throw InputError("subgroup is not normal");
  if (G.order() > budget.max_order) throw BudgetError("group order exceeds budget");
  int deg = G.degree();
  std::vector<Permutation> nelems;
  nelems.reserve(static_cast<size_t>(N.order_ll()));
  N.chain().for_each_element([&](const Permutation& g) { nelems.push_back(g); });
  auto coset_label = [&](const Permutation& g) {
    std::string best = nelems.front().then(g).pack();
    for (size_t i = 1; i < nelems.size(); ++i) {
      std::string cand = nelems[i].then(g).pack();
      if (cand < best) best = cand;
    }
    return best;
  };

  std::unordered_map<std::string, int> index;
  std::vector<Permutation> reps{Permutation::identity(deg)};
  index.emplace(coset_label(reps[0]), 0);
  std::vector<std::vector<int>> images(G.generators().size());
  for (size_t head = 0; head < reps.size(); ++head) {
    for (size_t gi = 0; gi < G.generators().size(); ++gi) {
      Permutation moved = reps[head].then(G.generators()[gi]);
      std::string key = coset_label(moved);
      auto [it, fresh] = index.emplace(key, static_cast<int>(reps.size()));
      if (fresh) reps.push_back(std::move(moved));
      images[gi].resize(std::max(images[gi].size(), head + 1));
      images[gi][head] = it->second;
    }
  }
  size_t m = reps.size();
  std::vector<Permutation> qgens;
  for (auto& img : images) {
    img.resize(m);
    std::vector<Point> v(m);
    for (size_t i = 0; i < m; ++i) v[i] = static_cast<Point>(img[i]);
    qgens.emplace_back(std::move(v));
  }
  PermGroup Q(static_cast<int>(m), std::move(qgens));
  if (Q.order() * N.order() != G.order())
    throw ConsistencyError("coset action image has wrong order");
  return Q;
}

/// Dispatcher matching the characteristic-subgroup tags.
inline SubgroupResult characteristic_subgroup(const PermGroup& G, const std::string& which,
                                              long long p = 0, const Budget& budget = {}) {
  if (which == "center") return center(G, budget);
  if (which == "derived") return derived_subgroup(G, budget);
  if (which == "o_p_prime") return o_p_prime(G, p, budget);
  if (which == "sylow") return sylow_subgroup(G, p, budget);
  if (which == "sylow_normalizer") return sylow_normalizer(G, p, budget);
  throw InputError("unknown subgroup tag: " + which);
}

}  // namespace conjchar
