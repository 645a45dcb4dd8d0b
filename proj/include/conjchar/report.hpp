#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "audits.hpp"
#include "brauer.hpp"
#include "named_groups.hpp"

namespace conjchar {

/// The full per-group result: e, e', e~, f_p per prime, constituent flags, audits.
struct InvariantReport {
  std::string name;
  BigInt order = 1;
  BigInt e = 1, e_prime = 1;
  bool e_tilde_defined = false;
  Fraction e_tilde;  // e'/2, reported only when e' is even
  std::vector<std::pair<long long, BigInt>> f;  // prime -> f_p(G), p | |G|
  std::vector<std::pair<BigInt, bool>> constituent_flags;  // (degree, [pi~,chi] != 0)
  std::vector<AuditResult> audits;

  bool audits_ok() const { return audits_all_pass(audits); }
};

/// Computes the report for a constructed group; e is taken by the denominator
/// route and must agree with the Smith-normal-form route.
inline InvariantReport analyze_group(const GroupSpec& spec, const Budget& budget = {},
                                     bool with_audits = true) {
  PermGroup G = construct_named(spec);
  CharTable T = dixon_schneider(G, budget, spec.text);
  InvariantReport R;
  R.name = spec.text;
  R.order = T.order;
  auto [e1, ep1] = compute_e(T);
  auto [e2, ep2] = compute_e_via_snf(T);
  if (e1 != e2) throw ConsistencyError("denominator-lcm e and SNF-route e disagree");
  R.e = e1;
  R.e_prime = ep1;
  if (ep1 % 2 == 0) {
    R.e_tilde_defined = true;
    R.e_tilde = Fraction(ep1, 2);
  }
  for (long long p : prime_divisors(T.order)) R.f.emplace_back(p, compute_f_p(T, p));
  auto flags = constituents(T);
  for (size_t i = 0; i < flags.size(); ++i)
    R.constituent_flags.emplace_back(T.degree(static_cast<int>(i)), flags[i]);
  if (with_audits) {
    std::vector<PermGroup> factors;
    for (const auto& f : spec.factors) factors.push_back(construct_named(f));
    R.audits = audit_theorems(G, T, budget, factors.size() >= 2 ? &factors : nullptr);
  }
  return R;
}

inline nlohmann::ordered_json report_to_json(const InvariantReport& R) {
  nlohmann::ordered_json j;
  j["name"] = R.name;
  j["order"] = R.order.str();
  j["e"] = R.e.str();
  j["ePrime"] = R.e_prime.str();
  if (R.e_tilde_defined)
    j["eTilde"] = num(R.e_tilde).str();
  else
    j["eTilde"] = nullptr;
  nlohmann::ordered_json fj = nlohmann::ordered_json::object();
  for (auto& [p, v] : R.f) fj[std::to_string(p)] = v.str();
  j["f"] = std::move(fj);
  auto cj = nlohmann::ordered_json::array();
  for (auto& [deg, flag] : R.constituent_flags)
    cj.push_back({{"degree", deg.str()}, {"constituent", flag}});
  j["constituents"] = std::move(cj);
  auto aj = nlohmann::ordered_json::array();
  for (auto& a : R.audits)
    aj.push_back({{"id", a.id}, {"title", a.title}, {"status", a.status}, {"witness", a.witness}});
  j["audits"] = std::move(aj);
  j["auditsPass"] = R.audits_ok();
  return j;
}

inline void print_report(const InvariantReport& R, std::ostream& os) {
  os << R.name << ": |G| = " << R.order << ", e = " << R.e << ", e' = " << R.e_prime;
  if (R.e_tilde_defined)
    os << ", e~ = " << num(R.e_tilde);
  else
    os << ", e~ undefined (e' odd)";
  os << "\n  f:";
  if (R.f.empty()) os << " (no prime divisors)";
  for (auto& [p, v] : R.f) os << " f_" << p << " = " << v;
  os << "\n  constituents of pi~:";
  for (auto& [deg, flag] : R.constituent_flags) os << " " << deg << (flag ? "+" : "-");
  os << "\n";
  for (auto& a : R.audits)
    os << "  audit (" << a.id << ") " << a.status << ": " << a.title
       << (a.witness.empty() ? "" : " [" + a.witness + "]") << "\n";
}

}  // namespace conjchar
