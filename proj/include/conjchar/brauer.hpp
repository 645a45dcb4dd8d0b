#pragma once

#include <optional>
#include <string>
#include <vector>

#include "char_table.hpp"
#include "cyc_linalg.hpp"
#include "int_matrix.hpp"
#include "invariants.hpp"

namespace conjchar {

/// Y_p = conj(X_p) X_p^t: symmetric with non-negative integer entries.
inline IntMatrix build_Yp(const CharTable& B) {
  if (B.prime == 0) throw InputError("expected a Brauer table");
  int l = B.num_classes();
  IntMatrix Y(l, l);
  for (int s = 0; s < l; ++s)
    for (int t = s; t < l; ++t) {
      CycSum acc;
      for (int j = 0; j < l; ++j) acc.add(B.irr[s][j].conj() * B.irr[t][j]);
      Cyc v = acc.value();
      if (!v.is_rational() || !v.is_integral() || num(v.rational_value()) < 0)
        throw ConsistencyError("Y_p has a non-integral or negative entry: corrupt table");
      Y.at(s, t) = num(v.rational_value());
      Y.at(t, s) = Y.at(s, t);
    }
  return Y;
}

/// f_p by expressing pi~ restricted to p-regular classes in the Brauer basis;
/// cross-checked against the largest elementary divisor of Y_p.
inline BigInt f_p_from_brauer(const CharTable& B) {
  if (B.prime == 0) throw InputError("expected a Brauer table");
  int l = B.num_classes();
  CycVec rhs(l);
  for (int j = 0; j < l; ++j) rhs[j] = Cyc(Fraction(1, B.classes[j].centralizer));
  CycVec c = solve_left(B.irr, rhs);
  BigInt f = 1;
  for (const auto& ci : c) {
    if (!ci.is_rational())
      throw ConsistencyError("pi~ has a non-rational Brauer coefficient: corrupt table");
    Fraction q = ci.rational_value() * Fraction(B.order);
    f = big_lcm(f, den(q));
  }
  BigInt d = elementary_divisor_largest(build_Yp(B));
  BigInt gpp = p_prime_part(B.order, B.prime);
  if (d != f * gpp)
    throw ConsistencyError("coefficient and SNF routes for f_p disagree");
  return f;
}

inline BigInt f_p_snf_route(const CharTable& B) {
  BigInt d = elementary_divisor_largest(build_Yp(B));
  BigInt gpp = p_prime_part(B.order, B.prime);
  if (d % gpp != 0)
    throw ConsistencyError("largest elementary divisor of Y_p is not divisible by |G|_{p'}");
  return d / gpp;
}

/// |C_G(x_j)|_{p'} from the Brauer table alone: the left null vector of X_p with
/// column j deleted, normalized to the primitive algebraic-integer vector that is
/// positive at x_j; its value at x_j is the centralizer p'-part.
inline BigInt recover_centralizer(const CharTable& B, int j, bool check_stored = true) {
  if (B.prime == 0) throw InputError("expected a Brauer table");
  int l = B.num_classes();
  if (j < 0 || j >= l) throw InputError("class index out of range");
  CycMat deleted(l);
  for (int i = 0; i < l; ++i)
    for (int c = 0; c < l; ++c)
      if (c != j) deleted[i].push_back(B.irr[i][c]);
  auto ns = nullspace_left(deleted);
  if (ns.size() != 1) throw ConsistencyError("deleted-column null space is not one-dimensional");
  CycVec w = ns[0];
  CycSum acc;
  for (int i = 0; i < l; ++i) acc.add(w[i] * B.irr[i][j]);
  Cyc val = acc.value();
  if (val.is_zero()) throw ConsistencyError("null vector vanishes at the deleted column");
  Cyc vinv = val.inverse();
  for (auto& wi : w) wi = wi * vinv;  // now sum w_i phi_i(x_j) = 1
  // primitive integral rescaling: t = lcm(coefficient denominators) / gcd(integer coords)
  BigInt L = 1;
  for (const auto& wi : w)
    for (const auto& coord : wi.coeffs()) L = big_lcm(L, den(coord));
  BigInt g = 0;
  for (const auto& wi : w)
    for (const auto& coord : wi.coeffs()) g = big_gcd(g, num(coord * Fraction(L)));
  if (g == 0) throw ConsistencyError("null vector is zero");
  Fraction t(L, g);
  if (!is_integer(t))
    throw ConsistencyError("primitive rescaling is not integral: corrupt table");
  BigInt result = num(t);
  if (check_stored && result != p_prime_part(B.classes[j].centralizer, B.prime))
    throw ConsistencyError("recovered centralizer part disagrees with stored class data");
  return result;
}

struct BrauerAuditItem {
  std::string id;
  std::string status;  // pass / fail / skipped
  std::string witness;
};

/// The three-route f_p values, Y_p data, and the Brauer-side audit verdicts.
struct BrauerAnalysis {
  long long prime = 0;
  BigInt f_coefficient;            // pi~^0 in the Brauer basis
  BigInt f_snf;                    // largest elementary divisor of Y_p over |G|_{p'}
  std::optional<BigInt> f_ordinary;  // from the companion ordinary table
  IntMatrix Yp;
  BigInt largest_divisor;
  BigInt det_Yp;
  bool det_identity_ok = false;
  std::vector<BigInt> recovered;   // per p'-class
  std::vector<BrauerAuditItem> audits;

  bool ok() const {
    for (const auto& a : audits)
      if (a.status == "fail") return false;
    return true;
  }
};

/// audit ids: (a) f_p | e_{p'}; (b) det(Y_p) identity; (c) f_p(G)_q = 1 iff |G'|_q = 1;
/// (d) recover_centralizer matches stored p'-parts on every column.
inline BrauerAnalysis audit_brauer(const CharTable& B, const CharTable* ordinary = nullptr,
                                   std::optional<BigInt> derived_order = std::nullopt) {
  BrauerAnalysis R;
  R.prime = B.prime;
  R.f_coefficient = f_p_from_brauer(B);
  R.f_snf = f_p_snf_route(B);
  R.Yp = build_Yp(B);
  R.largest_divisor = elementary_divisor_largest(R.Yp);
  R.det_Yp = det_bareiss(R.Yp);
  if (derived_order == std::nullopt && B.derived_order >= 0) derived_order = B.derived_order;

  auto push = [&](const std::string& id, bool applicable, bool pass, const std::string& w) {
    R.audits.push_back({id, applicable ? (pass ? "pass" : "fail") : "skipped", w});
  };

  {  // (a) f_p divides e(G)_{p'}
    if (ordinary) {
      auto [e, ep] = compute_e(*ordinary);
      BigInt epp = p_prime_part(e, B.prime);
      push("a", true, epp % R.f_coefficient == 0,
           "f_p = " + R.f_coefficient.str() + ", e_{p'} = " + epp.str());
    } else {
      push("a", false, false, "no companion ordinary table");
    }
  }
  {  // (b) det(Y_p) = prod of centralizer p'-parts
    BigInt expect = 1;
    for (const auto& c : B.classes) expect *= p_prime_part(c.centralizer, B.prime);
    R.det_identity_ok = R.det_Yp == expect;
    push("b", true, R.det_identity_ok,
         "det(Y_p) = " + R.det_Yp.str() + ", prod |C|_{p'} = " + expect.str());
  }
  {  // (c) for q != p: f_p(G)_q = 1 iff |G'|_q = 1
    if (derived_order) {
      bool pass = true;
      std::string w;
      for (long long q : prime_divisors(B.order)) {
        if (q == B.prime) continue;
        bool fq1 = p_part(R.f_coefficient, q) == 1;
        bool dq1 = p_part(*derived_order, q) == 1;
        if (fq1 != dq1) pass = false;
        w += (w.empty() ? "" : "; ") + std::string("q=") + std::to_string(q) + ": f_q=" +
             p_part(R.f_coefficient, q).str() + ", |G'|_q=" + p_part(*derived_order, q).str();
      }
      push("c", true, pass, w);
    } else {
      push("c", false, false, "derived subgroup order unavailable");
    }
  }
  {  // (d) centralizer recovery on every column
    bool pass = true;
    std::string w;
    for (int j = 0; j < B.num_classes(); ++j) {
      BigInt got = recover_centralizer(B, j, /*check_stored=*/false);
      R.recovered.push_back(got);
      BigInt want = p_prime_part(B.classes[j].centralizer, B.prime);
      if (got != want) pass = false;
      w += (w.empty() ? "" : ", ") + got.str();
    }
    push("d", true, pass, "recovered p'-parts: " + w);
  }
  return R;
}

}  // namespace conjchar
