#include <catch_amalgamated.hpp>

#include "conjchar/dixon.hpp"
#include "conjchar/murnaghan.hpp"
#include "conjchar/named_groups.hpp"
#include "conjchar/report.hpp"

using namespace conjchar;

namespace {
CharTable table_of(const std::string& spec) {
  return dixon_schneider(construct_named(spec), {}, spec);
}
}  // namespace

TEST_CASE("pi~ inner products on S3") {
  auto s3 = table_of("sym:3");
  auto inner = pi_tilde_inner(s3);
  std::multiset<Fraction> got(inner.begin(), inner.end());
  CHECK(got == std::multiset<Fraction>{Fraction(7, 18), Fraction(-1, 9), Fraction(-1, 18)});
  auto nums = pi_tilde_numerators(s3);
  std::multiset<BigInt> raw(nums.begin(), nums.end());
  CHECK(raw == std::multiset<BigInt>{14, -4, -2});
}

TEST_CASE("pi~ on abelian groups") {
  for (int n : {4, 5, 6}) {
    auto t = table_of("cyclic:" + std::to_string(n));
    auto inner = pi_tilde_inner(t);
    int nonzero = 0;
    for (size_t i = 0; i < inner.size(); ++i)
      if (inner[i] != 0) {
        ++nonzero;
        CHECK(inner[i] == Fraction(1, n));  // only the trivial character
      }
    CHECK(nonzero == 1);
  }
}

TEST_CASE("compute_e on the paper families") {
  auto check = [](const std::string& spec, long long e, long long ep) {
    auto t = table_of(spec);
    auto [ce, cep] = compute_e(t);
    INFO(spec);
    CHECK(ce == e);
    CHECK(cep == ep);
    auto [se, sep] = compute_e_via_snf(t);
    CHECK(se == e);
    CHECK(sep == ep);
  };
  check("sym:3", 3, 2);       // D_6, n odd
  check("dihedral:12", 3, 4); // n = 6 = 2 mod 4
  check("quaternion:8", 4, 2);  // nilpotent: e' = |Z|
  check("cyclic:4", 1, 4);
}

TEST_CASE("Y matrix of S3") {
  auto s3 = table_of("sym:3");
  auto Y = build_Y(s3);
  // the rows are canonically sorted (sgn, 1, deg2); Y entries as multisets per row
  REQUIRE(Y.rows == 3);
  std::multiset<BigInt> diag{Y.at(0, 0), Y.at(1, 1), Y.at(2, 2)};
  CHECK(diag == std::multiset<BigInt>{3, 3, 5});
  CHECK(Y.at(0, 1) == Y.at(1, 0));
  CHECK(elementary_divisor_largest(Y) == 18);
}

TEST_CASE("f_p from the ordinary table") {
  auto s3 = table_of("sym:3");
  CHECK(compute_f_p(s3, 3) == 1);
  CHECK(compute_f_p(s3, 2) == 3);
  // p not dividing |G|: the restricted sum is the full sum, so f_p = e
  auto [e, ep] = compute_e(s3);
  CHECK(compute_f_p(s3, 5) == e);
  // f_p is a p'-number dividing e_{p'}
  for (const char* spec : {"sym:4", "alt:4", "sl2:3", "dihedral:24"}) {
    auto t = table_of(spec);
    auto [te, tep] = compute_e(t);
    for (long long p : prime_divisors(t.order)) {
      BigInt f = compute_f_p(t, p);
      INFO(spec << " p=" << p);
      CHECK(p_part(f, p) == 1);
      CHECK(p_prime_part(te, p) % f == 0);
    }
  }
}

TEST_CASE("constituents") {
  auto q8 = table_of("quaternion:8");
  auto flags = constituents(q8);
  int flagged = 0, deg2_flag = -1;
  for (size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) ++flagged;
    if (q8.degree(static_cast<int>(i)) == 2) deg2_flag = flags[i];
  }
  CHECK(flagged == 4);
  CHECK(deg2_flag == 0);
  auto s3 = table_of("sym:3");
  for (bool f : constituents(s3)) CHECK(f);
  auto c6 = table_of("cyclic:6");
  int on = 0;
  for (bool f : constituents(c6)) on += f;
  CHECK(on == 1);
}

TEST_CASE("digit criterion") {
  CHECK(symmetric_digit_criterion(4) == std::set<long long>{2});
  CHECK(symmetric_digit_criterion(15) == std::set<long long>{2, 3, 5});
  CHECK(symmetric_digit_criterion(9) == std::set<long long>{2});
  CHECK(symmetric_digit_criterion(1).empty());
  CHECK_THROWS_AS(symmetric_digit_criterion(0), InputError);
}

TEST_CASE("closed forms") {
  CHECK(family_closed_form("gl2", 4) == 6);
  CHECK(family_closed_form("sl2", 9) == 6);
  CHECK(family_closed_form("psl2", 7) == 2);
  CHECK(family_closed_form("dihedral", 20) == 4);
  CHECK(family_closed_form("dihedral", 16) == 2);
  CHECK_THROWS_AS(family_closed_form("gl2", 6), InputError);
  CHECK_THROWS_AS(family_closed_form("sp4", 3), InputError);
}

TEST_CASE("nilpotent groups of order <= 128: e' = |Z| and full constituent set") {
  for (const char* spec :
       {"quaternion:8", "quaternion:16", "quaternion:32", "dihedral:16", "dihedral:32",
        "cyclic:16", "product:quaternion:8+cyclic:2", "product:dihedral:8+dihedral:8",
        "product:quaternion:8+cyclic:3", "product:cyclic:9+cyclic:3"}) {
    INFO(spec);
    auto G = construct_named(spec);
    auto T = dixon_schneider(G, {}, spec);
    auto [e, ep] = compute_e(T);
    BigInt z = center(G).order;
    CHECK(ep == z);
    // every chi in Irr(G/Z) is a constituent
    auto flags = constituents(T);
    std::vector<int> central;
    for (int j = 0; j < T.num_classes(); ++j)
      if (T.classes[j].size == 1) central.push_back(j);
    for (size_t i = 0; i < T.irr.size(); ++i) {
      bool z_trivial = true;
      for (int j : central) z_trivial = z_trivial && T.irr[i][j] == T.irr[i][0];
      if (z_trivial) CHECK(flags[i]);
    }
  }
}

TEST_CASE("multiplicativity over direct products") {
  auto e_of = [](const std::string& spec) { return compute_e(table_of(spec)).first; };
  CHECK(e_of("product:sym:3+cyclic:2") == e_of("sym:3") * e_of("cyclic:2"));
  CHECK(e_of("product:sym:3+sym:3") == e_of("sym:3") * e_of("sym:3"));
  CHECK(e_of("product:quaternion:8+sym:3") == e_of("quaternion:8") * e_of("sym:3"));
  CHECK(e_of("product:cyclic:6+sym:4") == e_of("sym:4"));
}

TEST_CASE("abelian iff e = 1") {
  for (const char* spec : {"cyclic:12", "dihedral:4", "product:cyclic:4+cyclic:6"}) {
    INFO(spec);
    CHECK(compute_e(table_of(spec)).first == 1);
  }
  for (const char* spec : {"sym:3", "quaternion:8", "alt:4", "dihedral:10"}) {
    INFO(spec);
    CHECK(compute_e(table_of(spec)).first != 1);
  }
}

TEST_CASE("analyze_group report") {
  auto R = analyze_group(GroupSpec::parse("sym:3"));
  CHECK(R.e == 3);
  CHECK(R.e_prime == 2);
  CHECK(R.e_tilde_defined);
  CHECK(R.e_tilde == 1);
  REQUIRE(R.f.size() == 2);
  CHECK(R.f[0] == std::make_pair(2LL, BigInt(3)));
  CHECK(R.f[1] == std::make_pair(3LL, BigInt(1)));
  CHECK(R.audits_ok());
  auto j = report_to_json(R);
  CHECK(j["e"] == "3");
  CHECK(j["f"]["2"] == "3");
  CHECK(j["auditsPass"] == true);
  // odd e': e~ flagged undefined
  auto R2 = analyze_group(GroupSpec::parse("cyclic:3"), {}, false);
  CHECK(!R2.e_tilde_defined);
  CHECK(report_to_json(R2)["eTilde"].is_null());
}

TEST_CASE("audit suite passes on assorted groups") {
  for (const char* spec : {"sym:5", "alt:4", "sl2:5", "dihedral:16", "gl2:3",
                           "product:alt:4+cyclic:2", "psl2:7"}) {
    INFO(spec);
    auto R = analyze_group(GroupSpec::parse(spec));
    CHECK(R.audits_ok());
  }
}
