#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "conjchar/brauer.hpp"
#include "conjchar/dixon.hpp"
#include "conjchar/named_groups.hpp"
#include "conjchar/subgroups.hpp"

using namespace conjchar;

namespace {

std::string data_path(const std::string& rel) {
  return std::string(CONJCHAR_SOURCE_DIR) + "/data/" + rel;
}

CharTable table_of(const std::string& spec) {
  return dixon_schneider(construct_named(spec), {}, spec);
}

}  // namespace

TEST_CASE("Y_p for S3 at both primes") {
  auto b3 = load_table(data_path("brauer/s3_p3.json"));
  auto Y3 = build_Yp(b3);
  CHECK(Y3.at(0, 0) == 2);
  CHECK(Y3.at(0, 1) == 0);
  CHECK(Y3.at(1, 1) == 2);
  CHECK(elementary_divisor_largest(Y3) == 2);
  auto b2 = load_table(data_path("brauer/s3_p2.json"));
  auto Y2 = build_Yp(b2);
  CHECK(Y2.at(0, 0) == 2);
  CHECK(Y2.at(0, 1) == 1);
  CHECK(Y2.at(1, 1) == 5);
  CHECK(smith_normal_form(Y2).diagonal == std::vector<BigInt>{1, 9});
  CHECK(det_bareiss(Y2) == 9);
}

TEST_CASE("p not dividing the order reuses the ordinary table") {
  auto s3 = table_of("sym:3");
  auto b5 = brauer_restrict(s3, 5);
  auto [e, ep] = compute_e(s3);
  CHECK(f_p_from_brauer(b5) == e);
  CHECK(f_p_snf_route(b5) == e);
  // Y_5 = Y of the ordinary table
  CHECK(build_Yp(b5) == build_Y(s3));
  CHECK(recover_centralizer(b5, 0) == 6);  // |C(1)|_{5'} = |G|
}

TEST_CASE("three-route f_p agreement on the ingested corpus") {
  struct Item {
    const char* file;
    const char* group;
    long long p;
    long long expected_f;
  };
  for (auto [file, group, p, expected] :
       {Item{"brauer/s3_p2.json", "sym:3", 2, 3}, Item{"brauer/s3_p3.json", "sym:3", 3, 1},
        Item{"brauer/a4_p2.json", "alt:4", 2, 1}, Item{"brauer/a4_p3.json", "alt:4", 3, 2},
        Item{"brauer/s4_p2.json", "sym:4", 2, 3}, Item{"brauer/s4_p3.json", "sym:4", 3, 4}}) {
    INFO(file);
    auto B = load_table(data_path(file));
    CHECK(verify_table(B).ok);
    auto T = table_of(group);
    BigInt route1 = compute_f_p(T, p);
    BigInt route2 = f_p_from_brauer(B);
    BigInt route3 = f_p_snf_route(B);
    CHECK(route1 == expected);
    CHECK(route2 == expected);
    CHECK(route3 == expected);
  }
}

TEST_CASE("centralizer recovery matches stored parts on every column") {
  for (const char* file : {"brauer/s3_p2.json", "brauer/s3_p3.json", "brauer/a4_p2.json",
                           "brauer/a4_p3.json", "brauer/s4_p2.json", "brauer/s4_p3.json"}) {
    auto B = load_table(data_path(file));
    for (int j = 0; j < B.num_classes(); ++j) {
      INFO(file << " column " << j);
      CHECK(recover_centralizer(B, j) == p_prime_part(B.classes[j].centralizer, B.prime));
    }
  }
  // spec example: S3 at p=3, transposition column recovers |C|_{3'} = 2, identity gives |G|_{3'}
  auto b3 = load_table(data_path("brauer/s3_p3.json"));
  CHECK(recover_centralizer(b3, 1) == 2);
  CHECK(recover_centralizer(b3, 0) == 2);
}

TEST_CASE("audit_brauer verdicts") {
  auto B = load_table(data_path("brauer/s3_p2.json"));
  auto T = table_of("sym:3");
  auto G = construct_named("sym:3");
  auto analysis = audit_brauer(B, &T, derived_subgroup(G).order);
  CHECK(analysis.ok());
  CHECK(analysis.f_coefficient == 3);
  CHECK(analysis.det_Yp == 9);
  REQUIRE(analysis.audits.size() == 4);
  for (auto& a : analysis.audits) CHECK(a.status == "pass");
  CHECK(analysis.recovered == std::vector<BigInt>{3, 3});
  // without companion data, (a) is skipped, the rest still runs
  auto partial = audit_brauer(B);
  CHECK(partial.audits[0].status == "skipped");
  CHECK(partial.audits[1].status == "pass");
  CHECK(partial.audits[2].status == "pass");  // derivedOrder comes from the file
}

TEST_CASE("corrupt Brauer tables are rejected") {
  auto B = load_table(data_path("brauer/s3_p3.json"));
  auto bad = B;
  bad.irr[1][1] = Cyc(2);  // breaks the determinant identity
  CHECK(!verify_table(bad).ok);
  std::ostringstream os;
  save_table(bad, os);
  std::istringstream is(os.str());
  CHECK_THROWS_AS(load_table(is), InputError);
  // a singular matrix is flagged
  auto sing = B;
  sing.irr[1] = sing.irr[0];
  auto R = verify_table(sing);
  CHECK(!R.ok);
  // p-singular class sneaking in
  auto wrongp = B;
  wrongp.classes[1].element_order = 3;
  CHECK(!verify_table(wrongp).ok);
}

TEST_CASE("brauer file round trip") {
  auto B = load_table(data_path("brauer/s4_p3.json"));
  std::ostringstream os;
  save_table(B, os);
  std::istringstream is(os.str());
  auto back = load_table(is);
  CHECK(back == B);
  CHECK(back.ordinary_ref == "../tables/s4.json");
  CHECK(back.derived_order == 12);
}
