#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "conjchar/cli.hpp"

using namespace conjchar;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string source_dir() { return CONJCHAR_SOURCE_DIR; }

}  // namespace

TEST_CASE("analyze command") {
  auto r = run_cli({"analyze", "dihedral:12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e' = 4") != std::string::npos);
  auto r2 = run_cli({"analyze", "sym:3", "--json"});
  CHECK(r2.code == 0);
  auto j = nlohmann::json::parse(r2.out);
  CHECK(j["e"] == "3");
  CHECK(j["ePrime"] == "2");
  CHECK(j["f"]["2"] == "3");
  CHECK(j["f"]["3"] == "1");
  auto r3 = run_cli({"analyze", "product:sym:3+cyclic:2", "--json"});
  CHECK(nlohmann::json::parse(r3.out)["e"] == "3");
  // parse and budget failures exit 2
  CHECK(run_cli({"analyze", "nonsense"}).code == 2);
  CHECK(run_cli({"--max-order", "10", "analyze", "sym:4"}).code == 2);
  CHECK(run_cli({"bogus-command"}).code == 2);
}

TEST_CASE("snf command") {
  auto tmp = std::filesystem::temp_directory_path() / "conjchar_y.mat";
  {
    std::ofstream f(tmp);
    f << "3 3\n3 1 1\n1 3 1\n1 1 5\n";
  }
  auto r = run_cli({"snf", tmp.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 18\n");
  CHECK(run_cli({"snf", "/nonexistent/file"}).code == 2);
  std::filesystem::remove(tmp);
}

TEST_CASE("table command round trips") {
  auto tmp = std::filesystem::temp_directory_path() / "conjchar_s4.json";
  auto r = run_cli({"table", "sym:4", "--out", tmp.string()});
  CHECK(r.code == 0);
  auto T = load_table(tmp.string());
  CHECK(T.order == 24);
  // reload and re-save: identical bytes
  std::ostringstream os;
  save_table(T, os);
  std::ifstream in(tmp);
  std::stringstream orig;
  orig << in.rdbuf();
  CHECK(os.str() == orig.str());
  std::filesystem::remove(tmp);
}

TEST_CASE("verify command") {
  auto r = run_cli({"verify", "order-3955"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3/3 ok") != std::string::npos);
  auto r2 = run_cli({"verify", "gl2"});
  CHECK(r2.code == 0);
  CHECK(run_cli({"verify", "no-such-suite"}).code == 2);
  auto r3 = run_cli({"verify", "brauer", "--data", source_dir() + "/data"});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("8/8 ok") != std::string::npos);
  // missing ingestion data: cases are skipped, not failed
  auto r4 = run_cli({"verify", "brauer", "--data", "/nonexistent"});
  CHECK(r4.code == 0);
  CHECK(r4.out.find("skipped") != std::string::npos);
}

TEST_CASE("brauer command") {
  auto r = run_cli({"brauer", source_dir() + "/data/brauer/s3_p2.json", "--recover"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f_p = 3") != std::string::npos);
  CHECK(r.out.find("recovered |C|_{p'} per class: 3 3") != std::string::npos);
  auto r2 = run_cli({"brauer", source_dir() + "/data/brauer/s3_p3.json", "--json"});
  CHECK(r2.code == 0);
  auto j = nlohmann::json::parse(r2.out);
  CHECK(j["fCoefficient"] == "1");
  CHECK(run_cli({"brauer", "/nonexistent.json"}).code == 2);
  // ordinary table file is rejected by the brauer command
  CHECK(run_cli({"brauer", source_dir() + "/data/tables/s3.json"}).code == 2);
}

TEST_CASE("conjecture scan is observational") {
  auto r = run_cli({"conjecture-scan", "--max-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nothing here is asserted") != std::string::npos);
  CHECK(r.out.find("n=6") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).code == 0);
}
