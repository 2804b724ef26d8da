#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xprod/cli.hpp"
#include "xprod/json_io.hpp"
#include "xprod/parallel.hpp"

using namespace xprod;

namespace {

const std::string kFixtureDir = std::string(XPROD_SOURCE_DIR) + "/fixtures/";

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"xprod"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json parse_out(const CliResult& r) { return Json::parse(r.out); }

// A scenario file with reduced verification counts, for fast CLI checks.
std::string write_quick_scenario() {
  Json j = Json::parse(std::ifstream(kFixtureDir + "f2_diag2.json"));
  j["verify"] = Json{{"word_checks", 40},      {"monomial_checks", 40},
                     {"partition_tuples", 2},  {"cumulant_tuples", 10},
                     {"roundtrip_tuples", 10}, {"oracle_tuples", 10},
                     {"example_checks", 6},    {"freeness_instances", 20},
                     {"spot_instances", 4}};
  j["freeness"]["trials"] = 20;
  const std::string path =
      (std::filesystem::temp_directory_path() / "xprod_quick_scenario.json").string();
  std::ofstream(path) << j.dump(2);
  return path;
}

}  // namespace

TEST_CASE("nc subcommand") {
  const CliResult r = run({"nc", "--n", "4"});
  CHECK(r.code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("count") == 14);
  CHECK(j.at("partitions").size() == 14);
  for (const auto& p : j.at("partitions")) {
    CHECK(p != Json::parse("[[1,3],[2,4]]"));
  }
}

TEST_CASE("nc rejects out-of-range sizes") {
  const CliResult r = run({"nc", "--n", "0"});
  CHECK(r.code == 2);
  CHECK(parse_out(r).contains("error"));
  CHECK(run({"nc", "--n", "11"}).code == 2);
}

TEST_CASE("mobius subcommand") {
  const CliResult r = run({"mobius", "--n", "4"});
  CHECK(r.code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("mu_bottom_top") == -5);
  CHECK(j.at("column").size() == 14);

  const CliResult full = run({"mobius", "--n", "3", "--full"});
  const Json jf = parse_out(full);
  // Sum over each fixed lower end of the full table's intervals is zero
  // unless the interval is trivial.
  long long bottom_row_sum = 0;
  for (const auto& row : jf.at("table")) {
    if (row.at("pi") == Json::parse("[[1],[2],[3]]")) {
      bottom_row_sum += row.at("mu").get<long long>();
    }
  }
  CHECK(bottom_row_sum == 0);
}

TEST_CASE("moments subcommand reproduces the nested bracket value") {
  const CliResult r = run({"moments", "--scenario", kFixtureDir + "f2_diag2.json"});
  CHECK(r.code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("partition") == Json::parse("[[1,4],[2,3]]"));
  CHECK(j.at("value").at("entries") == Json::parse("[\"4\",\"12\"]"));
}

TEST_CASE("cumulants subcommand agrees with the factorized route") {
  const CliResult r = run({"cumulants", "--scenario", kFixtureDir + "f2_diag2.json"});
  CHECK(r.code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("factorized_agrees") == true);
  CHECK(j.at("factorized").at("entries") == Json::parse("[\"4\",\"6\"]"));
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"moments", "--scenario", "/nonexistent.json"}).code == 2);
  CHECK(run({"bogus-subcommand"}).code == 2);
  CHECK(run({}).code == 2);
  const CliResult r = run({"moments", "--scenario", kFixtureDir + "z2z3_diag6.json"});
  CHECK(r.code == 2);  // that fixture has no moments task
}

TEST_CASE("check-freeness over a fixture") {
  const CliResult r =
      run({"check-freeness", "--scenario", kFixtureDir + "f2_diag2.json"});
  CHECK(r.code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("verdict") == true);
  CHECK(j.at("splits").size() == 1);
  CHECK(j.at("splits")[0].at("violations").empty());
}

TEST_CASE("selftest runs the built-in configurations") {
  const CliResult r = run({"selftest"});
  CHECK(r.code == 0);
  const Json j = parse_out(r);
  CHECK(j.at("verdict") == true);
  CHECK(j.at("fixtures").size() == 4);
}

TEST_CASE("thread count resolution order") {
  unsetenv("XPROD_THREADS");
  CHECK(resolve_threads(0) == 1);
  CHECK(resolve_threads(3) == 3);
  setenv("XPROD_THREADS", "5", 1);
  CHECK(resolve_threads(0) == 5);
  CHECK(resolve_threads(2) == 2);  // explicit flag wins
  unsetenv("XPROD_THREADS");
}

TEST_CASE("verify-paper: quick scenario, determinism, seed override") {
  const std::string path = write_quick_scenario();

  const CliResult a = run({"verify-paper", "--scenario", path});
  REQUIRE(a.code == 0);
  const Json ja = parse_out(a);
  CHECK(ja.at("verdict") == true);
  for (const char* key :
       {"(2.3)", "(2.4)", "(2.7)", "(2.8)", "Thm3.1", "Cor3.2", "Example2.1", "Example2.2"}) {
    INFO(key);
    REQUIRE(ja.at("sections").contains(key));
    CHECK(ja.at("sections").at(key).at("pass") == true);
  }

  // Byte-identical across runs and thread counts.
  const CliResult b = run({"verify-paper", "--scenario", path});
  CHECK(a.out == b.out);
  const CliResult c = run({"verify-paper", "--scenario", path, "--threads", "8"});
  CHECK(a.out == c.out);

  // A different seed produces a different (but still passing) report.
  const CliResult d = run({"verify-paper", "--scenario", path, "--seed", "12345"});
  CHECK(d.code == 0);
  CHECK(parse_out(d).at("seed") == 12345);
}
