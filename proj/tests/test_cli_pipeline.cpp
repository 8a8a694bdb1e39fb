// End-to-end exercises of the installed CLI binary (path via SPHSEP_CLI).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphsep/io.hpp"
#include "sphsep/lp.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
  const char* env = std::getenv("SPHSEP_CLI");
  REQUIRE_MESSAGE(env != nullptr, "SPHSEP_CLI must point at the binary");
  return env;
}

std::string work_dir() {
  static int counter = 0;
  const std::string dir = "cli_scratch_" + std::to_string(counter++);
  std::system(("mkdir -p " + dir).c_str());
  return dir;
}

int run(const std::string& args) {
  const int status = std::system((cli_path() + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen/separate/verify round-trip: disjoint") {
  const std::string dir = work_dir();
  CHECK(run("gen --type disjoint-closed --dim 3 --gens 4 --seed 11 --out " + dir + "/inst.json") == 0);
  CHECK(run("separate " + dir + "/inst.json --out " + dir + "/cert.json") == 0);
  CHECK(run("verify " + dir + "/cert.json " + dir + "/inst.json") == 0);
}

TEST_CASE("gen/separate/verify round-trip: intersecting exits 2") {
  const std::string dir = work_dir();
  CHECK(run("gen --type intersecting-closed --dim 2 --gens 3 --seed 5 --out " + dir + "/inst.json") == 0);
  CHECK(run("separate " + dir + "/inst.json --out " + dir + "/cert.json") == 2);
  CHECK(run("verify " + dir + "/cert.json " + dir + "/inst.json") == 0);
}

TEST_CASE("open pairs run through the same pipeline") {
  const std::string dir = work_dir();
  CHECK(run("gen --type open-disjoint --dim 3 --gens 3 --seed 21 --out " + dir + "/a.json") == 0);
  CHECK(run("separate " + dir + "/a.json --out " + dir + "/a_cert.json") == 0);
  CHECK(run("verify " + dir + "/a_cert.json " + dir + "/a.json") == 0);

  CHECK(run("gen --type open-intersecting --dim 3 --gens 3 --seed 22 --out " + dir + "/b.json") == 0);
  CHECK(run("separate " + dir + "/b.json --out " + dir + "/b_cert.json") == 2);
  CHECK(run("verify " + dir + "/b_cert.json " + dir + "/b.json") == 0);
}

TEST_CASE("antipodal generators on one side exit 3") {
  const std::string dir = work_dir();
  write_file(dir + "/bad.json", R"({
    "dim": 2,
    "side1": {"kind": "generators", "vectors": [["1","0"], ["-1","0"]]},
    "side2": {"kind": "generators", "vectors": [["0","1"]]}
  })");
  CHECK(run("separate " + dir + "/bad.json") == 3);
}

TEST_CASE("mixed side kinds exit 3") {
  const std::string dir = work_dir();
  write_file(dir + "/mixed.json", R"({
    "dim": 2,
    "side1": {"kind": "generators", "vectors": [["1","0"]]},
    "side2": {"kind": "halfspaces", "rows": [["1","0"]]}
  })");
  CHECK(run("separate " + dir + "/mixed.json") == 3);
}

TEST_CASE("corrupted certificates exit 1; wrong instance exits 1") {
  const std::string dir = work_dir();
  REQUIRE(run("gen --type disjoint-closed --dim 2 --gens 3 --seed 31 --out " + dir + "/i1.json") == 0);
  REQUIRE(run("gen --type disjoint-closed --dim 2 --gens 3 --seed 32 --out " + dir + "/i2.json") == 0);
  REQUIRE(run("separate " + dir + "/i1.json --out " + dir + "/c1.json") == 0);

  auto j = sphsep::Json::parse(read_file(dir + "/c1.json"));
  j["u"][0] = "99999";  // break the product identities
  write_file(dir + "/c1_bad.json", j.dump());
  CHECK(run("verify " + dir + "/c1_bad.json " + dir + "/i1.json") == 1);
  CHECK(run("verify " + dir + "/c1.json " + dir + "/i2.json") == 1);
}

TEST_CASE("float mode separates and verifies at tolerance") {
  const std::string dir = work_dir();
  REQUIRE(run("gen --type disjoint-closed --dim 3 --gens 4 --seed 41 --out " + dir + "/inst.json") == 0);
  CHECK(run("separate " + dir + "/inst.json --mode float --out " + dir + "/cert.json") == 0);
  CHECK(run("verify " + dir + "/cert.json " + dir + "/inst.json") == 0);
}

TEST_CASE("render: deterministic bytes, element counts, 4D rejected") {
  const std::string dir = work_dir();
  write_file(dir + "/anti.json", R"({
    "dim": 2,
    "side1": {"kind": "generators", "vectors": [["1","0"]]},
    "side2": {"kind": "generators", "vectors": [["-1","0"]]}
  })");
  REQUIRE(run("separate " + dir + "/anti.json --out " + dir + "/cert.json") == 0);
  REQUIRE(run("render " + dir + "/anti.json --certificate " + dir + "/cert.json --out " + dir + "/a.svg") == 0);
  REQUIRE(run("render " + dir + "/anti.json --certificate " + dir + "/cert.json --out " + dir + "/b.svg") == 0);
  const std::string svg = read_file(dir + "/a.svg");
  CHECK(svg == read_file(dir + "/b.svg"));

  std::size_t rays = 0, pos = 0;
  while ((pos = svg.find("class=\"ray", pos)) != std::string::npos) { ++rays; pos += 10; }
  CHECK(rays == 2);
  CHECK(svg.find("class=\"separator\"") != std::string::npos);

  write_file(dir + "/4d.json", R"({
    "dim": 4,
    "side1": {"kind": "generators", "vectors": [["1","0","0","0"]]}
  })");
  CHECK(run("render " + dir + "/4d.json --out " + dir + "/4d.svg") == 3);
}

TEST_CASE("support and margin subcommands") {
  const std::string dir = work_dir();
  write_file(dir + "/poly.json", R"({
    "dim": 2,
    "side1": {"kind": "vertices", "vertices": [["1","0"],["0","1"],["-1","0"],["0","-1"]]},
    "queries": [["3","4"], ["0","0"]],
    "alpha": "5"
  })");
  CHECK(run("support " + dir + "/poly.json --out " + dir + "/sup.json") == 0);
  const auto report = sphsep::Json::parse(read_file(dir + "/sup.json"));
  CHECK(report[0]["sigma"].get<std::string>() == "4");
  CHECK(report[0]["d_alpha_member"].get<bool>() == true);
  CHECK(report[1]["sigma"].get<std::string>() == "0");

  write_file(dir + "/caps.json", R"({
    "dim": 2,
    "side1": {"kind": "generators", "vectors": [["1","0"]]},
    "side2": {"kind": "generators", "vectors": [["-1","0"]]}
  })");
  CHECK(run("margin " + dir + "/caps.json --out " + dir + "/margin.json") == 0);
  const auto margin = sphsep::Json::parse(read_file(dir + "/margin.json"));
  CHECK(margin["r_star"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

  write_file(dir + "/nested.json", R"({
    "dim": 2,
    "side1": {"kind": "generators", "vectors": [["1","0"],["0","1"]]},
    "side2": {"kind": "generators", "vectors": [["1","1"],["2","1"]]}
  })");
  CHECK(run("margin " + dir + "/nested.json") == 2);
}

TEST_CASE("lp certificates verify through the CLI") {
  using namespace sphsep;
  const std::string dir = work_dir();
  LinearProgram<Rational> lp;
  lp.sense = Sense::Maximize;
  lp.objective = VectorXr::Ones(1);
  lp.constraints = MatrixXr::Ones(1, 1);
  lp.relations = {Relation::LessEq};
  lp.rhs = VectorXr::Ones(1);
  lp.bounds = {VariableBound<Rational>::non_negative()};

  Json instance;
  instance["dim"] = 2;
  instance["lp"] = lp_to_json(lp);
  write_file(dir + "/lp_inst.json", instance.dump());
  write_file(dir + "/lp_cert.json", certificate_to_json(solve(lp)).dump());
  CHECK(run("verify " + dir + "/lp_cert.json " + dir + "/lp_inst.json") == 0);

  auto corrupt = Json::parse(read_file(dir + "/lp_cert.json"));
  corrupt["primal"][0] = "7";
  write_file(dir + "/lp_bad.json", corrupt.dump());
  CHECK(run("verify " + dir + "/lp_bad.json " + dir + "/lp_inst.json") == 1);
}

TEST_CASE("suite subcommand exit codes") {
  const std::string dir = work_dir();
  CHECK(run("suite --trials 1 --seed 3 --out " + dir + "/report.json") == 0);
  const auto report = sphsep::Json::parse(read_file(dir + "/report.json"));
  CHECK(report["total_failures"].get<int>() == 0);
  CHECK(run("suite --trials 1 --seed 3 --self-test-fail") != 0);
}

TEST_CASE("missing and malformed files exit 3") {
  CHECK(run("separate does_not_exist.json") == 3);
  const std::string dir = work_dir();
  write_file(dir + "/broken.json", "{ not json");
  CHECK(run("separate " + dir + "/broken.json") == 3);
}
