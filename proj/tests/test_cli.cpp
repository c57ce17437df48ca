#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsn/cli.hpp"

using namespace gsn;

namespace {

const std::string kData = GSN_DATA_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("count writes one CSV row per vertex") {
  const Run r = run({"count", kData + "/molecules/decalin.json", "--family", "cycle", "--k", "6"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  CHECK(line == "graph_id,vertex_id,C3:o0,C4:o0,C5:o0,C6:o0");
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 10);
}

TEST_CASE("count JSON carries the configuration") {
  const Run r = run({"count", kData + "/molecules/bicyclopentyl.json", "--family", "clique", "--k",
                     "4", "--format", "json", "--level", "both", "--seed", "5"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format_version"] == 1);
  CHECK(j["command"] == "count");
  CHECK(j["config"]["seed"] == 5);
  CHECK(j["config"].contains("collection"));
}

TEST_CASE("wl and gsn-test on the two molecules") {
  const std::string a = kData + "/molecules/decalin.json", b = kData + "/molecules/bicyclopentyl.json";
  Run r = run({"wl", a, b, "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["results"][0]["distinguished"] == false);
  r = run({"gsn-test", a, b, "--family", "cycle", "--k", "6", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["results"][0]["distinguished"] == true);
  r = run({"gsn-test", a, b, "--variant", "mpnn", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["results"][0]["distinguished"] == false);
}

TEST_CASE("graph6 input with several graphs") {
  const auto p = temp_file("gsn_cli_pair.g6", "OlfJHsHBGK_\\oHWKeBK_\\\nO~`HW}GPHDaNaGPCcPWaN\n");
  const Run r = run({"wl", p.string(), "--test", "fwl2", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["results"][0]["distinguished"] == false);
  std::filesystem::remove(p);
}

TEST_CASE("verify exit codes") {
  Run r = run({"verify", "reconstruction", "--trials", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("suite,case,passed,detail\n", 0) == 0);
  r = run({"verify", "no-such-suite"});
  CHECK(r.code == kExitUsage);
  const auto dir = std::filesystem::temp_directory_path() / "gsn_cli_bad_sr";
  std::filesystem::create_directories(dir);
  // graphs of different orders in one file cannot share a 2-FWL histogram
  std::ofstream(dir / "mixed.g6") << "OlfJHsHBGK_\\oHWKeBK_\\\nD~{\n";
  r = run({"verify", "fwl2_sr", "--sr-dir", dir.string()});
  CHECK(r.code == kExitVerifyFailed);
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"count", "--no-such-flag"}).code == kExitUsage);
  CHECK(run({"count", "/nonexistent/file.g6"}).code == kExitUsage);
  const auto empty = temp_file("gsn_cli_empty.g6", "");
  const Run r = run({"count", empty.string()});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
  std::filesystem::remove(empty);
  CHECK(run({"count", kData + "/molecules/decalin.json", "--family", "cycle", "--k", "40"}).code ==
        kExitUsage);
  CHECK(run({"gsn-test", kData + "/molecules/decalin.json", "--layers", "0"}).code == kExitUsage);
}

TEST_CASE("delta and bench") {
  Run r = run({"delta", kData + "/molecules/decalin.json", "--family", "cycle", "--k", "6"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("family,k,mode,graphs,vertices,delta\n", 0) == 0);
  CHECK(r.out.find("cycle,6,graphlet,1,10,0.2") != std::string::npos);
  r = run({"bench", "--generate", "sparse", "--sizes", "20,40", "--family", "cycle", "--k", "4"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("graph_id,n,m,family,k,seconds,count,reps,timed_out\n", 0) == 0);
  CHECK(run({"bench", "--generate", "sparse", "--reps", "2"}).code == kExitUsage);
}
