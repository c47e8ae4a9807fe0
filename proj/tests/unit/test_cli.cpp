#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/cli.hpp"
#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef HOLO_DATA_DIR
#define HOLO_DATA_DIR "data"
#endif

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holo");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = holo::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(HOLO_DATA_DIR) + "/forms/" + f; }

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "cli_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("unknown subcommand exits 2") {
  auto r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("frobnicate") != std::string::npos);
  CHECK(run({}).code == 2);
}

TEST_CASE("holonomy of the G2 form") {
  auto r = run({"holonomy", "--form", data("g2.frm"), "--json"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["schema"] == 1);
  CHECK(j["dim"] == 21);
  CHECK(j["semisimple"] == true);
}

TEST_CASE("holonomy of the empty form") {
  auto r = run({"holonomy", "--form", data("empty.frm"), "--dim", "4", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["dim"] == 0);
}

TEST_CASE("parse error exits 2 and names the line") {
  auto r = run({"holonomy", "--form", data("bad.frm"), "--json"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  auto p = temp_file("bad2.frm", "1 2 3 : 1\n1 2 2 : 1\n");
  auto r2 = run({"holonomy", "--form", p});
  CHECK(r2.code == 2);
  CHECK(r2.err.find("line 2") != std::string::npos);
  CHECK(run({"holonomy", "--form", "/nonexistent.frm"}).code == 2);
  CHECK(run({"holonomy", "--bogus-flag"}).code == 2);
}

TEST_CASE("exact numbers are strings") {
  auto r = run({"square-parts", "--form", data("cartan.frm"), "--json"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["schema"] == 1);
  CHECK(j["t0"].is_string());
  auto f = run({"square-parts", "--form", data("cartan.frm"), "--json", "--mode", "float"});
  REQUIRE(f.code == 0);
  CHECK(f.json()["t0"].is_number());
}

TEST_CASE("same seed, same bytes") {
  std::vector<std::string> args{"annihilators", "--dim", "6", "--grade", "3", "--seed", "5", "--json"};
  auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"classify-torsion", "--form", data("e1234_e3456.frm"), "--json"});
  auto d = run({"classify-torsion", "--form", data("e1234_e3456.frm"), "--json"});
  CHECK(c.out == d.out);
}

TEST_CASE("Aloff-Wallach and Sasakian subcommands") {
  auto c = run({"aw", "classify", "--s", "1", "--y", "2", "--json"});
  REQUIRE(c.code == 0);
  auto s = run({"sasakian", "veronese", "--point", "1,2,3,4", "--json"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["schema"] == 1);
  CHECK(run({"aw", "solve", "--s", "1", "--y", "0", "--json"}).code != 0);
}

TEST_CASE("spin9 check") {
  auto r = run({"spin9", "--check-all", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["prolongation_dim"] == 0);
}

TEST_CASE("transport of a loop file") {
  auto r = run({"transport", "--form", data("cartan.frm"), "--loop", data("triangle_z.txt"), "--json"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["matrix"].size() == 3);
  CHECK(j.contains("angle"));
  CHECK(j.contains("axis"));
  auto p = temp_file("loop_bad.txt", "0 0 0\n1 0\n");
  CHECK(run({"transport", "--form", data("cartan.frm"), "--loop", p}).code == 2);
}

TEST_CASE("det4 of a rational input") {
  auto r = run({"det4", "--form", data("det4.frm"), "--json"});
  REQUIRE(r.code == 0);
  auto j = r.json();
  CHECK(j["det"].is_string());
  CHECK(j["agree"] == true);
  CHECK(j["det"] == j["closed_form"]);
}
