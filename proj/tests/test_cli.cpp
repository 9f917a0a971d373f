#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = 0;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = ihara::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(IHARA_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("ihara_cli_test_" + name);
  std::ofstream(p) << contents;
  return p.string();
}

}  // namespace

TEST_CASE("validate") {
  const Run wheel = run({"validate", "--graph", data("wheel5.edges")});
  CHECK(wheel.code == 0);
  CHECK(wheel.parsed()["admissible"] == true);
  CHECK(wheel.parsed()["edges"] == 8);

  const Run c5 = run({"validate", "--graph", data("c5.edges")});
  CHECK(c5.code == 1);
  CHECK(c5.parsed()["violations"] == json::array({"IsCycleGraph"}));

  CHECK(run({"validate", "--graph", temp_file("empty.edges", "")}).code == 2);
  CHECK(run({"validate", "--graph", temp_file("bad.edges", "0 1\n1 x\n")}).code == 2);
  CHECK(run({"validate", "--graph", temp_file("loop.edges", "0 1\n1 1\n")}).code == 2);
  CHECK(run({"validate", "--graph", "/nonexistent.edges"}).code == 2);
}

TEST_CASE("argument errors exit with the input-error code") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"zeta"}).code == 2);
  CHECK(run({"zeta", "--graph", data("k4.edges"), "--a", "0.1", "--a-frac", "0.5"}).code == 2);
  CHECK(run({"zeta", "--graph", data("k4.edges"), "--format", "yaml"}).code == 2);
  CHECK(run({"zeta", "--graph", data("k4.edges"), "--order", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("zeta on K4") {
  const Run r = run({"zeta", "--graph", data("k4.edges"), "--order", "8"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["coefficients"][0] == "1");
  CHECK(j["coefficients"][1] == "0");
  CHECK(j["coefficients"][3] == "8");
  CHECK(j["coefficients"].size() == 9);
  CHECK(j["checks"]["euler_product"] == "match");
  CHECK(j["lambda"]["value"] == 2.0);
  CHECK(j["tail_bound_at"]["x"] == 0.25);

  // Longer orders recompute traces.
  const json longer = run({"zeta", "--graph", data("k4.edges"), "--order", "40"}).parsed();
  CHECK(longer["coefficients"].size() == 41);
  CHECK(longer["checks"]["euler_product_order"] == 8);
}

TEST_CASE("domain rejections") {
  CHECK(run({"zeta", "--graph", data("c5.edges")}).code == 1);
  CHECK(run({"entropy", "--graph", data("k4.edges"), "--a", "0.5", "--dist", data("uniform2.json")}).code == 1);
  CHECK(run({"max", "--graph", data("k4.edges"), "--a-frac", "1.5"}).code == 1);
}

TEST_CASE("entropy") {
  const std::string one = temp_file("one.json", "[1]");
  const Run degenerate = run({"entropy", "--graph", data("k4.edges"), "--dist", one});
  REQUIRE(degenerate.code == 0);
  CHECK(degenerate.parsed()["S"] == 0.0);

  const Run r = run({"entropy", "--graph", data("k4.edges"), "--a", "0.25", "--dist", data("uniform2.json"), "--q", "2"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["terms"].size() == 2);
  CHECK(j["comparators"]["tsallis_q"]["value"] == 0.5);
  CHECK(j["maximizer_c"].get<double>() > 0);
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(r.out);
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"S", "terms", "a", "N", "lambda", "maximizer_c", "comparators"});

  CHECK(run({"entropy", "--graph", data("k4.edges"), "--dist", temp_file("bad.json", "[0.2, 0.2]")}).code == 2);
}

TEST_CASE("max on K4") {
  const Run r = run({"max", "--graph", data("k4.edges"), "--a-frac", "0.5"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["c"].get<double>() > 0);
  CHECK(j["c"].get<double>() < 1);
  CHECK(std::fabs(j["h_at_c"].get<double>()) <= 1e-12);
  CHECK(j["certificate"] == "pass");
}

TEST_CASE("primes listing") {
  const Run r = run({"primes", "--graph", data("k4.edges"), "--max-length", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  REQUIRE(all.size() == 9);
  const json summary = json::parse(all.back());
  CHECK(summary["histogram"]["3"] == 8);
  CHECK(summary["total"] == 8);
}

TEST_CASE("group law") {
  const Run r = run({"group-law", "--graph", data("k4.edges"), "--a", "0.25", "--order", "10"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["a_exact"] == "1/4");
  for (const char* key : {"inverse", "unit", "commutativity", "associativity", "leading_terms", "log_normalized"}) {
    CHECK(j["checks"][key] == "pass");
  }
  CHECK(j["checks"]["associativity_order"] == 10);
}

TEST_CASE("compare") {
  const Run r = run({"compare", "--graph", data("petersen.edges"), "--dist", data("skewed3.txt")});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["tsallis"]["q"] == 2.0);
  CHECK(j["tsallis"]["value"] == 0.625);
  CHECK(j["shannon"].get<double>() == doctest::Approx(1.0397207708399179));
}

TEST_CASE("output is deterministic and text mode carries the same content") {
  const std::vector<std::string> args{"entropy", "--graph", data("wheel5.edges"), "--dist", data("skewed3.txt")};
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);

  auto text_args = args;
  text_args.insert(text_args.end(), {"--format", "text"});
  const Run t = run(text_args);
  REQUIRE(t.code == 0);
  const json j = a.parsed();
  CHECK(t.out.find("S: " + j["S"].dump()) != std::string::npos);
  CHECK(t.out.find("comparators.shannon: ") != std::string::npos);
}
