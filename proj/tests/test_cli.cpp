// End-to-end tests for the qwb binary. The binary path comes from the
// QWB_BIN environment variable (set by the ctest registration).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using json = nlohmann::ordered_json;

std::string qwb() {
  const char* p = std::getenv("QWB_BIN");
  REQUIRE_MESSAGE(p != nullptr, "QWB_BIN not set");
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path tmp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "qwb_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  auto path = tmp_dir() / name;
  std::ofstream(path) << content;
  return path.string();
}

const char* kBondleBundle = R"({
  "order": 3,
  "ops": {
    "star":   [[0,2,0],[1,1,1],[2,0,2]],
    "dot":    [[1,0,2],[1,1,1],[0,2,1]],
    "bullet": [[1,0,2],[1,1,1],[0,2,1]]
  }
})";

}  // namespace

TEST_CASE("check kinds and exit codes on the order-3 example") {
  std::string file = write_file("bondle3.json", kBondleBundle);

  RunResult osq = run(qwb() + " check --kind osq --input " + file);
  CHECK(osq.exit_code == 0);
  CHECK(json::parse(osq.out)["ok"] == true);

  RunResult full = run(qwb() + " check --kind osq --mode full --input " + file);
  CHECK(full.exit_code == 0);

  RunResult bondle = run(qwb() + " check --kind bondle --mode theorem --input " + file);
  CHECK(bondle.exit_code == 1);
  json rep = json::parse(bondle.out);
  CHECK(rep["ok"] == false);
  CHECK(rep["failed_axiom"] == "eq_bondles");
  CHECK(rep["witness"] == json::array({0, 0}));

  RunResult eqb = run(qwb() + " check --kind eq-bondles --input " + file);
  CHECK(eqb.exit_code == 1);
}

TEST_CASE("quandle check failures") {
  std::string file = write_file("notidem.json",
                                R"({"order":3,"ops":{"star":[[1,2,0],[0,1,2],[2,0,1]]}})");
  RunResult r = run(qwb() + " check --kind quandle --input " + file);
  CHECK(r.exit_code == 1);
  json rep = json::parse(r.out);
  CHECK(rep["failed_axiom"] == "idempotent");
  CHECK(rep["witness"] == json::array({0}));
}

TEST_CASE("input errors exit 2") {
  std::string garbage = write_file("garbage.json", "{not json");
  CHECK(run(qwb() + " check --kind quandle --input " + garbage).exit_code == 2);

  std::string out_of_range =
      write_file("range.json", R"({"order":2,"ops":{"star":[[0,5],[1,1]]}})");
  CHECK(run(qwb() + " check --kind quandle --input " + out_of_range).exit_code == 2);

  std::string missing_role =
      write_file("norole.json", R"({"order":2,"ops":{"star":[[0,0],[1,1]]}})");
  CHECK(run(qwb() + " check --kind bondle --input " + missing_role).exit_code == 2);

  CHECK(run(qwb() + " check --kind quandle --input /nonexistent.json").exit_code == 2);
  CHECK(run(qwb() + " check --kind quandle").exit_code == 2);  // missing flag
  CHECK(run(qwb() + " search eq-bondles-fails --max-order 9").exit_code == 2);
}

TEST_CASE("convert round-trip through the map presentation") {
  std::string file = write_file("bondle3.json", kBondleBundle);
  RunResult to = run(qwb() + " convert to-rmaps --input " + file);
  REQUIRE(to.exit_code == 0);
  json maps = json::parse(to.out);
  // R1 is the transpose of dot
  CHECK(maps["rmaps"]["R1"] == json::parse("[[1,1,0],[0,1,2],[2,1,1]]"));

  std::string rmaps_file = write_file("rmaps.json", to.out);
  RunResult back = run(qwb() + " convert to-binop --input " + rmaps_file);
  REQUIRE(back.exit_code == 0);
  json bundle = json::parse(back.out);
  CHECK(bundle["ops"]["dot"] == json::parse(kBondleBundle)["ops"]["dot"]);
}

TEST_CASE("construct families and pipe into check") {
  RunResult proj = run(qwb() + " construct projection --order 3");
  REQUIRE(proj.exit_code == 0);
  CHECK(json::parse(proj.out)["ops"]["star"] == json::parse("[[0,0,0],[1,1,1],[2,2,2]]"));

  std::string mesh = write_file("mesh.json",
                                R"({"components":[[2],[2]],"constants":[[[0],[1]],[[1],[0]]]})");
  RunResult piped = run(qwb() + " construct mesh --input " + mesh + " | " + qwb() +
                        " check --kind quandle --input -");
  CHECK(piped.exit_code == 0);

  std::string bad_mesh =
      write_file("badmesh.json", R"({"components":[[2]],"constants":[[[1]]]})");
  CHECK(run(qwb() + " construct mesh --input " + bad_mesh).exit_code == 2);

  // construction output is byte-stable across runs
  RunResult again = run(qwb() + " construct projection --order 3");
  CHECK(again.out == proj.out);
}

TEST_CASE("power families validate against their checkers") {
  std::string file = write_file("bondle3.json", kBondleBundle);
  auto bundle_path = (tmp_dir() / "power.json").string();
  RunResult r = run(qwb() + " construct power-bondle --input " + file +
                    " --n 1 --m 2 > " + bundle_path + " && " + qwb() +
                    " check --kind bondle --mode theorem --input " + bundle_path);
  CHECK(r.exit_code == 0);

  RunResult osq = run(qwb() + " construct power-osq --input " + file + " --n 0 --m -1 > " +
                      bundle_path + " && " + qwb() + " check --kind osq --input " + bundle_path);
  CHECK(osq.exit_code == 0);
}

TEST_CASE("enumerate quandles and extensions") {
  auto catalog = (tmp_dir() / "catalog.jsonl").string();
  RunResult r = run(qwb() + " enumerate --kind quandle --order 3 --output " + catalog);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "3\n");
  std::ifstream in(catalog);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    json b = json::parse(line);
    CHECK(b["order"] == 3);
    ++lines;
  }
  CHECK(lines == 3);

  std::string proj2 = write_file("proj2.json", R"({"order":2,"ops":{"star":[[0,0],[1,1]]}})");
  RunResult ext = run(qwb() + " enumerate --kind osq-extensions --input " + proj2 +
                      " --output " + (tmp_dir() / "ext.jsonl").string());
  REQUIRE(ext.exit_code == 0);
  CHECK(ext.out.substr(0, 3) == "16 ");
}

TEST_CASE("search finds the order-3 counterexample") {
  auto witness = (tmp_dir() / "witness.json").string();
  RunResult r = run(qwb() + " search eq-bondles-fails --max-order 3 > " + witness);
  REQUIRE(r.exit_code == 0);
  CHECK(run(qwb() + " check --kind osq --input " + witness).exit_code == 0);
  CHECK(run(qwb() + " check --kind eq-bondles --input " + witness).exit_code == 1);

  // stable across runs
  RunResult again = run(qwb() + " search eq-bondles-fails --max-order 3");
  std::ifstream in(witness);
  std::string stored((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(again.out == stored);

  CHECK(run(qwb() + " search eq-bondles-fails --max-order 1").exit_code == 3);
}
