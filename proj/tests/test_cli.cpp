#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "gsft/json_io.hpp"

using namespace gsft;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* p = std::getenv("GSFT_CLI");
  REQUIRE_MESSAGE(p != nullptr, "GSFT_CLI must point at the built binary");
  return p;
}

std::string data_dir() {
  const char* p = std::getenv("GSFT_DATA_DIR");
  REQUIRE_MESSAGE(p != nullptr, "GSFT_DATA_DIR must point at the data directory");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

Json parse_output(const RunResult& r) { return Json::parse(r.output); }

}  // namespace

TEST_CASE("augment reproduces the worked example") {
  auto r = run("augment " + data_dir() + "/example4_1.json");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  CHECK(j.at("entries") == Json::parse("[[1,1],[1,0]]"));
}

TEST_CASE("extend emits the covering action") {
  auto r = run("extend " + data_dir() + "/example4_1.json");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  CHECK(j.at("adjacency").at("entries") ==
        Json::parse("[[0,1,1,0],[1,0,0,1],[0,1,0,0],[1,0,0,0]]"));
  CHECK(j.at("vertex_action").at("1") == Json::parse("[1,0,3,2]"));
}

TEST_CASE("inert encodes the verdict in the exit code") {
  auto r = run("inert " + data_dir() + "/example4_1.json");
  CHECK(r.exit_code == 1);
  Json j = parse_output(r);
  CHECK(j.at("inert") == false);
  CHECK(j.at("violation").at("g") == 1);

  r = run("inert " + data_dir() + "/uniform_c2.json");
  CHECK(r.exit_code == 0);
  CHECK(parse_output(r).at("exponent") == 1);

  // Graph-action input goes through the quotient.
  r = run("inert " + data_dir() + "/example1_2_y.json");
  CHECK(r.exit_code == 1);
  r = run("inert " + data_dir() + "/example1_2_x.json");
  CHECK(r.exit_code == 0);
}

TEST_CASE("zeta-equal matches inertness on the worked example") {
  auto r = run("zeta-equal " + data_dir() + "/example4_1.json");
  CHECK(r.exit_code == 1);
  Json j = parse_output(r);
  CHECK(j.at("equal") == false);
  CHECK(j.at("augmentation_reciprocal_charpoly") == Json::parse("[1,-1,-1]"));
}

TEST_CASE("quotient of the reflected graph") {
  auto r = run("quotient " + data_dir() + "/example1_2_y.json");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  CHECK(j.at("orbit_representatives") == Json::parse(R"(["00","01"])"));
  CHECK(j.at("matrix").at("matrix").at("entries").at(0).at(1) == Json::parse(R"({"0":1})"));
}

TEST_CASE("census emits json and csv") {
  auto r = run("census --max 4 " + data_dir() + "/full2.json");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  CHECK(j.at("rows").at(3).at("per_count") == 16);

  r = run("census --max 4 --format csv --brute " + data_dir() + "/full2.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("4,16,12,3") != std::string::npos);
}

TEST_CASE("kimroush passes the full shift and fails the golden mean") {
  auto r = run("kimroush --p 2 --max 16 " + data_dir() + "/full2.json");
  CHECK(r.exit_code == 0);
  CHECK(parse_output(r).at("pass") == true);

  r = run("kimroush --p 2 --max 8 " + data_dir() + "/golden_mean.json");
  CHECK(r.exit_code == 1);
  Json j = parse_output(r);
  CHECK(j.at("first_failure").at("n") == 2);

  r = run("kimroush --p 2 --max 8 --mode points " + data_dir() + "/golden_mean.json");
  CHECK(r.exit_code == 0);
}

TEST_CASE("verify-se on the stored witness") {
  auto r = run("verify-se --a " + data_dir() + "/full2.json --b " + data_dir() +
               "/ones2.json --witness " + data_dir() + "/witness_full2_ones2.json");
  CHECK(r.exit_code == 0);
  CHECK(parse_output(r).at("valid") == true);
}

TEST_CASE("se-aug-ext and lift-se produce verified witnesses") {
  auto r = run("se-aug-ext " + data_dir() + "/uniform_c2.json");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  CHECK(j.at("witness").at("lag") == 1);
  CHECK(j.at("augmentation").at("entries") == Json::parse("[[2]]"));

  r = run("lift-se --b " + data_dir() + "/uniform_c2.json --c " + data_dir() +
          "/eg_rows.json --witness " + data_dir() + "/witness_uniform_vs_eg.json");
  CHECK(r.exit_code == 0);
  Json lifted = parse_output(r);
  CHECK(lifted.at("domain") == "Z+[G]");
  CHECK(lifted.at("lag").get<int>() >= 2);
}

TEST_CASE("weight and posmove") {
  auto r = run("weight " + data_dir() + "/example4_1.json");
  CHECK(r.exit_code == 0);
  CHECK(parse_output(r).at("subgroup") == Json::parse("[0,1]"));

  r = run("posmove --side left --i 1 --j 2 --g 1 " + data_dir() + "/eg_rows.json");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  // Row 1 of [[e,g],[e,g]] becomes row1 + g*row2 minus one g at (1,2):
  // [[e+g, e], [e, g]].
  CHECK(j.at("matrix").at("entries").at(0).at(0) == Json::parse(R"({"0":1,"1":1})"));
  CHECK(j.at("matrix").at("entries").at(0).at(1) == Json::parse(R"({"0":1})"));

  r = run("posmove --side left --i 1 --j 2 --g 1 " + data_dir() + "/example4_1.json");
  CHECK(r.exit_code == 2);  // coefficient of g at (1,2) is zero there
}

TEST_CASE("descend-se round-trips through the CLI") {
  // A = B = [e] over Z/2Z with witness R = S = [g], lag 2, H = {e}.
  std::string dir = data_dir();
  std::string a_file = "/tmp/gsft_cli_descend_a.json";
  std::string w_file = "/tmp/gsft_cli_descend_w.json";
  {
    std::ofstream a(a_file);
    a << R"({"group":{"type":"cyclic","order":2},
             "matrix":{"rows":[1],"cols":[1],"entries":[[{"0":1}]]}})";
    std::ofstream w(w_file);
    w << R"({"domain":"Z+[G]","lag":2,
             "R":{"rows":[1],"cols":[1],"entries":[[{"1":1}]]},
             "S":{"rows":[1],"cols":[1],"entries":[[{"1":1}]]}})";
  }
  auto r = run("descend-se --a " + a_file + " --b " + a_file + " --witness " + w_file +
               " --subgroup 0");
  CHECK(r.exit_code == 0);
  Json j = parse_output(r);
  CHECK(j.at("g") == 1);
  CHECK(j.at("witness").at("lag") == 2);
}

TEST_CASE("selftest runs green, quick subset included") {
  CHECK(run("selftest --quick").exit_code == 0);
  CHECK(run("selftest --quick --data " + data_dir()).exit_code == 0);
}

TEST_CASE("selftest names a corrupted fixture") {
  std::string dir = "/tmp/gsft_cli_bad_data";
  REQUIRE(std::system(("rm -rf " + dir + " && cp -r " + data_dir() + " " + dir).c_str()) == 0);
  {
    std::ofstream bad(dir + "/full2.json");
    bad << R"({"rows":[1],"cols":[1],"entries":[[3]]})";  // wrong shift
  }
  auto r = run("selftest --quick --data " + dir);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
  CHECK(r.output.find("existence condition") != std::string::npos);
}

TEST_CASE("errors are single-line JSON with exit code 2") {
  auto r = run("inert /nonexistent/path.json");
  CHECK(r.exit_code == 2);
  Json j = parse_output(r);
  CHECK(j.contains("error"));
  CHECK(r.output.find('\n') == r.output.size() - 1);

  r = run("frobnicate");
  CHECK(r.exit_code == 2);
  CHECK(parse_output(r).contains("error"));

  // Schema violation.
  std::string bad = "/tmp/gsft_cli_bad_matrix.json";
  {
    std::ofstream out(bad);
    out << R"({"group":{"type":"cyclic","order":2},"matrix":{"entries":[[{"9":1}]]}})";
  }
  r = run("inert " + bad);
  CHECK(r.exit_code == 2);
  CHECK(parse_output(r).at("error").get<std::string>().find("out of range") != std::string::npos);
}

TEST_CASE("stdin input") {
  std::string cmd = "cat " + data_dir() + "/example4_1.json | " + cli_path() + " augment -";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(Json::parse(output).at("entries") == Json::parse("[[1,1],[1,0]]"));
}

TEST_CASE("emitted JSON round-trips through the CLI parsers") {
  auto r = run("quotient " + data_dir() + "/example1_2_y.json");
  REQUIRE(r.exit_code == 0);
  Json j = parse_output(r);
  // The emitted matrix file re-parses to the same value it prints.
  GroupRingMatrix m = group_ring_matrix_file_from_json(j.at("matrix"));
  CHECK(group_ring_matrix_file_to_json(m) == j.at("matrix"));
}
