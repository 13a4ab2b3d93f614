#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hitchinlab/io.hpp"
#include "hitchinlab/pants_graph.hpp"

#ifndef HITCHIN_CLI_PATH
#define HITCHIN_CLI_PATH "hitchin-lab"
#endif

namespace fs = std::filesystem;
using namespace hitchinlab;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("hitchin_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args) {
  const std::string command = std::string(HITCHIN_CLI_PATH) + " " + args;
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) { return read_text_file(path); }

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("cli labelings and norms") {
  TempDir dir;
  write(dir.file("theta.json"), graph_to_json_text(theta_graph()));

  const std::string out = dir.file("labelings.csv");
  REQUIRE(run_cli("labelings --graph " + dir.file("theta.json") +
                  " --level 1 --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.rfind("# hitchin-lab v", 0) == 0);
  CHECK(count_lines(text) == 6);  // version + header + 4 rows

  const std::string norms_out = dir.file("norms.csv");
  REQUIRE(run_cli("norms --graph " + dir.file("theta.json") + " --level 1 --out " +
                  norms_out) == 0);
  CHECK(count_lines(slurp(norms_out)) == 6);
}

TEST_CASE("cli verlinde table") {
  TempDir dir;
  const std::string out = dir.file("verlinde.csv");
  REQUIRE(run_cli("verlinde --genus-min 2 --genus-max 3 --level-min 1 "
                  "--level-max 4 --counts --out " +
                  out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("2,1,4,4") != std::string::npos);
  CHECK(text.find("2,2,10,10") != std::string::npos);
  CHECK(text.find("3,1,8,8") != std::string::npos);
}

TEST_CASE("cli determinism") {
  TempDir dir;
  const std::string a = dir.file("a.csv"), b = dir.file("b.csv");
  REQUIRE(run_cli("charvar-sample --seed 7 --draws 2000 --out " + a) == 0);
  REQUIRE(run_cli("charvar-sample --seed 7 --draws 2000 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("four_holed_sphere") != std::string::npos);
}

TEST_CASE("cli kz transport") {
  TempDir dir;
  write(dir.file("path.json"), "[[0.5, 0.5], [0.3, 0.8], [0.5, 0.5]]");
  const std::string out = dir.file("transport.json");
  REQUIRE(run_cli("kz-transport --labels 1,1,1,1 --path " + dir.file("path.json") +
                  " --steps 2000 --out " + out) == 0);
  const Eigen::MatrixXcd m = complex_matrix_from_json_text(slurp(out));
  CHECK(m.rows() == 2);
  CHECK((m - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-6);
}

TEST_CASE("cli siegel and dyson and toeplitz") {
  TempDir dir;
  REQUIRE(run_cli("siegel-check --seed 3 --count 4 --dim 2 --out " +
                  dir.file("siegel.csv")) == 0);
  CHECK(count_lines(slurp(dir.file("siegel.csv"))) == 6);

  write(dir.file("family.json"),
        R"({"P_infinity": [[[1,0],[0,0]],[[0,0],[2,0]]],
            "delta": {"type": "power", "C": [[[0,0],[0.4,0]],[[0.4,0],[0,0]]],
                      "alpha": -2.0},
            "t_min": 1.0})");
  REQUIRE(run_cli("dyson --family " + dir.file("family.json") +
                  " --t0 1 --t1 3 --rows 4 --out " + dir.file("dyson.csv")) == 0);
  CHECK(count_lines(slurp(dir.file("dyson.csv"))) == 6);

  REQUIRE(run_cli("toeplitz --f x3 --g x3 --levels 2,4,8 --out " +
                  dir.file("toeplitz.csv")) == 0);
  CHECK(slurp(dir.file("toeplitz.csv")).find("# slope") != std::string::npos);

  REQUIRE(run_cli("theta-heat --level 2 --grid 2 --out " + dir.file("heat.csv")) ==
          0);
  CHECK(count_lines(slurp(dir.file("heat.csv"))) == 6);

  write(dir.file("degen.json"),
        R"({"Z_infinity": [[[1,0.4],[0.2,-0.1]],[[0.2,-0.1],[-0.8,0.9]]],
            "remainder": {"type": "power",
                          "C": [[[0.3,0.1],[-0.2,0.25]],[[-0.2,0.25],[0.15,-0.3]]],
                          "exponent": -3.0},
            "t_min": 10.0, "t_grid": [10.0, 100.0, 1000.0, 10000.0]})");
  REQUIRE(run_cli("siegel-check --degeneration " + dir.file("degen.json") +
                  " --out " + dir.file("degen.csv")) == 0);
  CHECK(count_lines(slurp(dir.file("degen.csv"))) == 6);
}

TEST_CASE("cli membership queries and json functions") {
  TempDir dir;
  write(dir.file("theta.json"), graph_to_json_text(theta_graph()));

  const std::string out = dir.file("member.csv");
  REQUIRE(run_cli("charvar-sample --fiber 0,0,0,-2 --graph " +
                  dir.file("theta.json") + " --coords 0.25,0.25,0.25 --out " +
                  out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("torus_fiber,1") != std::string::npos);
  CHECK(text.find("moment_domain,1") != std::string::npos);

  // sampling without a seed is rejected
  CHECK(run_cli("charvar-sample --draws 100 --out " + dir.file("x.csv")) == 2);
  CHECK(run_cli("siegel-check --count 2 --dim 2 --out " + dir.file("x.csv")) == 2);

  write(dir.file("height.json"),
        R"({"terms":[{"re":1,"s":0,"t":0,"q":1},{"re":-1,"s":1,"t":1,"q":1}]})");
  REQUIRE(run_cli("toeplitz --f-json " + dir.file("height.json") +
                  " --g x3 --levels 2,4 --out " + dir.file("tj.csv")) == 0);
  CHECK(slurp(dir.file("tj.csv")).find("# slope") != std::string::npos);
}

TEST_CASE("cli error codes") {
  TempDir dir;
  write(dir.file("bad.json"), "{\"vertices\": [0], \"edges\": []}");
  CHECK(run_cli("labelings --graph " + dir.file("bad.json") + " --level 1 --out " +
                dir.file("x.csv")) == 2);
  CHECK(run_cli("labelings --graph " + dir.file("missing.json") +
                " --level 1 --out " + dir.file("x.csv")) == 2);
  // unknown keys in input files are rejected
  write(dir.file("extra.json"),
        "{\"vertices\": [0, 1], \"edges\": [], \"bogus\": 1}");
  CHECK(run_cli("labelings --graph " + dir.file("extra.json") +
                " --level 1 --out " + dir.file("x.csv")) == 2);
}
