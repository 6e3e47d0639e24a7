#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("lietoric_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const fs::path o = scratch() / "out.txt", e = scratch() / "err.txt";
  std::string cmd = std::string(LIETORIC_CLI) + " " + args + " > " + o.string() + " 2> " + e.string();
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(o);
  r.err = slurp(e);
  return r;
}

std::string data(const std::string& name) { return std::string(LIETORIC_TEST_DATA) + "/" + name; }

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check on the 8-variable complete intersection") {
  auto r = run("check " + data("ci8_quadrics.ideal"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "status: Toric\n"));
  CHECK(has(r.out, "lie_dim: 5\n"));
  CHECK(has(r.out, "transform:\n"));

  auto j = run("check --json " + data("ci8_quadrics.ideal"));
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["status"] == "Toric");
  CHECK(doc["torus_dim"] == 5);
  CHECK(doc["variety_dim"] == 5);
  CHECK(doc["complexity"] == 0);
  REQUIRE(doc["transform"].size() == 8);
  for (const auto& row : doc["transform"]) {
    REQUIRE(row.size() == 8);
    for (const auto& c : row) CHECK((c == "1" || c == "-1"));
  }
  CHECK(doc["tower"].empty());
}

TEST_CASE("reports are deterministic under a fixed seed") {
  auto a = run("check --seed 7 " + data("colored_path3.ideal"));
  auto b = run("check --seed 7 " + data("colored_path3.ideal"));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run("graph paw claw --screen --saturate --jobs 2 --json");
  auto d = run("graph paw claw --screen --saturate --jobs 1 --json");
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes") {
  CHECK(run("check " + data("eight_term_quadrics.ideal")).code == 0);
  // a hyperplane becomes a coordinate hyperplane
  CHECK(run("check " + write_file("plane.ideal", "ring x y z\ngen x + y + z\n")).code == 0);
  // binomial but not prime
  CHECK(run("check " + data("scalar_quartics.ideal")).code == 1);
  // torus 8 below dimension 11
  auto de = run("check " + data("diamond_edge.ideal"));
  CHECK(de.code == 1);
  CHECK(has(de.out, "complexity: 3\n"));
  CHECK(has(de.out, "unital_excluded: yes\n"));

  auto bad = run("check " + write_file("bad.ideal", "ring x y\ngen x + + y\n"));
  CHECK(bad.code == 3);
  CHECK(has(bad.err, "bad.ideal:2:"));
  auto nonhom = write_file("line.ideal", "ring x\ngen x - 1\n");
  auto nh = run("check " + nonhom);
  CHECK(nh.code == 3);
  CHECK(has(nh.err, "--affine"));
  auto aff = run("check --affine " + nonhom);
  CHECK(aff.code == 0);
  CHECK(has(aff.out, "translation:\n"));
  CHECK(run("check --affine " + data("ci8_quadrics_affine.ideal")).code == 1);
  CHECK(run("check").code == 3);
  CHECK(run("frobnicate").code == 3);
  CHECK(run("check /nonexistent.ideal").code == 3);
  CHECK(run("--help").code == 0);
}

TEST_CASE("lie and torus") {
  auto l = run("lie " + data("scalar_quartics.ideal"));
  CHECK(l.code == 0);
  CHECK(has(l.out, "lie_dim: 1\n"));
  CHECK(has(l.out, "only scalar matrices"));
  auto lj = nlohmann::json::parse(run("lie --json " + data("scalar_quartics.ideal")).out);
  CHECK(lj["scalars_only"] == true);

  auto t = nlohmann::json::parse(run("torus --json " + data("ci8_quadrics.ideal")).out);
  CHECK(t["lie_dim"] == 5);
  CHECK(t["toral_dim"] == 5);
  CHECK(t["nilpotent_dim"] == 0);

  auto zero = write_file("zero.ideal", "ring a b c\ngen 0\n");
  CHECK(has(run("lie " + zero).out, "lie_dim: 9\n"));
}

TEST_CASE("graph subcommand") {
  auto ci = run("graph 3:12,23 --ci");
  CHECK(ci.code == 0);
  CHECK(has(ci.out, "ring s11 s12 s13 s22 s23 s33\n"));
  // one generator of degree 2
  CHECK(has(ci.out, "s13*s22"));

  // round trip into check
  auto out = (scratch() / "path3.ideal").string();
  CHECK(run("graph 3:12,23 --ci -o " + out).code == 0);
  CHECK(run("check " + out).code == 0);

  auto gfile = write_file("paw.graph", "4\n1 2\n1 3\n1 4\n2 3\n");
  auto row = run("graph " + gfile + " --screen --saturate --json");
  REQUIRE(row.code == 0);
  auto doc = nlohmann::json::parse(row.out);
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["model_dim"] == 8);
  CHECK(doc[0]["lie_dim"] == 52);
  CHECK(doc[0]["torus_dim"] == 8);
  CHECK(doc[0]["toric"] == true);

  auto table = run("graph table --screen --saturate");
  CHECK(table.code == 0);
  CHECK(has(table.out, "diamond  12,13,14,23,34       9          9       30          6     no\n"));

  auto empty = run("graph 3: --ci");
  CHECK(empty.code == 0);
  CHECK(has(empty.err, "has no edges"));
  CHECK(run("graph paw").code == 3);
  CHECK(run("graph paw --ci --screen").code == 3);
  CHECK(run("graph 4:15 --ci").code == 3);
}
