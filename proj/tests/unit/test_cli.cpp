#include <fstream>
#include <iostream>
#include <sstream>

#include "doctest.h"
#include "holesat/dimacs.hpp"
#include "holesat/holes.hpp"
#include "holesat/point_io.hpp"
#include "holesat_app/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Captured {
  int code;
  std::string out;
};

Captured run(std::vector<std::string> args) {
  args.insert(args.begin(), "holesat");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  const int code = holesat::app::run_cli(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("encode reports the n=17 instance") {
  const fs::path dir = holesat::testing::scratch_dir("cli");
  const auto cnf = (dir / "h.cnf").string();
  const auto r = run({"encode", "--n", "17", "--sizes", "5,5", "--paper-faithful", "--hints", "-o", cnf});
  CHECK(r.code == 0);
  CHECK(r.out.find("variables: 23392") != std::string::npos);
  CHECK(holesat::load_dimacs(cnf).instance.num_vars == 23392);
  CHECK(fs::exists(cnf + ".vars"));
  fs::remove_all(dir);
}

TEST_CASE("verify-witness exit codes") {
  CHECK(run({"verify-witness", "--witness", "fig2-n16", "--no-disjoint-holes", "5,5"}).code == 0);
  const auto fail = run({"verify-witness", "--witness", "fig2-n16", "--no-holes", "5"});
  CHECK(fail.code == 1);
  CHECK(fail.out.rfind("FAIL", 0) == 0);
  CHECK(run({"verify-witness", "--witness", "fig2-n16"}).code == 2);
  CHECK(run({"verify-witness", "--witness", "nope", "--no-holes", "5"}).code == 2);
  CHECK(run({"encode", "--bogus"}).code == 2);
}

TEST_CASE("count-holes and construct") {
  const fs::path dir = holesat::testing::scratch_dir("cli2");
  const auto file = (dir / "dc.txt").string();
  CHECK(run({"construct", "double-circle", "--n", "12", "-o", file}).code == 0);
  const auto s = holesat::load_point_set(file);
  CHECK(s.size() == 12);
  const auto r = run({"count-holes", file, "--k", "3"});
  CHECK(r.code == 0);
  CHECK(std::stoul(r.out) == holesat::enumerate_holes(s, 3).size());
  fs::remove_all(dir);
}

TEST_CASE("recipe listing") {
  const auto r = run({"recipe", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("harborth") != std::string::npos);
  CHECK(run({"recipe", "no-such-recipe"}).code == 2);
}
