#include <fstream>
#include <sstream>

#include "doctest.h"
#include "holesat/dimacs.hpp"
#include "support.hpp"

using namespace holesat;

namespace {

ParsedCnf parse(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

}  // namespace

TEST_CASE("DIMACS round trip keeps groups, clauses and the problem") {
  HoleProblem p;
  p.n = 10;
  p.k1 = 4;
  p.k2 = 5;
  p.orientation = OrientationEncoding::PaperFaithful;
  const auto e = build_instance(p);
  std::stringstream ss;
  write_dimacs(ss, e.instance, &e.registry);
  const ParsedCnf back = read_dimacs(ss);
  REQUIRE(back.problem.has_value());
  CHECK(*back.problem == p);
  CHECK(back.instance.num_vars == e.instance.num_vars);
  REQUIRE(back.instance.groups.size() == e.instance.groups.size());
  for (std::size_t g = 0; g < e.instance.groups.size(); ++g) {
    const auto& a = e.instance.groups[g];
    const auto& b = back.instance.groups[g];
    REQUIRE(a.name() == b.name());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto x = a.clause(i);
      const auto y = b.clause(i);
      REQUIRE(std::equal(x.begin(), x.end(), y.begin(), y.end()));
    }
  }
}

TEST_CASE("save_dimacs writes the registry sidecar") {
  const auto dir = testing::scratch_dir("dimacs");
  HoleProblem p;
  p.n = 8;
  const auto e = build_instance(p);
  save_dimacs(dir / "x.cnf", e.instance, &e.registry);
  CHECK(std::filesystem::exists(registry_sidecar(dir / "x.cnf")));
  CHECK(VarRegistry::load(registry_sidecar(dir / "x.cnf")) == e.registry);
  CHECK(load_dimacs(dir / "x.cnf").instance.clause_count() == e.instance.clause_count());
  std::filesystem::remove_all(dir);
}

TEST_CASE("plain DIMACS lands in one group") {
  const auto cnf = parse("c hello\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n");
  CHECK_FALSE(cnf.problem.has_value());
  CHECK(cnf.instance.num_vars == 3);
  REQUIRE(cnf.instance.groups.size() == 1);
  CHECK(cnf.instance.groups[0].name() == "clauses");
  CHECK(cnf.instance.groups[0].size() == 2);
  CHECK(cnf.instance.groups[0].clause(1).size() == 3);
}

TEST_CASE("malformed DIMACS is rejected") {
  CHECK_THROWS(parse("1 2 0\n"));
  CHECK_THROWS(parse("p cnf x 1\n1 0\n"));
  CHECK_THROWS(parse("p cnf 2 1\n3 0\n"));
  CHECK_THROWS(parse("p cnf 2 2\n1 0\n"));
  CHECK_THROWS(parse("p cnf 2 1\n1 2\n"));
  CHECK_THROWS(parse("p cnf 2 1\n1 a 0\n"));
  CHECK_THROWS(load_dimacs("/nonexistent/holesat.cnf"));
}
