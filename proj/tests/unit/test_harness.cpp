#include <sys/stat.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "holesat/dimacs.hpp"
#include "holesat/harness.hpp"
#include "support.hpp"

using namespace holesat;
namespace fs = std::filesystem;
using namespace std::chrono_literals;

namespace {

fs::path script(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream(p) << "#!/bin/sh\n" << body << '\n';
  ::chmod(p.c_str(), 0755);
  return p;
}

SolverConfig fake(const fs::path& exe, std::chrono::milliseconds timeout = 10s) {
  SolverConfig c;
  c.name = exe.filename().string();
  c.executable = exe;
  c.args = {"{input}"};
  c.timeout = timeout;
  return c;
}

fs::path tiny_cnf(const fs::path& dir) {
  const fs::path p = dir / "tiny.cnf";
  std::ofstream(p) << "p cnf 2 2\n1 2 0\n-1 0\n";
  return p;
}

HoleProblem small_forbid(int n) {
  HoleProblem p;
  p.n = n;
  p.mode = ProblemMode::ForbidHole;
  p.k = 5;
  return p;
}

}  // namespace

TEST_CASE("parse_solver_output") {
  auto sat = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n");
  REQUIRE(sat);
  CHECK(sat->verdict == Verdict::Sat);
  CHECK(sat->model == std::vector<int>{1, -2, 3});
  auto unsat = parse_solver_output("s UNSATISFIABLE: x.cnf\n");
  REQUIRE(unsat);
  CHECK(unsat->verdict == Verdict::Unsat);
  CHECK(parse_solver_output("s UNKNOWN\n")->verdict == Verdict::Unknown);
  CHECK_FALSE(parse_solver_output("no answer\n"));
  CHECK_FALSE(parse_solver_output("s SATISFIABLE\n"));
  CHECK_FALSE(parse_solver_output("s MAYBE\n"));
  CHECK_FALSE(parse_solver_output("s SATISFIABLE\nv 1 x 0\n"));
  CHECK(parse_solver_output("s SATISFIABLE\r\nv 0\r\n").has_value());
}

TEST_CASE("presets and dialects") {
  for (const auto& name : solver_preset_names()) CHECK(solver_preset(name).name == name);
  CHECK_THROWS(solver_preset("nosuchsolver"));
  CHECK(solver_preset("picosat").dialect == Dialect::PicosatRup);
  CHECK(parse_dialect("picosat-rup") == Dialect::PicosatRup);
  CHECK(checker_preset("/x/rate").args.front() == "-d");
  CHECK(checker_preset("drat-trim").args == std::vector<std::string>{"{cnf}", "{proof}"});
}

TEST_CASE("solver failure modes are classified") {
  const fs::path dir = testing::scratch_dir("harness");
  const fs::path cnf = tiny_cnf(dir);

  SUBCASE("sat") {
    const auto r = run_solver(cnf, fake(script(dir, "ok", "echo 's SATISFIABLE'; echo 'v -1 2 0'; exit 10")));
    CHECK(r.status == RunStatus::Ok);
    CHECK(r.verdict == Verdict::Sat);
    CHECK(r.model == std::vector<int>{-1, 2});
  }
  SUBCASE("crash by signal") {
    const auto r = run_solver(cnf, fake(script(dir, "segv", "kill -SEGV $$")));
    CHECK(r.status == RunStatus::Crash);
  }
  SUBCASE("nonzero exit without answer") {
    const auto r = run_solver(cnf, fake(script(dir, "exit3", "echo oops; exit 3")));
    CHECK(r.status == RunStatus::Crash);
    CHECK(r.output_tail.find("oops") != std::string::npos);
  }
  SUBCASE("garbage output") {
    const auto r = run_solver(cnf, fake(script(dir, "garbage", "echo 's PERHAPS'; exit 0")));
    CHECK(r.status == RunStatus::Unparsable);
  }
  SUBCASE("sat without model") {
    const auto r = run_solver(cnf, fake(script(dir, "nomodel", "echo 's SATISFIABLE'; exit 10")));
    CHECK(r.status == RunStatus::Unparsable);
  }
  SUBCASE("verdict contradicts exit code") {
    const auto r = run_solver(cnf, fake(script(dir, "liar", "echo 's UNSATISFIABLE'; exit 10")));
    CHECK(r.status == RunStatus::Unparsable);
  }
  SUBCASE("timeout kills the process group") {
    const auto r = run_solver(cnf, fake(script(dir, "sleepy", "sleep 30 & wait"), 300ms));
    CHECK(r.status == RunStatus::Timeout);
    CHECK(r.wall_time < 10);
  }
  SUBCASE("not found") {
    const auto r = run_solver(cnf, fake(dir / "missing-solver"));
    CHECK(r.status == RunStatus::NotFound);
  }
  SUBCASE("wrong model is caught by verification") {
    const auto s = fake(script(dir, "wrong", "echo 's SATISFIABLE'; echo 'v 0'; exit 10"));
    SolveOptions opts;
    opts.workdir = dir;
    const auto r = solve_problem(small_forbid(8), s, std::nullopt, opts);
    CHECK(r.status == RunStatus::Ok);
    CHECK(r.verification == CheckStatus::Failed);
  }
  fs::remove_all(dir);
}

TEST_CASE("normalize_proof strips a leading percent line") {
  const fs::path dir = testing::scratch_dir("normalize");
  std::ofstream(dir / "p.drat") << "%RUPD32 3 2\n1 0\n0\n";
  const fs::path out = normalize_proof(dir / "p.drat");
  CHECK(out != dir / "p.drat");
  CHECK(out.extension() == ".drat");
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "1 0\n0\n");
  std::ofstream(dir / "q.drat") << "1 0\n";
  CHECK(normalize_proof(dir / "q.drat") == dir / "q.drat");
  fs::remove_all(dir);
}

TEST_CASE("report round trip and summary") {
  SolveReport r;
  r.instance_id = "forbid-hole-n10-k5";
  r.verdict = Verdict::Sat;
  r.model = {1, -2, 3};
  r.certificate_path = "/tmp/x.drat";
  r.wall_time = 1.5;
  r.solver = "varisat";
  r.verification = CheckStatus::Passed;
  r.detail = "fine";
  std::stringstream ss;
  write_report(ss, r);
  const SolveReport back = read_report(ss);
  CHECK(back.instance_id == r.instance_id);
  CHECK(back.verdict == r.verdict);
  CHECK(back.model == r.model);
  CHECK(back.certificate_path == r.certificate_path);
  CHECK(back.solver == r.solver);
  CHECK(back.verification == r.verification);
  CHECK(back.proof_check == CheckStatus::Skipped);
  CHECK(back.wall_time == doctest::Approx(1.5));
  const fs::path dir = testing::scratch_dir("summary");
  write_summary_json(dir / "s.json", {r, back});
  CHECK(fs::file_size(dir / "s.json") > 0);
  fs::remove_all(dir);
}

TEST_CASE("configuration file and environment") {
  const fs::path dir = testing::scratch_dir("config");
  std::ofstream(dir / "c.json") << R"({"solver": {"preset": "splr", "path": "/opt/splr"},
    "checker": {"path": "/opt/rate"}, "timeout_seconds": 5, "workers": 3, "workdir": "w"})";
  HarnessConfig c = load_harness_config(dir / "c.json");
  REQUIRE(c.solver);
  CHECK(c.solver->name == "splr");
  CHECK(c.solver->executable == "/opt/splr");
  CHECK(c.solver->timeout == 5s);
  REQUIRE(c.checker);
  CHECK(c.checker->args.front() == "-d");
  CHECK(c.workers == 3);
  ::setenv("HOLESAT_WORKERS", "7", 1);
  ::setenv("HOLESAT_SOLVER", "/bin/mysolver", 1);
  apply_environment(c);
  ::unsetenv("HOLESAT_WORKERS");
  ::unsetenv("HOLESAT_SOLVER");
  CHECK(c.workers == 7);
  CHECK(c.solver->executable == "/bin/mysolver");
  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK_THROWS(load_harness_config(dir / "bad.json"));
  fs::remove_all(dir);
}

TEST_CASE("run_batch keeps job order") {
  std::vector<std::function<SolveReport()>> jobs;
  for (int i = 0; i < 12; ++i)
    jobs.emplace_back([i] {
      if (i == 5) throw std::runtime_error("boom");
      SolveReport r;
      r.instance_id = std::to_string(i);
      return r;
    });
  const auto out = run_batch(jobs, 4);
  REQUIRE(out.size() == 12);
  for (int i = 0; i < 12; ++i)
    if (i != 5) CHECK(out[static_cast<std::size_t>(i)].instance_id == std::to_string(i));
  CHECK(out[5].status == RunStatus::Crash);
}

TEST_CASE("default instance ids") {
  HoleProblem p;
  p.n = 17;
  p.orientation = OrientationEncoding::PaperFaithful;
  p.hints = true;
  CHECK(default_instance_id(p) == "two-disjoint-holes-n17-k5-5-faithful-hints");
  CHECK(default_instance_id(small_forbid(10)) == "forbid-hole-n10-k5");
}

TEST_CASE("real solvers agree and certificates check") {
  const std::string varisat = testing::configured(HOLESAT_TEST_VARISAT);
  const std::string splr = testing::configured(HOLESAT_TEST_SPLR);
  const std::string rate = testing::configured(HOLESAT_TEST_RATE);
  if (varisat.empty() || rate.empty()) {
    MESSAGE("varisat or rate not found; skipped");
    return;
  }
  const fs::path dir = testing::scratch_dir("real");
  SolveOptions opts;
  opts.workdir = dir;
  opts.proof = true;
  const auto checker = checker_preset(rate);
  std::vector<SolverConfig> solvers{solver_preset("varisat", varisat)};
  if (!splr.empty()) solvers.push_back(solver_preset("splr", splr));
  for (const auto& s : solvers) {
    const auto sat = solve_problem(small_forbid(9), s, checker, opts);
    CHECK(sat.verdict == Verdict::Sat);
    CHECK(sat.verification == CheckStatus::Passed);
    const auto unsat = solve_problem(small_forbid(10), s, checker, opts);
    CHECK(unsat.verdict == Verdict::Unsat);
    CHECK(unsat.proof_check == CheckStatus::Passed);
  }

  // A truncated certificate must not verify.
  const auto r = solve_problem(small_forbid(10), solvers.front(), std::nullopt, opts);
  REQUIRE(r.certificate_path);
  const auto size = fs::file_size(*r.certificate_path);
  REQUIRE(size > 16);
  fs::resize_file(*r.certificate_path, size / 3);
  const fs::path cnf = dir / (default_instance_id(small_forbid(10)) + ".cnf");
  CHECK(run_proof_check(cnf, *r.certificate_path, checker).status == CheckStatus::Failed);
  fs::remove_all(dir);
}
