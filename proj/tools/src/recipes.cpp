#include "holesat_app/recipes.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "holesat/holes.hpp"
#include "holesat/search.hpp"

namespace holesat::app {

namespace {

struct Expectation {
  std::string label;
  HoleProblem problem;
  Verdict expected = Verdict::Unsat;
};

HoleProblem disjoint(int n, int k1, int k2, bool interior = false) {
  HoleProblem p;
  p.n = n;
  p.mode = interior ? ProblemMode::TwoInteriorDisjointHoles : ProblemMode::TwoDisjointHoles;
  p.k1 = k1;
  p.k2 = k2;
  return p;
}

HoleProblem single(ProblemMode mode, int n, int k, int threshold = 1) {
  HoleProblem p;
  p.n = n;
  p.mode = mode;
  p.k = k;
  p.threshold = threshold;
  return p;
}

// SAT at h-1 and UNSAT at h.
void add_pair(std::vector<Expectation>& out, const std::string& label, int h,
              const std::function<HoleProblem(int)>& make) {
  out.push_back({label + " n=" + std::to_string(h - 1), make(h - 1), Verdict::Sat});
  out.push_back({label + " n=" + std::to_string(h), make(h), Verdict::Unsat});
}

RecipeStep judge(const Expectation& e, const SolveReport& r, bool proofs, bool have_checker) {
  RecipeStep step;
  step.name = e.label + " expect " + std::string(verdict_name(e.expected));
  step.report = r;
  if (r.status != RunStatus::Ok || r.verdict == Verdict::Unknown) {
    step.infrastructure_failure = true;
    step.detail = std::string(status_name(r.status)) + ": " + r.detail;
    return step;
  }
  if (r.verdict != e.expected) {
    step.detail = "got " + std::string(verdict_name(r.verdict));
    return step;
  }
  if (r.verdict == Verdict::Sat && r.verification != CheckStatus::Passed) {
    step.detail = "model verification " + std::string(check_name(r.verification)) + ": " + r.detail;
    return step;
  }
  if (r.verdict == Verdict::Unsat && proofs && have_checker && r.proof_check != CheckStatus::Passed) {
    step.detail = "certificate " + std::string(check_name(r.proof_check)) + ": " + r.detail;
    return step;
  }
  step.passed = true;
  step.detail = std::string(verdict_name(r.verdict)) + " in " + std::to_string(r.wall_time) + " s";
  if (r.verdict == Verdict::Unsat && r.proof_check == CheckStatus::Passed) step.detail += ", certificate verified";
  if (r.verdict == Verdict::Sat) step.detail += ", model verified";
  return step;
}

std::vector<RecipeStep> solve_all(const std::vector<Expectation>& cases, const RecipeContext& ctx) {
  if (!ctx.config.solver) {
    RecipeStep step;
    step.name = "solver";
    step.infrastructure_failure = true;
    step.detail = "no SAT solver configured (use --solver, --config or HOLESAT_SOLVER)";
    return {step};
  }
  if (!resolve_executable(ctx.config.solver->executable)) {
    RecipeStep step;
    step.name = "solver";
    step.infrastructure_failure = true;
    step.detail = "solver executable '" + ctx.config.solver->executable.string() + "' not found";
    return {step};
  }
  const bool have_checker = ctx.config.checker.has_value();
  std::vector<std::function<SolveReport()>> jobs;
  for (const auto& e : cases) {
    jobs.emplace_back([&ctx, &e] {
      SolveOptions opts;
      opts.workdir = ctx.config.workdir;
      opts.proof = ctx.proofs && e.expected == Verdict::Unsat;
      if (ctx.log) *ctx.log << "solving " << e.label << '\n' << std::flush;
      return solve_problem(e.problem, *ctx.config.solver, ctx.config.checker, opts);
    });
  }
  const auto reports = run_batch(jobs, ctx.config.workers);
  std::vector<RecipeStep> steps;
  for (std::size_t i = 0; i < cases.size(); ++i)
    steps.push_back(judge(cases[i], reports[i], ctx.proofs, have_checker));
  return steps;
}

RecipeStep check(const std::string& name, bool ok, const std::string& detail) {
  RecipeStep s;
  s.name = name;
  s.passed = ok;
  s.detail = detail;
  return s;
}

std::vector<RecipeStep> witness_steps() {
  std::vector<RecipeStep> steps;
  const int five_five[] = {5, 5};
  const int triple[] = {5, 5, 5};

  const PointSet fig2 = witness("fig2-n16");
  const auto holes2 = enumerate_holes(fig2, 5).size();
  steps.push_back(check("fig2-n16 has a 5-hole", holes2 > 0, std::to_string(holes2) + " 5-holes"));
  const bool pair2 = find_disjoint_tuple(fig2, five_five, DisjointMode::Disjoint).has_value();
  steps.push_back(check("fig2-n16 has no two disjoint 5-holes", !pair2, ""));

  const PointSet fig4 = witness("fig4-n21");
  const bool triple4 = find_disjoint_tuple(fig4, triple, DisjointMode::Disjoint).has_value();
  steps.push_back(check("fig4-n21 has no three disjoint 5-holes", !triple4,
                        std::to_string(enumerate_holes(fig4, 5).size()) + " 5-holes"));

  const PointSet fig6 = witness("fig6-n14");
  const bool pair6 = find_disjoint_tuple(fig6, five_five, DisjointMode::InteriorDisjoint).has_value();
  steps.push_back(check("fig6-n14 has no two interior-disjoint 5-holes", !pair6, ""));

  const PointSet dc = generate_double_circle(10);
  const int four_four[] = {4, 4};
  const int two_four_four[] = {2, 4, 4};
  steps.push_back(check("double circle n=10 has two disjoint 4-holes",
                        find_disjoint_tuple(dc, four_four, DisjointMode::Disjoint).has_value(), ""));
  steps.push_back(check("double circle n=10 has no disjoint (2,4,4) holes",
                        !find_disjoint_tuple(dc, two_four_four, DisjointMode::Disjoint).has_value(), ""));
  bool consecutive = false;
  for (const auto& h : enumerate_holes(dc, 4))
    for (int i = 0; i < 5; ++i) {
      const bool a = std::binary_search(h.indices.begin(), h.indices.end(), i);
      const bool b = std::binary_search(h.indices.begin(), h.indices.end(), (i + 1) % 5);
      consecutive |= a && b;
    }
  steps.push_back(check("double circle n=10: no 4-hole has two consecutive extremal points",
                        !consecutive, ""));

  const PointSet ring = generate_two_ring(18);
  bool extremal_triangle = false;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c) {
        const int t[] = {a, b, c};
        extremal_triangle |= is_hole(ring, t);
      }
  steps.push_back(check("two-ring n=18: no 3-hole on extremal points", !extremal_triangle, ""));
  std::size_t worst = 0;
  const auto ring_holes = enumerate_holes(ring, 5);
  for (const auto& h : ring_holes)
    worst = std::max<std::size_t>(worst, static_cast<std::size_t>(std::count_if(
                                             h.indices.begin(), h.indices.end(), [](int v) { return v < 9; })));
  steps.push_back(check("two-ring n=18: every 5-hole has at least 3 inner points", worst <= 2,
                        std::to_string(ring_holes.size()) + " 5-holes, at most " +
                            std::to_string(worst) + " extremal"));
  return steps;
}

}  // namespace

bool RecipeResult::passed() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const RecipeStep& s) { return s.passed; });
}

bool RecipeResult::infrastructure_failure() const {
  return std::any_of(steps.begin(), steps.end(), [](const RecipeStep& s) { return s.infrastructure_failure; });
}

int exit_code(const RecipeResult& r) {
  if (r.infrastructure_failure()) return 2;
  return r.passed() ? 0 : 1;
}

std::vector<RecipeInfo> recipe_list() {
  return {
      {"harborth", "forbid-hole k=5: SAT at n=9, UNSAT at n=10", false},
      {"h55-small-table", "two disjoint holes, all pairs with sizes <= 5 except (5,5)", false},
      {"interior-small-table", "two interior-disjoint holes, sizes <= 5 except (5,5)", false},
      {"witnesses", "embedded witness sets and constructions (no solver)", false},
      {"gon5", "forbid-gon k=5: searched n=8 witness, SAT at n=8, UNSAT at n=9", false},
      {"count-small", "count-holes k=5 threshold 1: UNSAT at n=10", false},
      {"relaxation", "(5,5) verdicts unchanged by relaxed L/R and hints, n=9..12", false},
      {"h55-full", "two disjoint 5-holes: UNSAT at n=17 with certificate", true},
      {"interior-55", "two interior-disjoint 5-holes: UNSAT at n=15", true},
      {"g6", "forbid-gon k=6: UNSAT at n=17", true},
      {"count-16", "count-holes k=5 threshold 11: UNSAT at n=16", true},
  };
}

RecipeResult run_recipe(const std::string& name, const RecipeContext& ctx) {
  RecipeResult result;
  result.name = name;
  std::vector<Expectation> cases;

  if (name == "harborth") {
    add_pair(cases, "forbid 5-hole", 10, [](int n) { return single(ProblemMode::ForbidHole, n, 5); });
  } else if (name == "h55-small-table") {
    const int table[][3] = {{2, 2, 4}, {2, 3, 5}, {2, 4, 6}, {2, 5, 10}, {3, 3, 6},
                            {3, 4, 7}, {3, 5, 10}, {4, 4, 9}, {4, 5, 12}};
    for (const auto& [k1, k2, h] : table)
      add_pair(cases, "h(" + std::to_string(k1) + "," + std::to_string(k2) + ")", h,
               [k1, k2](int n) { return disjoint(n, k1, k2); });
  } else if (name == "interior-small-table") {
    const int table[][3] = {{3, 3, 4}, {3, 4, 5}, {4, 4, 7}, {3, 5, 10}, {4, 5, 10}};
    for (const auto& [k1, k2, h] : table)
      add_pair(cases, "interior h(" + std::to_string(k1) + "," + std::to_string(k2) + ")", h,
               [k1, k2](int n) { return disjoint(n, k1, k2, true); });
  } else if (name == "witnesses") {
    result.steps = witness_steps();
    return result;
  } else if (name == "gon5") {
    SearchObjective obj{ObjectiveKind::Gons, {5}};
    SearchParams params;
    params.seed = 1;
    const auto found = parallel_search(8, obj, params, 16, ctx.config.workers);
    result.steps.push_back(check("search finds 8 points without a 5-gon", found.witness.has_value(),
                                 "seed " + std::to_string(found.seed)));
    cases.push_back({"forbid 5-gon n=8", single(ProblemMode::ForbidGon, 8, 5), Verdict::Sat});
    cases.push_back({"forbid 5-gon n=9", single(ProblemMode::ForbidGon, 9, 5), Verdict::Unsat});
  } else if (name == "count-small") {
    cases.push_back({"count 5-holes n=10 t=1", single(ProblemMode::CountHoles, 10, 5, 1), Verdict::Unsat});
  } else if (name == "relaxation") {
    for (int n = 9; n <= 12; ++n)
      for (int variant = 0; variant < 4; ++variant) {
        HoleProblem p = disjoint(n, 5, 5);
        p.relaxed_lr = variant & 1;
        p.hints = variant & 2;
        std::string label = "(5,5) n=" + std::to_string(n);
        if (p.relaxed_lr) label += " relaxed";
        if (p.hints) label += " hints";
        cases.push_back({label, p, Verdict::Sat});
      }
  } else if (name == "h55-full") {
    HoleProblem p = disjoint(17, 5, 5);
    p.hints = true;
    cases.push_back({"h(5,5) n=17", p, Verdict::Unsat});
  } else if (name == "interior-55") {
    cases.push_back({"interior h(5,5) n=15", disjoint(15, 5, 5, true), Verdict::Unsat});
  } else if (name == "g6") {
    cases.push_back({"forbid 6-gon n=17", single(ProblemMode::ForbidGon, 17, 6), Verdict::Unsat});
  } else if (name == "count-16") {
    cases.push_back({"count 5-holes n=16 t=11", single(ProblemMode::CountHoles, 16, 5, 11), Verdict::Unsat});
  } else {
    throw std::invalid_argument("unknown recipe '" + name + "'");
  }
  for (auto& s : solve_all(cases, ctx)) result.steps.push_back(std::move(s));
  return result;
}

}  // namespace holesat::app
