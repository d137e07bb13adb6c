#include "holesat_app/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "holesat/dimacs.hpp"
#include "holesat/harness.hpp"
#include "holesat/holes.hpp"
#include "holesat/point_io.hpp"
#include "holesat/search.hpp"
#include "holesat_app/recipes.hpp"

namespace holesat::app {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInfra = 2;

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad size list '" + text + "'");
    sizes.push_back(v);
  }
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  return sizes;
}

struct ProblemArgs {
  int n = 0;
  std::string mode = "two-disjoint-holes";
  std::string sizes;
  int threshold = 1;
  bool faithful = false;
  bool hints = false;
  bool relaxed = false;
  bool simplified = false;

  void attach(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--n", n, "number of points");
    if (required) opt->required();
    cmd->add_option("--mode", mode,
                    "two-disjoint-holes | two-interior-disjoint-holes | forbid-hole | forbid-gon | "
                    "count-holes");
    cmd->add_option("--sizes,--k", sizes, "hole sizes, e.g. 5,5 (disjoint modes) or 5");
    cmd->add_option("--threshold", threshold, "count mode: UNSAT means at least this many holes");
    cmd->add_flag("--paper-faithful", faithful, "six orientation variables per triple");
    cmd->add_flag("--hints", hints, "add the implied (5,5) hint clauses");
    cmd->add_flag("--relaxed-lr", relaxed, "L/R witnesses may contain the other point");
    cmd->add_flag("--simplified", simplified, "k-holes as sets of 3-holes only");
  }

  [[nodiscard]] HoleProblem problem() const {
    HoleProblem p;
    p.n = n;
    p.mode = parse_mode(mode);
    const auto k = parse_sizes(sizes.empty() ? (p.disjoint_mode() ? "5,5" : "5") : sizes);
    if (p.disjoint_mode()) {
      if (k.size() != 2) throw std::invalid_argument("disjoint modes take two sizes");
      p.k1 = k[0];
      p.k2 = k[1];
    } else {
      if (k.size() != 1) throw std::invalid_argument("this mode takes one size");
      p.k = k[0];
    }
    p.threshold = threshold;
    p.orientation = faithful ? OrientationEncoding::PaperFaithful : OrientationEncoding::Compact;
    p.hints = hints;
    p.relaxed_lr = relaxed;
    p.simplified_holes = simplified;
    p.validate();
    return p;
  }
};

struct HarnessArgs {
  std::string config;
  std::string solver;
  std::string preset;
  std::string checker;
  double timeout = 0;
  int workers = 0;
  std::string workdir;

  void attach(CLI::App& app) {
    app.add_option("--config", config, "harness configuration (JSON)");
    app.add_option("--solver", solver, "SAT solver executable");
    app.add_option("--solver-preset", preset, "varisat | splr | glucose | picosat");
    app.add_option("--checker", checker, "DRAT/RUP proof checker executable");
    app.add_option("--timeout", timeout, "per-run wall-clock limit in seconds");
    app.add_option("--workers", workers, "concurrent solver runs");
    app.add_option("--workdir", workdir, "directory for instances and certificates");
  }

  [[nodiscard]] HarnessConfig resolve() const {
    HarnessConfig c = config.empty() ? HarnessConfig{} : load_harness_config(config);
    apply_environment(c);
    if (!solver.empty() || !preset.empty()) {
      const std::string name = preset.empty() ? std::filesystem::path(solver).filename().string() : preset;
      const auto t = c.solver ? c.solver->timeout : std::chrono::minutes(10);
      c.solver = solver_preset(name, solver);
      c.solver->timeout = t;
    }
    if (!checker.empty()) {
      const auto t = c.checker ? c.checker->timeout : std::chrono::minutes(10);
      c.checker = checker_preset(checker);
      c.checker->timeout = t;
    }
    if (timeout > 0) {
      const std::chrono::milliseconds ms(static_cast<long>(timeout * 1000));
      if (c.solver) c.solver->timeout = ms;
      if (c.checker) c.checker->timeout = ms;
    }
    if (workers > 0) c.workers = workers;
    if (!workdir.empty()) c.workdir = workdir;
    return c;
  }
};

PointSet load_points_arg(const std::string& file, const std::string& name) {
  if (!name.empty()) return witness(name);
  if (file.empty()) throw std::invalid_argument("give a point file or --witness");
  return load_point_set(file);
}

int print_report(const SolveReport& r, bool print_model, const std::string& expect) {
  write_report(std::cout, r, print_model);
  if (!r.output_tail.empty()) std::cerr << r.output_tail << '\n';
  if (r.status != RunStatus::Ok || r.verdict == Verdict::Unknown) return kInfra;
  if (!expect.empty()) {
    const Verdict want = expect == "sat" ? Verdict::Sat : Verdict::Unsat;
    if (r.verdict != want) return kFail;
  }
  if (r.verification == CheckStatus::Failed || r.proof_check == CheckStatus::Failed) return kFail;
  return kPass;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"SAT-based analysis of holes in planar point sets"};
  app.require_subcommand(1);
  HarnessArgs harness;
  harness.attach(app);

  // encode
  auto* encode = app.add_subcommand("encode", "write a DIMACS instance and registry sidecar");
  ProblemArgs encode_problem;
  encode_problem.attach(encode, true);
  std::string encode_out;
  bool no_registry = false;
  encode->add_option("-o,--output", encode_out, "output file (default <instance-id>.cnf)");
  encode->add_flag("--no-registry", no_registry, "skip the .vars sidecar");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance and verify the answer");
  ProblemArgs solve_problem_args;
  solve_problem_args.attach(solve, false);
  std::string solve_cnf, expect, report_file, summary_file;
  bool want_proof = false, want_check = false, print_model = false, no_verify = false;
  solve->add_option("--cnf", solve_cnf, "existing DIMACS file instead of problem flags");
  solve->add_flag("--proof", want_proof, "request an UNSAT certificate");
  solve->add_flag("--check", want_check, "check the certificate (implies --proof)");
  solve->add_option("--expect", expect, "sat | unsat")->check(CLI::IsMember({"sat", "unsat"}));
  solve->add_option("--report", report_file, "write the report here");
  solve->add_option("--summary", summary_file, "write a JSON summary here");
  solve->add_flag("--print-model", print_model, "include the model in the printed report");
  solve->add_flag("--no-verify", no_verify, "skip model decoding and verification");

  // verify-witness
  auto* verify = app.add_subcommand("verify-witness", "check properties of a point set (no solver)");
  std::string vw_file, vw_name;
  std::vector<std::string> no_disjoint, no_interior, has_disjoint;
  std::vector<int> no_holes, no_gons, has_holes;
  verify->add_option("file", vw_file, "point file");
  verify->add_option("--witness", vw_name, "embedded witness instead of a file");
  verify->add_option("--no-disjoint-holes", no_disjoint, "sizes, e.g. 5,5 or 5,5,5");
  verify->add_option("--no-interior-disjoint-holes", no_interior, "two sizes, e.g. 5,5");
  verify->add_option("--has-disjoint-holes", has_disjoint, "sizes that must occur disjointly");
  verify->add_option("--no-holes", no_holes, "hole size that must not occur");
  verify->add_option("--no-gons", no_gons, "gon size that must not occur");
  verify->add_option("--has-holes", has_holes, "hole size that must occur");

  // count-holes
  auto* count = app.add_subcommand("count-holes", "count k-holes (or k-gons) of a point set");
  std::string ch_file, ch_name;
  int ch_k = 5;
  bool ch_gons = false;
  count->add_option("file", ch_file, "point file");
  count->add_option("--witness", ch_name, "embedded witness instead of a file");
  count->add_option("--k", ch_k, "size")->check(CLI::Range(2, 64));
  count->add_flag("--gons", ch_gons, "count k-gons instead of k-holes");

  // construct
  auto* construct = app.add_subcommand("construct", "write a construction or embedded witness");
  std::string cons_name, cons_out;
  int cons_n = 10;
  double cons_radius = 1e6;
  construct->add_option("name", cons_name, "double-circle | two-ring | fig2-n16 | fig4-n21 | fig6-n14")
      ->required();
  construct->add_option("--n", cons_n, "number of points for generated constructions");
  construct->add_option("--radius", cons_radius, "construction radius");
  construct->add_option("-o,--output", cons_out, "output file (default stdout)");

  // search
  auto* search = app.add_subcommand("search", "simulated-annealing witness search");
  int search_n = 0, restarts = 1;
  std::string objective = "disjoint-holes:5,5", search_out;
  bool search_log = false;
  SearchParams params;
  search->add_option("--n", search_n, "number of points")->required();
  search->add_option("--objective", objective, "disjoint-holes:5,5 | interior-disjoint-holes:5,5 | holes:5 | gons:5");
  search->add_option("--seed", params.seed, "first seed");
  search->add_option("--budget", params.budget, "objective evaluations per restart");
  search->add_option("--restarts", restarts, "independent restarts");
  search->add_option("--epoch", params.epoch_length, "moves per temperature epoch");
  search->add_option("--temperature", params.initial_temperature, "initial temperature");
  search->add_option("--cooling", params.cooling, "temperature factor per epoch");
  search->add_option("--max-step", params.max_step, "initial displacement bound");
  search->add_option("--min-step", params.min_step, "final displacement bound");
  search->add_option("--box", params.box, "coordinate bound");
  search->add_option("-o,--output", search_out, "witness file (default stdout)");
  search->add_flag("--log", search_log, "print one line per epoch to stderr");

  // recipe
  auto* recipe = app.add_subcommand("recipe", "run a named reproduction recipe");
  std::string recipe_name, recipe_summary;
  bool list = false, no_proofs = false;
  recipe->add_option("name", recipe_name, "recipe name");
  recipe->add_flag("--list", list, "list recipes");
  recipe->add_flag("--no-proofs", no_proofs, "skip certificates for UNSAT steps");
  recipe->add_option("--summary", recipe_summary, "write a JSON summary of solver runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInfra;
  }

  try {
    if (*encode) {
      const HoleProblem p = encode_problem.problem();
      const EncodedProblem enc = build_instance(p);
      const std::string out = encode_out.empty() ? default_instance_id(p) + ".cnf" : encode_out;
      save_dimacs(out, enc.instance, no_registry ? nullptr : &enc.registry);
      std::cout << "instance: " << out << '\n'
                << "problem: " << p.describe() << '\n'
                << "variables: " << enc.instance.num_vars << '\n'
                << "clauses: " << enc.instance.clause_count() << '\n';
      for (const auto& g : enc.instance.groups) std::cout << "group " << g.name() << ": " << g.size() << '\n';
      return kPass;
    }

    if (*solve) {
      const HarnessConfig cfg = harness.resolve();
      if (!cfg.solver) {
        std::cerr << "no SAT solver configured (use --solver, --config or HOLESAT_SOLVER)\n";
        return kInfra;
      }
      if (want_check && !cfg.checker) {
        std::cerr << "--check needs a proof checker (--checker, config or HOLESAT_CHECKER)\n";
        return kInfra;
      }
      SolveReport r;
      if (!solve_cnf.empty()) {
        std::optional<std::filesystem::path> proof;
        if (want_proof || want_check) proof = std::filesystem::path(solve_cnf).replace_extension(".drat");
        r = run_solver(solve_cnf, *cfg.solver, proof);
        if (r.verdict == Verdict::Sat && !no_verify) {
          const ParsedCnf parsed = load_dimacs(solve_cnf);
          const auto sidecar = registry_sidecar(solve_cnf);
          if (parsed.problem && std::filesystem::exists(sidecar)) {
            const VarRegistry reg = VarRegistry::load(sidecar);
            const auto assignment = assignment_from_literals(r.model, parsed.instance.num_vars);
            try {
              const auto v = verify_model(decode_model(assignment, reg, *parsed.problem), *parsed.problem);
              r.verification = v.passed ? CheckStatus::Passed : CheckStatus::Failed;
              r.detail = v.detail;
            } catch (const DecodeError& e) {
              r.verification = CheckStatus::Failed;
              r.detail = e.what();
            }
          }
        }
        if (want_check && r.certificate_path) {
          const auto check = run_proof_check(solve_cnf, *r.certificate_path, *cfg.checker);
          r.proof_check = check.status;
          if (check.status == CheckStatus::Failed) r.output_tail = check.output;
        }
      } else {
        if (solve_problem_args.n == 0) {
          std::cerr << "solve needs --cnf or problem flags (--n ...)\n";
          return kInfra;
        }
        SolveOptions opts;
        opts.workdir = cfg.workdir;
        opts.proof = want_proof || want_check;
        opts.verify = !no_verify;
        std::optional<CheckerConfig> checker;
        if (want_check) checker = cfg.checker;
        r = solve_problem(solve_problem_args.problem(), *cfg.solver, checker, opts);
      }
      if (!report_file.empty()) {
        std::ofstream out(report_file);
        write_report(out, r);
      }
      if (!summary_file.empty()) write_summary_json(summary_file, {r});
      return print_report(r, print_model, expect);
    }

    if (*verify) {
      const PointSet s = load_points_arg(vw_file, vw_name);
      int failures = 0;
      int checks = 0;
      auto report = [&](const std::string& what, bool ok, const std::string& detail) {
        ++checks;
        failures += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << what << (detail.empty() ? "" : ": " + detail) << '\n';
      };
      auto describe = [](const std::vector<Hole>& t) {
        std::string d;
        for (const auto& h : t) {
          d += '{';
          for (std::size_t i = 0; i < h.indices.size(); ++i) d += (i ? "," : "") + std::to_string(h.indices[i] + 1);
          d += '}';
        }
        return d;
      };
      for (const auto& sz : no_disjoint) {
        const auto t = find_disjoint_tuple(s, parse_sizes(sz), DisjointMode::Disjoint);
        report("no disjoint holes of sizes " + sz, !t, t ? describe(*t) : "");
      }
      for (const auto& sz : no_interior) {
        const auto t = find_disjoint_tuple(s, parse_sizes(sz), DisjointMode::InteriorDisjoint);
        report("no interior-disjoint holes of sizes " + sz, !t, t ? describe(*t) : "");
      }
      for (const auto& sz : has_disjoint) {
        const auto t = find_disjoint_tuple(s, parse_sizes(sz), DisjointMode::Disjoint);
        report("disjoint holes of sizes " + sz, t.has_value(), t ? describe(*t) : "");
      }
      for (int k : no_holes) {
        const auto h = enumerate_holes(s, k);
        report("no " + std::to_string(k) + "-hole", h.empty(), h.empty() ? "" : describe({h.front()}));
      }
      for (int k : no_gons) {
        const auto g = enumerate_gons(s, k);
        report("no " + std::to_string(k) + "-gon", g.empty(), g.empty() ? "" : describe({g.front()}));
      }
      for (int k : has_holes) {
        const auto h = enumerate_holes(s, k);
        report(std::to_string(k) + "-hole present", !h.empty(), std::to_string(h.size()) + " found");
      }
      if (checks == 0) {
        std::cerr << "no property requested\n";
        return kInfra;
      }
      return failures == 0 ? kPass : kFail;
    }

    if (*count) {
      const PointSet s = load_points_arg(ch_file, ch_name);
      const auto c = ch_gons ? enumerate_gons(s, ch_k).size() : enumerate_holes(s, ch_k).size();
      std::cout << c << '\n';
      return kPass;
    }

    if (*construct) {
      PointSet s;
      std::string comment;
      if (cons_name == "double-circle") {
        s = generate_double_circle(cons_n, cons_radius);
        comment = "double circle, n=" + std::to_string(cons_n);
      } else if (cons_name == "two-ring") {
        s = generate_two_ring(cons_n, cons_radius);
        comment = "two-ring, n=" + std::to_string(cons_n);
      } else {
        s = witness(cons_name);
        comment = cons_name;
      }
      if (cons_out.empty()) write_points(std::cout, s, comment);
      else save_point_set(cons_out, s, comment);
      return kPass;
    }

    if (*search) {
      const HarnessConfig cfg = harness.resolve();
      if (search_log) params.log = &std::cerr;
      const auto obj = SearchObjective::parse(objective);
      const auto res = parallel_search(search_n, obj, params, restarts, cfg.workers);
      if (!res.witness) {
        std::cerr << "no witness within budget (best value " << res.best_value << ")\n";
        return kFail;
      }
      const std::string comment = obj.to_string() + " witness, seed " + std::to_string(res.seed);
      if (search_out.empty()) write_points(std::cout, *res.witness, comment);
      else save_point_set(search_out, *res.witness, comment);
      std::cerr << "witness found with seed " << res.seed << " after " << res.evaluations << " evaluations\n";
      return kPass;
    }

    if (*recipe) {
      if (list || recipe_name.empty()) {
        for (const auto& r : recipe_list())
          std::cout << r.name << (r.long_running ? " [long]" : "") << ": " << r.description << '\n';
        return kPass;
      }
      RecipeContext ctx;
      ctx.config = harness.resolve();
      ctx.proofs = !no_proofs;
      ctx.log = &std::cerr;
      const RecipeResult res = run_recipe(recipe_name, ctx);
      std::vector<SolveReport> reports;
      for (const auto& step : res.steps) {
        std::cout << (step.passed ? "PASS " : step.infrastructure_failure ? "ERROR " : "FAIL ") << step.name
                  << (step.detail.empty() ? "" : ": " + step.detail) << '\n';
        if (step.report) reports.push_back(*step.report);
      }
      if (!recipe_summary.empty()) write_summary_json(recipe_summary, reports);
      std::cout << "recipe " << res.name << ": " << (res.passed() ? "PASS" : "FAIL") << '\n';
      return exit_code(res);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfra;
  }
  return kInfra;
}

}  // namespace holesat::app
