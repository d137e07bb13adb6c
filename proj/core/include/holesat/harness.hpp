#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holesat/encoder.hpp"
#include "holesat/verify.hpp"

namespace holesat {

enum class Verdict { Sat, Unsat, Unknown };
/// How the solver process ended, independent of the verdict.
enum class RunStatus { Ok, Timeout, Crash, Unparsable, NotFound };
enum class CheckStatus { Passed, Failed, Skipped };
/// Output/proof conventions. Both parse "s ..."/"v ..." lines; picosat-rup
/// proofs may start with a "%RUPD32"-style line that checkers reject.
enum class Dialect { Competition, PicosatRup };

std::string_view verdict_name(Verdict v);
std::string_view status_name(RunStatus s);
std::string_view check_name(CheckStatus c);
std::string_view dialect_name(Dialect d);
Dialect parse_dialect(std::string_view name);

/// Argument templates expand "{input}", "{proof}" and "{cnf}"; the token
/// "{proof_args}" expands to `proof_args` when a proof is requested and to
/// nothing otherwise.
struct SolverConfig {
  std::string name;
  std::filesystem::path executable;
  std::vector<std::string> args;
  std::vector<std::string> proof_args;
  Dialect dialect = Dialect::Competition;
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};
};

struct CheckerConfig {
  std::filesystem::path executable;
  std::vector<std::string> args{"{cnf}", "{proof}"};
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};
};

/// Checker arguments by executable name: "rate" runs with -d (unit
/// deletions ignored, as drat-trim does); anything else gets "{cnf} {proof}".
CheckerConfig checker_preset(const std::filesystem::path& executable);

/// Known solvers: varisat, splr, glucose, picosat. `executable` defaults to
/// the preset name (looked up in PATH).
SolverConfig solver_preset(std::string_view name, std::filesystem::path executable = {});
std::vector<std::string> solver_preset_names();

struct HarnessConfig {
  std::optional<SolverConfig> solver;
  std::optional<CheckerConfig> checker;
  int workers = 1;
  std::filesystem::path workdir = "holesat-work";
};

/// JSON file layout:
///   {"solver": {"preset": "varisat", "path": "...", "args": [...],
///               "proof_args": [...], "dialect": "competition"},
///    "checker": {"path": "...", "args": [...]},
///    "timeout_seconds": 600, "workers": 4, "workdir": "..."}
HarnessConfig load_harness_config(const std::filesystem::path& path);
/// Overrides from HOLESAT_SOLVER, HOLESAT_SOLVER_PRESET, HOLESAT_CHECKER,
/// HOLESAT_TIMEOUT (seconds), HOLESAT_WORKERS, HOLESAT_WORKDIR.
void apply_environment(HarnessConfig& config);

/// Full path of an executable: kept if it contains a slash, else PATH lookup.
std::optional<std::filesystem::path> resolve_executable(const std::filesystem::path& exe);

struct ProcessResult {
  bool started = false;
  bool timed_out = false;
  int exit_code = -1;  // valid when the process exited normally
  int signal = 0;      // nonzero when killed by a signal
  std::string output;  // stdout followed by stderr
  double seconds = 0;
  std::string error;   // why the process could not be started
};

/// Runs `argv` (argv[0] is the executable) with a wall-clock limit; the
/// process group is killed on timeout.
ProcessResult run_process(const std::vector<std::string>& argv, std::chrono::milliseconds timeout,
                          const std::filesystem::path& scratch_dir);

struct SolveReport {
  std::string instance_id;
  Verdict verdict = Verdict::Unknown;
  RunStatus status = RunStatus::Ok;
  std::vector<int> model;  // literals, SAT only
  std::optional<std::filesystem::path> certificate_path;
  double wall_time = 0;
  std::string solver;
  CheckStatus verification = CheckStatus::Skipped;  // model re-verification
  CheckStatus proof_check = CheckStatus::Skipped;
  std::string detail;
  std::string output_tail;  // last lines of solver output on failure
};

/// Parses competition-style output. Returns nullopt if no "s" line exists
/// or a SAT answer lacks a model.
struct ParsedOutput {
  Verdict verdict = Verdict::Unknown;
  std::vector<int> model;
};
std::optional<ParsedOutput> parse_solver_output(std::string_view output);

/// Runs the solver on an existing DIMACS file.
SolveReport run_solver(const std::filesystem::path& cnf, const SolverConfig& config,
                       const std::optional<std::filesystem::path>& proof = std::nullopt);

/// Removes a leading '%' line (e.g. "%RUPD32 ...") and returns the file the
/// checker should read: `proof` itself when nothing needed stripping.
std::filesystem::path normalize_proof(const std::filesystem::path& proof);

struct ProofCheckResult {
  CheckStatus status = CheckStatus::Skipped;
  std::string output;
};
ProofCheckResult run_proof_check(const std::filesystem::path& cnf,
                                 const std::filesystem::path& proof, const CheckerConfig& config);

struct SolveOptions {
  std::filesystem::path workdir = "holesat-work";
  bool proof = false;           // request a certificate and check it if a checker is set
  bool verify = true;           // decode and re-verify SAT models
  std::string instance_id;      // default: derived from the problem
};

/// Encodes, writes, solves, and post-processes one problem.
SolveReport solve_problem(const HoleProblem& problem, const SolverConfig& solver,
                          const std::optional<CheckerConfig>& checker, const SolveOptions& options);

std::string default_instance_id(const HoleProblem& problem);

/// Runs independent jobs on `workers` threads; results keep job order.
std::vector<SolveReport> run_batch(const std::vector<std::function<SolveReport()>>& jobs,
                                   int workers);

void write_report(std::ostream& out, const SolveReport& report, bool include_model = true);
SolveReport read_report(std::istream& in);
void write_summary_json(const std::filesystem::path& path, const std::vector<SolveReport>& reports);

}  // namespace holesat
