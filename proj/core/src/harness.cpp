#include "holesat/harness.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <sstream>
#include <thread>

#include "holesat/dimacs.hpp"
#include "json.hpp"

extern char** environ;

namespace holesat {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string tail_lines(std::string_view text, int lines) {
  std::size_t pos = text.size();
  int seen = 0;
  while (pos > 0) {
    const auto nl = text.rfind('\n', pos - 1);
    if (nl == std::string_view::npos) return std::string(text);
    if (nl + 1 < pos && ++seen > lines) return std::string(text.substr(nl + 1));
    pos = nl;
  }
  return std::string(text);
}

std::vector<std::string> expand(const std::vector<std::string>& tmpl,
                                const std::vector<std::string>& proof_args,
                                const std::vector<std::pair<std::string, std::string>>& vars,
                                bool with_proof) {
  std::vector<std::string> out;
  auto subst = [&](std::string s) {
    for (const auto& [key, value] : vars) {
      for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size()))
        s.replace(pos, key.size(), value);
    }
    return s;
  };
  for (const auto& a : tmpl) {
    if (a == "{proof_args}") {
      if (with_proof)
        for (const auto& p : proof_args) out.push_back(subst(p));
      continue;
    }
    out.push_back(subst(a));
  }
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::Crash: return "crash";
    case RunStatus::Unparsable: return "unparsable";
    case RunStatus::NotFound: return "not-found";
  }
  return "?";
}

std::string_view check_name(CheckStatus c) {
  switch (c) {
    case CheckStatus::Passed: return "passed";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string_view dialect_name(Dialect d) {
  return d == Dialect::PicosatRup ? "picosat-rup" : "competition";
}

Dialect parse_dialect(std::string_view name) {
  if (name == "competition") return Dialect::Competition;
  if (name == "picosat-rup") return Dialect::PicosatRup;
  throw std::invalid_argument("unknown solver dialect '" + std::string(name) + "'");
}

std::vector<std::string> solver_preset_names() { return {"varisat", "splr", "glucose", "picosat"}; }

SolverConfig solver_preset(std::string_view name, fs::path executable) {
  SolverConfig c;
  c.name = std::string(name);
  c.executable = executable.empty() ? fs::path(std::string(name)) : std::move(executable);
  if (name == "varisat") {
    c.args = {"{proof_args}", "{input}"};
    c.proof_args = {"--proof", "{proof}", "--proof-format", "drat"};
  } else if (name == "splr") {
    c.args = {"-q", "-C", "-r", "-", "{proof_args}", "{input}"};
    c.proof_args = {"-c", "-p", "{proof}"};
  } else if (name == "glucose") {
    c.args = {"-model", "{proof_args}", "{input}"};
    c.proof_args = {"-certified", "-certified-output={proof}"};
  } else if (name == "picosat") {
    c.args = {"{proof_args}", "{input}"};
    c.proof_args = {"-R", "{proof}"};
    c.dialect = Dialect::PicosatRup;
  } else {
    throw std::invalid_argument("unknown solver preset '" + std::string(name) + "'");
  }
  return c;
}

CheckerConfig checker_preset(const fs::path& executable) {
  CheckerConfig c;
  c.executable = executable;
  if (executable.filename() == "rate") c.args = {"-d", "{cnf}", "{proof}"};
  return c;
}

std::optional<fs::path> resolve_executable(const fs::path& exe) {
  if (exe.empty()) return std::nullopt;
  const auto s = exe.string();
  if (s.find('/') != std::string::npos) {
    if (::access(s.c_str(), X_OK) == 0) return exe;
    return std::nullopt;
  }
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  std::string_view dirs(path);
  while (!dirs.empty()) {
    const auto colon = dirs.find(':');
    const auto dir = dirs.substr(0, colon);
    if (!dir.empty()) {
      const fs::path candidate = fs::path(std::string(dir)) / exe;
      if (::access(candidate.c_str(), X_OK) == 0) return candidate;
    }
    if (colon == std::string_view::npos) break;
    dirs.remove_prefix(colon + 1);
  }
  return std::nullopt;
}

HarnessConfig load_harness_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config " + path.string() + ": " + e.what());
  }
  HarnessConfig c;
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};
  if (j.contains("timeout_seconds"))
    timeout = std::chrono::milliseconds(static_cast<long>(j["timeout_seconds"].get<double>() * 1000));
  if (j.contains("workers")) c.workers = j["workers"].get<int>();
  if (j.contains("workdir")) c.workdir = j["workdir"].get<std::string>();
  if (j.contains("solver")) {
    const auto& s = j["solver"];
    const std::string preset = s.value("preset", "");
    const std::string exe = s.value("path", "");
    SolverConfig sc;
    if (!preset.empty()) {
      sc = solver_preset(preset, exe);
    } else {
      if (exe.empty()) throw std::runtime_error("config: solver needs a preset or a path");
      sc.name = fs::path(exe).filename().string();
      sc.executable = exe;
      sc.args = {"{input}"};
    }
    if (s.contains("args")) sc.args = s["args"].get<std::vector<std::string>>();
    if (s.contains("proof_args")) sc.proof_args = s["proof_args"].get<std::vector<std::string>>();
    if (s.contains("dialect")) sc.dialect = parse_dialect(s["dialect"].get<std::string>());
    if (s.contains("name")) sc.name = s["name"].get<std::string>();
    sc.timeout = timeout;
    c.solver = sc;
  }
  if (j.contains("checker")) {
    const auto& k = j["checker"];
    CheckerConfig cc = checker_preset(k.at("path").get<std::string>());
    if (k.contains("args")) cc.args = k["args"].get<std::vector<std::string>>();
    cc.timeout = timeout;
    c.checker = cc;
  }
  if (c.workers < 1) throw std::runtime_error("config: workers must be positive");
  return c;
}

void apply_environment(HarnessConfig& config) {
  auto env = [](const char* key) -> std::optional<std::string> {
    const char* v = std::getenv(key);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
  };
  const auto preset = env("HOLESAT_SOLVER_PRESET");
  const auto solver = env("HOLESAT_SOLVER");
  if (preset || solver) {
    std::string name = preset.value_or(fs::path(solver.value_or("")).filename().string());
    if (!preset && config.solver) name = config.solver->name;
    const auto names = solver_preset_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw std::runtime_error("cannot infer solver preset from '" + name +
                               "'; set HOLESAT_SOLVER_PRESET");
    const auto timeout = config.solver ? config.solver->timeout : std::chrono::minutes(10);
    config.solver = solver_preset(name, solver.value_or(""));
    config.solver->timeout = timeout;
  }
  if (auto checker = env("HOLESAT_CHECKER")) {
    const auto timeout = config.checker ? config.checker->timeout : std::chrono::minutes(10);
    config.checker = checker_preset(*checker);
    config.checker->timeout = timeout;
  }
  if (auto t = env("HOLESAT_TIMEOUT")) {
    const std::chrono::milliseconds ms(static_cast<long>(std::stod(*t) * 1000));
    if (config.solver) config.solver->timeout = ms;
    if (config.checker) config.checker->timeout = ms;
  }
  if (auto w = env("HOLESAT_WORKERS")) {
    config.workers = std::stoi(*w);
    if (config.workers < 1) throw std::runtime_error("HOLESAT_WORKERS must be positive");
  }
  if (auto d = env("HOLESAT_WORKDIR")) config.workdir = *d;
}

ProcessResult run_process(const std::vector<std::string>& argv, std::chrono::milliseconds timeout,
                          const fs::path& scratch_dir) {
  ProcessResult r;
  if (argv.empty()) {
    r.error = "empty command";
    return r;
  }
  static std::atomic<unsigned> counter{0};
  fs::create_directories(scratch_dir);
  const std::string stem = "proc-" + std::to_string(::getpid()) + "-" + std::to_string(counter++);
  const fs::path out_path = scratch_dir / (stem + ".out");
  const fs::path err_path = scratch_dir / (stem + ".err");

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&actions, 1, out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, 2, err_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::vector<char*> cargv;
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);

  const auto start = std::chrono::steady_clock::now();
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, argv[0].c_str(), &actions, &attr, cargv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) {
    r.error = std::string("cannot start ") + argv[0] + ": " + std::strerror(rc);
    std::error_code ec;
    fs::remove(out_path, ec);
    fs::remove(err_path, ec);
    return r;
  }
  r.started = true;

  int status = 0;
  auto sleep = std::chrono::milliseconds(1);
  while (true) {
    const pid_t w = ::waitpid(pid, &status, WNOHANG);
    if (w == pid) break;
    if (w < 0 && errno != EINTR) {
      r.error = std::string("waitpid: ") + std::strerror(errno);
      break;
    }
    if (std::chrono::steady_clock::now() - start > timeout) {
      r.timed_out = true;
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
      }
      break;
    }
    std::this_thread::sleep_for(sleep);
    sleep = std::min(sleep * 2, std::chrono::milliseconds(20));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.timed_out) {
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    if (WIFSIGNALED(status)) r.signal = WTERMSIG(status);
  }
  r.output = read_file(out_path) + read_file(err_path);
  std::error_code ec;
  fs::remove(out_path, ec);
  fs::remove(err_path, ec);
  return r;
}

std::optional<ParsedOutput> parse_solver_output(std::string_view output) {
  ParsedOutput p;
  bool have_status = false;
  bool have_model_end = false;
  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() < 2 || line[1] != ' ') continue;
    if (line[0] == 's') {
      const std::string answer = line.substr(2);
      if (answer.starts_with("SATISFIABLE")) p.verdict = Verdict::Sat;
      else if (answer.starts_with("UNSATISFIABLE")) p.verdict = Verdict::Unsat;
      else if (answer.starts_with("UNKNOWN") || answer.starts_with("INDETERMINATE"))
        p.verdict = Verdict::Unknown;
      else return std::nullopt;
      have_status = true;
    } else if (line[0] == 'v') {
      const char* s = line.data() + 2;
      const char* end = line.data() + line.size();
      while (s < end) {
        while (s < end && (*s == ' ' || *s == '\t')) ++s;
        if (s >= end) break;
        int lit = 0;
        auto [q, ec] = std::from_chars(s, end, lit);
        if (ec != std::errc()) return std::nullopt;
        s = q;
        if (lit == 0) have_model_end = true;
        else p.model.push_back(lit);
      }
    }
  }
  if (!have_status) return std::nullopt;
  if (p.verdict == Verdict::Sat && p.model.empty() && !have_model_end) return std::nullopt;
  return p;
}

SolveReport run_solver(const fs::path& cnf, const SolverConfig& config,
                       const std::optional<fs::path>& proof) {
  SolveReport report;
  report.solver = config.name;
  report.instance_id = cnf.stem().string();
  const auto exe = resolve_executable(config.executable);
  if (!exe) {
    report.status = RunStatus::NotFound;
    report.detail = "solver executable '" + config.executable.string() + "' not found";
    return report;
  }
  if (!fs::exists(cnf)) throw std::runtime_error("instance " + cnf.string() + " does not exist");
  if (proof) {
    std::error_code ec;
    fs::remove(*proof, ec);
  }
  std::vector<std::string> argv{exe->string()};
  const auto args =
      expand(config.args, config.proof_args,
             {{"{input}", cnf.string()}, {"{cnf}", cnf.string()}, {"{proof}", proof ? proof->string() : ""}},
             proof.has_value());
  argv.insert(argv.end(), args.begin(), args.end());

  const fs::path scratch = cnf.parent_path().empty() ? fs::path(".") : cnf.parent_path();
  const ProcessResult pr = run_process(argv, config.timeout, scratch);
  report.wall_time = pr.seconds;
  if (!pr.started) {
    report.status = RunStatus::NotFound;
    report.detail = pr.error;
    return report;
  }
  if (pr.timed_out) {
    report.status = RunStatus::Timeout;
    report.detail = "timed out after " + std::to_string(config.timeout.count() / 1000.0) + " s";
    report.output_tail = tail_lines(pr.output, 20);
    return report;
  }
  if (pr.signal != 0) {
    report.status = RunStatus::Crash;
    report.detail = "killed by signal " + std::to_string(pr.signal);
    report.output_tail = tail_lines(pr.output, 20);
    return report;
  }
  const auto parsed = parse_solver_output(pr.output);
  if (!parsed) {
    const bool normal_exit = pr.exit_code == 0 || pr.exit_code == 10 || pr.exit_code == 20;
    report.status = normal_exit ? RunStatus::Unparsable : RunStatus::Crash;
    report.detail = normal_exit ? "no parsable answer in solver output"
                                : "solver exited with code " + std::to_string(pr.exit_code);
    report.output_tail = tail_lines(pr.output, 20);
    return report;
  }
  if ((parsed->verdict == Verdict::Sat && pr.exit_code == 20) ||
      (parsed->verdict == Verdict::Unsat && pr.exit_code == 10)) {
    report.status = RunStatus::Unparsable;
    report.detail = "answer line contradicts exit code " + std::to_string(pr.exit_code);
    report.output_tail = tail_lines(pr.output, 20);
    return report;
  }
  report.verdict = parsed->verdict;
  report.model = parsed->model;
  if (report.verdict == Verdict::Unsat && proof) {
    if (fs::exists(*proof)) report.certificate_path = *proof;
    else report.detail = "solver did not write a certificate";
  }
  return report;
}

fs::path normalize_proof(const fs::path& proof) {
  std::ifstream in(proof, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open proof " + proof.string());
  if (in.peek() != '%') return proof;
  std::string first;
  std::getline(in, first);
  fs::path out_path = proof.parent_path() / (proof.stem().string() + ".normalized" + proof.extension().string());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path.string());
  out << in.rdbuf();
  return out_path;
}

ProofCheckResult run_proof_check(const fs::path& cnf, const fs::path& proof,
                                 const CheckerConfig& config) {
  ProofCheckResult r;
  const auto exe = resolve_executable(config.executable);
  if (!exe) {
    r.status = CheckStatus::Failed;
    r.output = "checker executable '" + config.executable.string() + "' not found";
    return r;
  }
  if (!fs::exists(proof)) {
    r.status = CheckStatus::Failed;
    r.output = "certificate " + proof.string() + " does not exist";
    return r;
  }
  const fs::path normalized = normalize_proof(proof);
  std::vector<std::string> argv{exe->string()};
  const auto args = expand(config.args, {},
                           {{"{cnf}", cnf.string()}, {"{input}", cnf.string()}, {"{proof}", normalized.string()}},
                           false);
  argv.insert(argv.end(), args.begin(), args.end());
  const fs::path scratch = proof.parent_path().empty() ? fs::path(".") : proof.parent_path();
  const ProcessResult pr = run_process(argv, config.timeout, scratch);
  r.output = pr.started ? pr.output : pr.error;
  if (pr.timed_out) {
    r.status = CheckStatus::Failed;
    r.output = "checker timed out\n" + r.output;
    return r;
  }
  const bool verified = r.output.find("s VERIFIED") != std::string::npos &&
                        r.output.find("NOT VERIFIED") == std::string::npos;
  r.status = pr.started && pr.exit_code == 0 && verified ? CheckStatus::Passed : CheckStatus::Failed;
  return r;
}

std::string default_instance_id(const HoleProblem& p) {
  std::string id = std::string(mode_name(p.mode)) + "-n" + std::to_string(p.n);
  if (p.disjoint_mode()) id += "-k" + std::to_string(p.k1) + "-" + std::to_string(p.k2);
  else id += "-k" + std::to_string(p.k);
  if (p.mode == ProblemMode::CountHoles) id += "-t" + std::to_string(p.threshold);
  if (p.orientation == OrientationEncoding::PaperFaithful) id += "-faithful";
  if (p.hints) id += "-hints";
  if (p.relaxed_lr) id += "-relaxed";
  if (p.simplified_holes) id += "-simplified";
  return id;
}

SolveReport solve_problem(const HoleProblem& problem, const SolverConfig& solver,
                          const std::optional<CheckerConfig>& checker, const SolveOptions& options) {
  const std::string id = options.instance_id.empty() ? default_instance_id(problem) : options.instance_id;
  fs::create_directories(options.workdir);
  const fs::path cnf = options.workdir / (id + ".cnf");
  const EncodedProblem encoded = build_instance(problem);
  save_dimacs(cnf, encoded.instance, &encoded.registry);

  std::optional<fs::path> proof;
  if (options.proof) proof = options.workdir / (id + ".drat");
  SolveReport report = run_solver(cnf, solver, proof);
  report.instance_id = id;

  if (report.verdict == Verdict::Sat && options.verify) {
    const auto assignment = assignment_from_literals(report.model, encoded.instance.num_vars);
    std::string failure;
    for (const auto& g : encoded.instance.groups) {
      if (auto bad = first_falsified(g, assignment)) {
        failure = "model falsifies clause " + std::to_string(*bad) + " of group " + g.name();
        break;
      }
    }
    if (failure.empty()) {
      try {
        const Signotope sig = decode_model(assignment, encoded.registry, problem);
        const VerifyResult v = verify_model(sig, problem);
        if (!v.passed) failure = "model verification failed: " + v.detail;
        else report.detail = v.detail;
      } catch (const DecodeError& e) {
        failure = std::string("decode error: ") + e.what();
      }
    }
    report.verification = failure.empty() ? CheckStatus::Passed : CheckStatus::Failed;
    if (!failure.empty()) report.detail = failure;
  }

  if (report.verdict == Verdict::Unsat && options.proof && checker) {
    if (!report.certificate_path) {
      report.proof_check = CheckStatus::Failed;
    } else {
      const auto check = run_proof_check(cnf, *report.certificate_path, *checker);
      report.proof_check = check.status;
      if (check.status == CheckStatus::Failed) {
        report.detail = "proof check failed";
        report.output_tail = tail_lines(check.output, 20);
      }
    }
  }
  return report;
}

std::vector<SolveReport> run_batch(const std::vector<std::function<SolveReport()>>& jobs, int workers) {
  std::vector<SolveReport> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= jobs.size()) return;
      try {
        results[i] = jobs[i]();
      } catch (const std::exception& e) {
        results[i].status = RunStatus::Crash;
        results[i].detail = std::string("job failed: ") + e.what();
      }
    }
  };
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), jobs.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < count; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return results;
}

void write_report(std::ostream& out, const SolveReport& r, bool include_model) {
  out << "instance: " << r.instance_id << '\n'
      << "solver: " << r.solver << '\n'
      << "verdict: " << verdict_name(r.verdict) << '\n'
      << "status: " << status_name(r.status) << '\n'
      << "wall_time: " << std::fixed << std::setprecision(3) << r.wall_time << '\n'
      << std::defaultfloat << "verification: " << check_name(r.verification) << '\n'
      << "proof_check: " << check_name(r.proof_check) << '\n';
  if (r.certificate_path) out << "certificate: " << r.certificate_path->string() << '\n';
  if (!r.detail.empty()) out << "detail: " << r.detail << '\n';
  if (include_model && !r.model.empty()) {
    out << "model:";
    for (int lit : r.model) out << ' ' << lit;
    out << '\n';
  }
}

SolveReport read_report(std::istream& in) {
  SolveReport r;
  std::string line;
  auto parse_check = [](const std::string& v) {
    for (auto c : {CheckStatus::Passed, CheckStatus::Failed, CheckStatus::Skipped})
      if (check_name(c) == v) return c;
    throw std::runtime_error("report: bad check status '" + v + "'");
  };
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(0, colon);
    const std::string value = line.substr(colon + 2);
    if (key == "instance") r.instance_id = value;
    else if (key == "solver") r.solver = value;
    else if (key == "verdict") {
      bool found = false;
      for (auto v : {Verdict::Sat, Verdict::Unsat, Verdict::Unknown})
        if (verdict_name(v) == value) r.verdict = v, found = true;
      if (!found) throw std::runtime_error("report: bad verdict '" + value + "'");
    } else if (key == "status") {
      bool found = false;
      for (auto s : {RunStatus::Ok, RunStatus::Timeout, RunStatus::Crash, RunStatus::Unparsable,
                     RunStatus::NotFound})
        if (status_name(s) == value) r.status = s, found = true;
      if (!found) throw std::runtime_error("report: bad status '" + value + "'");
    } else if (key == "wall_time") r.wall_time = std::stod(value);
    else if (key == "verification") r.verification = parse_check(value);
    else if (key == "proof_check") r.proof_check = parse_check(value);
    else if (key == "certificate") r.certificate_path = value;
    else if (key == "detail") r.detail = value;
    else if (key == "model") {
      std::istringstream lits(value);
      int lit = 0;
      while (lits >> lit) r.model.push_back(lit);
    }
  }
  return r;
}

void write_summary_json(const fs::path& path, const std::vector<SolveReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j{{"instance", r.instance_id},
                     {"solver", r.solver},
                     {"verdict", verdict_name(r.verdict)},
                     {"status", status_name(r.status)},
                     {"wall_time", r.wall_time},
                     {"verification", check_name(r.verification)},
                     {"proof_check", check_name(r.proof_check)},
                     {"detail", r.detail}};
    if (r.certificate_path) j["certificate"] = r.certificate_path->string();
    arr.push_back(std::move(j));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << arr.dump(2) << '\n';
}

}  // namespace holesat
