#include "holesat/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holesat {

void write_dimacs(std::ostream& out, const CnfInstance& instance, const VarRegistry* registry) {
  out << "c problem " << instance.problem.describe() << '\n';
  for (const auto& g : instance.groups) out << "c group " << g.name() << ' ' << g.size() << '\n';
  if (registry)
    for (const auto& b : registry->layout())
      out << "c layout " << kind_name(b.kind) << ' ' << b.first << ' ' << b.count << '\n';
  out << "p cnf " << instance.num_vars << ' ' << instance.clause_count() << '\n';

  std::string buf;
  buf.reserve(1 << 16);
  char num[16];
  for (const auto& g : instance.groups) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (int lit : g.clause(i)) {
        auto [p, ec] = std::to_chars(num, num + sizeof num, lit);
        buf.append(num, p);
        buf.push_back(' ');
      }
      buf.append("0\n");
      if (buf.size() > (1 << 16) - 256) {
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::filesystem::path registry_sidecar(const std::filesystem::path& cnf_path) {
  auto p = cnf_path;
  p += ".vars";
  return p;
}

void save_dimacs(const std::filesystem::path& path, const CnfInstance& instance,
                 const VarRegistry* registry) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dimacs(out, instance, registry);
  if (!out) throw std::runtime_error("write failed for " + path.string());
  if (registry) registry->save(registry_sidecar(path));
}

ParsedCnf read_dimacs(std::istream& in) {
  ParsedCnf parsed;
  std::vector<std::pair<std::string, std::size_t>> recorded;
  std::string line;
  std::size_t line_no = 0;
  long declared_vars = -1;
  long declared_clauses = -1;
  std::vector<int> clause;
  std::vector<std::vector<int>> clauses;

  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("DIMACS line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') {
      std::istringstream fields(line.substr(1));
      std::string key;
      fields >> key;
      if (key == "problem") {
        std::string rest;
        std::getline(fields, rest);
        parsed.problem = HoleProblem::parse(rest);
      } else if (key == "group") {
        std::string name;
        std::size_t count = 0;
        if (fields >> name >> count) recorded.emplace_back(name, count);
      }
      continue;
    }
    if (line[0] == 'p') {
      std::istringstream fields(line);
      std::string p, cnf;
      if (!(fields >> p >> cnf >> declared_vars >> declared_clauses) || cnf != "cnf")
        fail("malformed header");
      continue;
    }
    if (declared_vars < 0) fail("clause before header");
    const char* s = line.data();
    const char* end = s + line.size();
    while (s < end) {
      while (s < end && (*s == ' ' || *s == '\t' || *s == '\r')) ++s;
      if (s >= end) break;
      int lit = 0;
      auto [p, ec] = std::from_chars(s, end, lit);
      if (ec != std::errc()) fail("bad literal");
      s = p;
      if (lit == 0) {
        clauses.push_back(clause);
        clause.clear();
      } else {
        if (std::abs(lit) > declared_vars) fail("literal exceeds declared variable count");
        clause.push_back(lit);
      }
    }
  }
  if (!clause.empty()) throw std::runtime_error("DIMACS: unterminated final clause");
  if (declared_vars < 0) throw std::runtime_error("DIMACS: missing header");
  if (static_cast<long>(clauses.size()) != declared_clauses)
    throw std::runtime_error("DIMACS: header declares " + std::to_string(declared_clauses) +
                             " clauses, found " + std::to_string(clauses.size()));

  parsed.instance.num_vars = static_cast<int>(declared_vars);
  if (parsed.problem) parsed.instance.problem = *parsed.problem;
  std::size_t next = 0;
  for (const auto& [name, count] : recorded) {
    if (next + count > clauses.size()) break;
    ClauseGroup g(name);
    for (std::size_t i = 0; i < count; ++i) g.add(clauses[next + i]);
    next += count;
    parsed.instance.groups.push_back(std::move(g));
  }
  if (next < clauses.size()) {
    ClauseGroup g("clauses");
    for (; next < clauses.size(); ++next) {
      if (clauses[next].empty()) throw std::runtime_error("DIMACS: empty clause");
      g.add(clauses[next]);
    }
    parsed.instance.groups.push_back(std::move(g));
  }
  return parsed;
}

ParsedCnf load_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_dimacs(in);
}

}  // namespace holesat
