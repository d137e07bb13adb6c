#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "holesat/encoder.hpp"

namespace holesat {

/// Writes `instance` as DIMACS. Comment lines record the problem, the clause
/// count of every group and the registry layout.
void write_dimacs(std::ostream& out, const CnfInstance& instance,
                  const VarRegistry* registry = nullptr);

/// Writes `<path>` and, when a registry is given, the sidecar `<path>.vars`.
void save_dimacs(const std::filesystem::path& path, const CnfInstance& instance,
                 const VarRegistry* registry = nullptr);

std::filesystem::path registry_sidecar(const std::filesystem::path& cnf_path);

struct ParsedCnf {
  CnfInstance instance;              // groups restored from "c group" comments when present
  std::optional<HoleProblem> problem;  // from the "c problem" comment
};

/// Parses DIMACS. Clause grouping follows the "c group" comments; clauses
/// beyond the recorded groups land in a group named "clauses".
ParsedCnf read_dimacs(std::istream& in);
ParsedCnf load_dimacs(const std::filesystem::path& path);

}  // namespace holesat
