#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holesat/harness.hpp"

namespace holesat::app {

struct RecipeStep {
  std::string name;
  bool passed = false;
  bool infrastructure_failure = false;  // solver missing, crashed, timed out
  std::string detail;
  std::optional<SolveReport> report;
};

struct RecipeResult {
  std::string name;
  std::vector<RecipeStep> steps;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] bool infrastructure_failure() const;
};

struct RecipeContext {
  HarnessConfig config;
  bool proofs = true;            // request and check certificates for UNSAT steps
  std::ostream* log = nullptr;   // progress lines
};

struct RecipeInfo {
  std::string name;
  std::string description;
  bool long_running = false;
};

std::vector<RecipeInfo> recipe_list();
RecipeResult run_recipe(const std::string& name, const RecipeContext& context);

/// 0 pass, 1 property failure, 2 infrastructure failure.
int exit_code(const RecipeResult& result);

}  // namespace holesat::app
