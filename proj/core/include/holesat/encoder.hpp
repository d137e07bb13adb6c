#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holesat/registry.hpp"
#include "holesat/signotope.hpp"

namespace holesat {

enum class ProblemMode {
  TwoDisjointHoles,
  TwoInteriorDisjointHoles,
  ForbidHole,
  ForbidGon,
  CountHoles,
};

enum class OrientationEncoding {
  Compact,        // one variable per sorted triple, other orders as literals
  PaperFaithful,  // one variable per ordered triple plus the alternating axioms
};

std::string_view mode_name(ProblemMode mode);
ProblemMode parse_mode(std::string_view name);

/// Declarative description of the question being encoded. A satisfying
/// assignment is an abstract point set on n points that avoids the
/// structure named by `mode`.
struct HoleProblem {
  int n = 0;
  ProblemMode mode = ProblemMode::TwoDisjointHoles;
  int k1 = 5;  // hole sizes for the two disjoint modes
  int k2 = 5;
  int k = 5;          // hole/gon size for forbid and count modes
  int threshold = 1;  // count mode: UNSAT means every set has >= threshold k-holes
  OrientationEncoding orientation = OrientationEncoding::Compact;
  bool hints = false;             // window/prefix facts for (5,5)
  bool relaxed_lr = false;        // L/R witnesses may also contain the other point
  bool simplified_holes = false;  // k-hole = all triples are 3-holes (no 4-gon terms)

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  [[nodiscard]] bool disjoint_mode() const {
    return mode == ProblemMode::TwoDisjointHoles || mode == ProblemMode::TwoInteriorDisjointHoles;
  }
  /// Hole sizes that need their own k-hole variables (k >= 4, hole modes).
  [[nodiscard]] std::vector<int> hole_variable_sizes() const;

  /// Single-line `key=value` description, parsed back by `parse`.
  [[nodiscard]] std::string describe() const;
  static HoleProblem parse(std::string_view text);

  friend bool operator==(const HoleProblem&, const HoleProblem&) = default;
};

/// Clauses of one constraint family, stored back to back.
class ClauseGroup {
 public:
  ClauseGroup() = default;
  explicit ClauseGroup(std::string name) : name_(std::move(name)) {}

  void add(std::initializer_list<int> clause) { add(std::span<const int>(clause.begin(), clause.size())); }
  void add(std::span<const int> clause);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t size() const { return ends_.size(); }
  [[nodiscard]] bool empty() const { return ends_.empty(); }
  [[nodiscard]] std::span<const int> clause(std::size_t i) const {
    const std::size_t begin = i == 0 ? 0 : ends_[i - 1];
    return {literals_.data() + begin, ends_[i] - begin};
  }
  [[nodiscard]] std::size_t literal_count() const { return literals_.size(); }

 private:
  std::string name_;
  std::vector<int> literals_;
  std::vector<std::size_t> ends_;
};

struct CnfInstance {
  HoleProblem problem;
  int num_vars = 0;
  std::vector<ClauseGroup> groups;

  [[nodiscard]] std::size_t clause_count() const;
  [[nodiscard]] const ClauseGroup* group(std::string_view name) const;
};

// Group names, one per constraint family.
namespace groups {
inline constexpr std::string_view kAlternating = "alternating";
inline constexpr std::string_view kSignotope = "signotope";
inline constexpr std::string_view kSortedAroundFirst = "sorted-around-first";
inline constexpr std::string_view kBoundingSegments = "bounding-segments";
inline constexpr std::string_view kGonsContainments = "gons-containments";
inline constexpr std::string_view kThreeHoles = "3-holes";
inline constexpr std::string_view kKHoles = "k-holes";
inline constexpr std::string_view kKGons = "k-gons";
inline constexpr std::string_view kDisjointness = "disjointness";
inline constexpr std::string_view kHints = "hints";
inline constexpr std::string_view kForbid = "forbid";
inline constexpr std::string_view kCardinality = "cardinality";
}  // namespace groups

/// Registers every variable the problem needs, in a fixed order.
VarRegistry build_registry(const HoleProblem& problem);

/// Literal stating that (a,b,c) is positively oriented, for distinct
/// indices in any order.
int orientation_literal(const HoleProblem& problem, const VarRegistry& registry, int a, int b,
                        int c);

// Orientation axioms: alternation (paper-faithful only), signotope axioms on
// every sorted 4-tuple, and positive orientation of every (0,a,b).
std::vector<ClauseGroup> emit_orientation_axioms(const HoleProblem& problem,
                                                 const VarRegistry& registry);
// Hole definitions: bounding segments, 4-gons and containments, 3-holes and
// k-holes (or k-gons in forbid-gon mode).
std::vector<ClauseGroup> emit_hole_definitions(const HoleProblem& problem,
                                               const VarRegistry& registry);
// Disjointness: no line through two points has a k1-hole on its left and a
// k2-hole on its right.
ClauseGroup emit_disjointness(const HoleProblem& problem, const VarRegistry& registry);
// Hints: every 10 consecutive points carry a 5-hole; for n = 17 no
// 5-hole inside the first or last 7 points.
ClauseGroup emit_hints(const HoleProblem& problem, const VarRegistry& registry);
// At most threshold-1 k-hole variables are true (sequential counter).
ClauseGroup emit_cardinality(const HoleProblem& problem, const VarRegistry& registry);
// Forbid-hole/forbid-gon: every k-hole (k-gon) variable is false.
ClauseGroup emit_forbidden(const HoleProblem& problem, const VarRegistry& registry);

struct EncodedProblem {
  CnfInstance instance;
  VarRegistry registry;
};

EncodedProblem build_instance(const HoleProblem& problem);

/// Assignment (indexed by variable id, slot 0 unused) that sets every
/// orientation variable from `sig` and every auxiliary variable to the truth
/// value of what it denotes, evaluated directly on `sig`.
std::vector<bool> assignment_from_signotope(const HoleProblem& problem,
                                            const VarRegistry& registry, const Signotope& sig);

bool clause_satisfied(std::span<const int> clause, const std::vector<bool>& assignment);
/// Index of the first clause of `group` falsified by `assignment`.
std::optional<std::size_t> first_falsified(const ClauseGroup& group,
                                           const std::vector<bool>& assignment);

// Closed-form variable counts used by tests and documentation.
std::uint64_t binomial(int n, int k);

}  // namespace holesat
