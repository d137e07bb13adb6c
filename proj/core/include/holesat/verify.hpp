#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "holesat/encoder.hpp"
#include "holesat/holes.hpp"
#include "holesat/signotope.hpp"

namespace holesat {

/// Raised when a model is internally inconsistent in a way the clauses rule
/// out; indicates a bug rather than a property failure.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Assignment indexed by variable id (slot 0 unused) from solver literals.
/// Variables absent from `literals` are false; out-of-range literals throw.
std::vector<bool> assignment_from_literals(std::span<const int> literals, int num_vars);

/// Signotope from the orientation variables of `assignment`. In
/// paper-faithful mode the six variables of every triple must agree.
Signotope decode_model(const std::vector<bool>& assignment, const VarRegistry& registry,
                       const HoleProblem& problem);

struct VerifyResult {
  bool passed = false;
  std::string detail;
  std::vector<IndexSet> witness;  // offending tuple when !passed
};

/// Recomputes the problem's forbidden structure from orientations alone and
/// checks it is absent (count mode: fewer than threshold k-holes).
VerifyResult verify_model(const Signotope& sig, const HoleProblem& problem);

/// Every k-subset that is an abstract hole, in lexicographic order.
std::vector<IndexSet> abstract_holes(const Signotope& sig, int k);

/// Some line through two points has x1 \ {a,b} strictly on one side and
/// x2 \ {a,b} strictly on the other. With `through_members`, a must be in
/// x1 and b in x2 and the sets must not share points (disjoint hulls);
/// otherwise a, b range over all points (interior-disjoint hulls).
bool abstractly_separated(const Signotope& sig, std::span<const int> x1, std::span<const int> x2,
                          bool through_members);

}  // namespace holesat
