#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holesat/holes.hpp"

namespace holesat {

enum class ObjectiveKind {
  DisjointHoles,          // tuples of pairwise disjoint holes of the given sizes
  InteriorDisjointHoles,  // pairs of interior-disjoint holes
  Holes,                  // k-holes, sizes = {k}
  Gons,                   // k-gons, sizes = {k}
};

/// Structure a witness must avoid; its value is the number of occurrences.
struct SearchObjective {
  ObjectiveKind kind = ObjectiveKind::DisjointHoles;
  std::vector<int> sizes{5, 5};

  [[nodiscard]] int largest() const;
  /// "disjoint-holes:5,5", "interior-disjoint-holes:5,5", "holes:5", "gons:5".
  [[nodiscard]] std::string to_string() const;
  static SearchObjective parse(const std::string& text);
};

std::uint64_t objective_count(const PointSet& s, const SearchObjective& objective);

struct SearchParams {
  std::uint64_t seed = 1;
  std::uint64_t budget = 200000;    // objective evaluations
  std::uint64_t epoch_length = 500;
  double initial_temperature = 2.0;
  double cooling = 0.97;            // temperature factor per epoch
  double max_step = 2e5;            // displacement bound in the first epoch
  double min_step = 8;              // displacement bound in the last epoch
  Coord box = 1'000'000;            // |x|, |y| <= box
  std::ostream* log = nullptr;      // one line per epoch when set
};

struct SearchResult {
  std::optional<PointSet> witness;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  std::uint64_t best_value = 0;
};

/// Simulated annealing over integer point sets. Every visited set is in
/// general position; the result re-verifies with fresh exact arithmetic.
SearchResult local_search(int n, const SearchObjective& objective, const SearchParams& params,
                          const std::optional<PointSet>& start = std::nullopt);

/// Restarts with seeds params.seed, params.seed+1, ... on `workers` threads.
/// The first witness found wins; its seed is reported.
SearchResult parallel_search(int n, const SearchObjective& objective, const SearchParams& params,
                             int restarts, int workers);

}  // namespace holesat
