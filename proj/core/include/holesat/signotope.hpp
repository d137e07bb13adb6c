#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "holesat/geometry.hpp"

namespace holesat {

/// Orientation map on index triples of an n-point (abstract) set. Values are
/// stored for every ordered triple; setting one triple sets all six
/// permutations consistently with antisymmetry.
class Signotope {
 public:
  static constexpr int kMaxPoints = 64;

  Signotope() = default;
  /// All sorted triples start out Positive.
  explicit Signotope(int n);

  [[nodiscard]] int size() const { return n_; }

  /// Orientation of (a,b,c) for pairwise distinct indices in any order.
  Orientation operator()(int a, int b, int c) const {
    return static_cast<Orientation>(signs_[index(a, b, c)]);
  }
  bool positive(int a, int b, int c) const {
    return signs_[index(a, b, c)] > 0;
  }

  void set(int a, int b, int c, Orientation o);

  friend bool operator==(const Signotope&, const Signotope&) = default;

 private:
  [[nodiscard]] std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }

  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

/// Orientation map of a point set, as labelled. For canonical point sets the
/// result satisfies the signotope axioms and has every (0,a,b) positive.
Signotope chirotope(const PointSet& s);

/// Chirotope of the canonical relabelling of s, computed from the original
/// coordinates (no transformed coordinates required).
Signotope canonical_chirotope(const PointSet& s);

/// Sorted 4-tuples a<b<c<d whose sequence (abc, abd, acd, bcd) changes sign
/// more than once.
std::vector<std::array<int, 4>> check_signotope(const Signotope& sig);

// Orientation-only predicates. They take every point index into account, so
// they also apply to abstract (possibly non-realizable) signotopes.

/// i strictly inside triangle abc.
bool in_triangle(const Signotope& sig, int i, int a, int b, int c);

/// No point of the set lies inside triangle abc.
bool empty_triangle(const Signotope& sig, int a, int b, int c);

/// Every point of x is a vertex of conv(x): no member is inside a triangle
/// spanned by three others.
bool in_convex_position(const Signotope& sig, std::span<const int> x);

/// x is a hole: for |x| >= 3, every triple of x spans an empty triangle.
/// Sets of size <= 2 are always holes.
bool is_abstract_hole(const Signotope& sig, std::span<const int> x);

}  // namespace holesat
