#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holesat/geometry.hpp"

namespace holesat {

using IndexSet = std::vector<int>;

enum class HoleKind { Gon, Hole };

struct Hole {
  IndexSet indices;  // sorted
  HoleKind kind = HoleKind::Hole;

  friend bool operator==(const Hole&, const Hole&) = default;
  friend auto operator<=>(const Hole& a, const Hole& b) { return a.indices <=> b.indices; }
};

/// Witness that conv(x1) and conv(x2) are disjoint: the line a->b has x1
/// on one side and x2 on the other, touching only at a and b.
struct Separator {
  int a = -1;  // member of x1
  int b = -1;  // member of x2
  // Orientation of (a, b, x) for x in x1 \ {a}; the opposite sign holds on x2.
  Orientation x1_side = Orientation::Negative;
};

enum class DisjointMode { Disjoint, InteriorDisjoint };

/// Hull vertices of the subset x in counterclockwise order.
IndexSet convex_hull(const PointSet& s, std::span<const int> x);

bool is_gon(const PointSet& s, std::span<const int> x);
bool is_hole(const PointSet& s, std::span<const int> x);

/// All k-holes, lexicographically sorted. For k = 2 every pair is a hole.
std::vector<Hole> enumerate_holes(const PointSet& s, int k);
std::vector<Hole> enumerate_gons(const PointSet& s, int k);

/// Number of k-holes computed from the empty-triangle table alone (a hole is
/// a set all of whose triples span empty triangles). Independent of
/// enumerate_holes.
std::size_t count_holes_by_triangles(const PointSet& s, int k);

std::optional<Separator> find_separator(const PointSet& s, std::span<const int> x1,
                                        std::span<const int> x2);

/// conv(x1) and conv(x2) are disjoint. Overlapping index sets are never
/// disjoint.
bool hulls_disjoint(const PointSet& s, std::span<const int> x1,
                    std::span<const int> x2);

/// Closed hulls intersect, decided by edge crossings and vertex containment.
bool hulls_intersect(const PointSet& s, std::span<const int> x1,
                     std::span<const int> x2);

/// Open interiors of conv(x1), conv(x2) are disjoint. Sets with fewer than
/// three points have empty interior.
bool hulls_interior_disjoint(const PointSet& s, std::span<const int> x1,
                             std::span<const int> x2);

bool holes_compatible(const PointSet& s, std::span<const int> x1,
                      std::span<const int> x2, DisjointMode mode);

/// Calls `visit` for each tuple of pairwise (interior-)disjoint holes with
/// the requested sizes. Tuples are unordered: slots of equal size receive
/// holes in increasing order. Enumeration stops when `visit` returns false.
void for_each_disjoint_tuple(const PointSet& s, std::span<const int> sizes,
                             DisjointMode mode,
                             const std::function<bool(std::span<const Hole* const>)>& visit);

std::optional<std::vector<Hole>> find_disjoint_tuple(const PointSet& s,
                                                     std::span<const int> sizes,
                                                     DisjointMode mode);

std::uint64_t count_disjoint_tuples(const PointSet& s, std::span<const int> sizes,
                                    DisjointMode mode);

// Constructions. Coordinates are rounded to integers from a circle of radius
// `radius`; the structural properties are re-verified after rounding.

/// n/2 vertices of a regular polygon plus one point just inside the midpoint
/// of each edge. Points 0..n/2-1 are the extremal points.
PointSet generate_double_circle(int n, double radius = 1e6);

/// Regular n/2-gon plus a slightly shrunken (and, for even n/2, slightly
/// rotated) copy. Points 0..n/2-1 are extremal; point n/2+i is the inner
/// partner of point i.
PointSet generate_two_ring(int n, double radius = 1e6);

/// Embedded witness sets: "fig2-n16", "fig4-n21", "fig6-n14".
PointSet witness(const std::string& name);
std::vector<std::string> witness_names();

}  // namespace holesat
