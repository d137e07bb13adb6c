#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace holesat {

using Coord = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

// Coordinates are bounded so that every orientation determinant fits in a
// signed 128-bit integer.
inline constexpr Coord kMaxCoord = (Coord{1} << 61) - 1;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

enum class Orientation : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Orientation operator-(Orientation o) {
  return static_cast<Orientation>(-static_cast<int>(o));
}

/// Sign of det[[1,1,1],[px,qx,rx],[py,qy,ry]]; Positive iff r is left of p->q.
Orientation orient(const Point& p, const Point& q, const Point& r);
Orientation orient(const RationalPoint& p, const RationalPoint& q,
                   const RationalPoint& r);

/// Planar point set in general position. Construction rejects collinear
/// triples and coordinates outside [-kMaxCoord, kMaxCoord].
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  Orientation orient(std::size_t a, std::size_t b, std::size_t c) const {
    return holesat::orient(points_[a], points_[b], points_[c]);
  }

  /// Strictly increasing x, and every triple (0,a,b) with 0<a<b positive.
  [[nodiscard]] bool is_canonical() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Returns the first collinear triple found, or an empty vector.
std::vector<std::size_t> find_collinear_triple(std::span<const Point> points);

/// Canonical labelling: the lexicographically smallest point first, then
/// the others in counterclockwise order around it (orientation comparator).
std::vector<std::size_t> canonical_order(const PointSet& s);

struct CanonicalForm {
  PointSet points;
  // labels[i] is the index in the input set of canonical point i.
  std::vector<std::size_t> labels;
  // True when the projective step was needed (coordinates differ from input).
  bool transformed = false;
};

/// Relabels (and, when needed, projectively transforms) a point set into
/// canonical form without changing its order type. The first point is the
/// lexicographically smallest one; the rest are sorted counterclockwise
/// around it. Throws GeometryError if the transformed coordinates cannot be
/// represented within kMaxCoord.
CanonicalForm canonicalize(const PointSet& s);

/// Projective normalization. Requires point 0 extremal and
/// points 1..n-1 sorted counterclockwise around it (all triples (0,a,b),
/// a<b, positive). Returns a rational point set with the same chirotope and
/// strictly increasing x-coordinates.
std::vector<RationalPoint> project_normalize(const PointSet& s);

}  // namespace holesat
