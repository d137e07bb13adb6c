#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "holesat/holes.hpp"
#include "holesat/signotope.hpp"
#include "support.hpp"

using namespace holesat;

namespace {

// Independent rational orientation used as oracle for the transformed sets.
int rational_sign(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
  const Rational d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

}  // namespace

TEST_CASE("orient on small examples") {
  CHECK(orient(Point{0, 0}, Point{1, 0}, Point{0, 1}) == Orientation::Positive);
  CHECK(orient(Point{0, 0}, Point{1, 0}, Point{2, 0}) == Orientation::Zero);
  CHECK(orient(Point{0, 0}, Point{0, 1}, Point{1, 0}) == Orientation::Negative);
}

TEST_CASE("orient is exact near the coordinate bound") {
  const Coord m = kMaxCoord;
  CHECK(orient(Point{-m, -m}, Point{m, m}, Point{m - 1, m}) == Orientation::Positive);
  CHECK(orient(Point{-m, -m}, Point{m, m}, Point{m, m - 1}) == Orientation::Negative);
  CHECK(orient(Point{-m, -m}, Point{0, 0}, Point{m, m}) == Orientation::Zero);
}

TEST_CASE("orient antisymmetry and cyclic symmetry on random triples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> c(-1'000'000, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const Point p{c(rng), c(rng)}, q{c(rng), c(rng)}, r{c(rng), c(rng)};
    const Orientation o = orient(p, q, r);
    CHECK(orient(q, p, r) == -o);
    CHECK(orient(p, r, q) == -o);
    CHECK(orient(r, q, p) == -o);
    CHECK(orient(q, r, p) == o);
    CHECK(orient(r, p, q) == o);
  }
}

TEST_CASE("PointSet rejects degenerate input") {
  CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {2, 2}}), GeometryError);
  CHECK_THROWS_AS(PointSet({{0, 0}, {0, 0}, {2, 3}}), GeometryError);
  CHECK_THROWS_AS(PointSet({{0, 0}, {kMaxCoord + 1, 0}, {2, 3}}), GeometryError);
  CHECK_NOTHROW(PointSet({{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("already canonical set is left alone") {
  const PointSet s({{0, 0}, {3, -2}, {5, 1}, {6, 7}});
  REQUIRE(s.is_canonical());
  const CanonicalForm c = canonicalize(s);
  CHECK_FALSE(c.transformed);
  CHECK(c.points == s);
  CHECK(c.labels == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("canonicalize keeps the order type of the 16-point witness") {
  const PointSet s = witness("fig2-n16");
  const CanonicalForm c = canonicalize(s);
  REQUIRE(c.points.size() == s.size());
  CHECK(c.points.is_canonical());
  const auto n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t d = b + 1; d < n; ++d)
        REQUIRE(c.points.orient(a, b, d) == s.orient(c.labels[a], c.labels[b], c.labels[d]));
}

TEST_CASE("canonicalize on random sets satisfies the canonical invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet s = testing::random_point_set(rng, 8, 200);
    const CanonicalForm c = canonicalize(s);
    const auto& p = c.points;
    // Oracle: direct check of the three invariants.
    for (std::size_t i = 1; i < p.size(); ++i) REQUIRE(p[i - 1].x < p[i].x);
    for (std::size_t a = 1; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) REQUIRE(p.orient(0, a, b) == Orientation::Positive);
    // Point 0 is a hull vertex.
    std::vector<int> all(p.size());
    std::iota(all.begin(), all.end(), 0);
    const auto hull = convex_hull(p, all);
    REQUIRE(std::find(hull.begin(), hull.end(), 0) != hull.end());
    // Same order type under the relabelling.
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b)
        for (std::size_t d = b + 1; d < p.size(); ++d)
          REQUIRE(p.orient(a, b, d) == s.orient(c.labels[a], c.labels[b], c.labels[d]));
  }
}

TEST_CASE("canonicalize is idempotent up to chirotope") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet s = testing::random_point_set(rng, 9, 100);
    const CanonicalForm once = canonicalize(s);
    const CanonicalForm twice = canonicalize(once.points);
    CHECK(chirotope(once.points) == chirotope(twice.points));
  }
}

TEST_CASE("canonicalize handles points sharing the minimum x") {
  const PointSet s({{0, 0}, {0, 5}, {3, -3}, {4, 1}, {7, -1}});
  const CanonicalForm c = canonicalize(s);
  CHECK(c.transformed);
  CHECK(c.points.is_canonical());
  CHECK(chirotope(c.points) == canonical_chirotope(s));
}

TEST_CASE("project_normalize preserves every orientation") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet raw = testing::random_point_set(rng, 7, 50);
    // Relabel into the required precondition without coordinate changes.
    const auto order = canonical_order(raw);
    std::vector<Point> pts;
    for (auto i : order) pts.push_back(raw[i]);
    const PointSet s(pts);
    const auto q = project_normalize(s);
    REQUIRE(q.size() == s.size());
    for (std::size_t i = 1; i < q.size(); ++i) REQUIRE(q[i - 1].x < q[i].x);
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b)
        for (std::size_t d = b + 1; d < q.size(); ++d)
          REQUIRE(rational_sign(q[a], q[b], q[d]) == static_cast<int>(s.orient(a, b, d)));
  }
}

TEST_CASE("project_normalize on a triangle and a fan") {
  const PointSet tri({{0, 0}, {4, 1}, {1, 3}});
  const auto t = project_normalize(tri);
  CHECK(orient(t[0], t[1], t[2]) == Orientation::Positive);

  // Fan around the origin, all sorted counterclockwise, x not monotone.
  const PointSet fan({{0, 0}, {5, -4}, {6, 1}, {3, 5}, {-1, 7}});
  REQUIRE(!fan.is_canonical());
  const auto f = project_normalize(fan);
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i - 1].x < f[i].x);
}

TEST_CASE("project_normalize rejects unsorted input") {
  const PointSet s({{0, 0}, {3, 5}, {5, -4}});
  CHECK_THROWS_AS(project_normalize(s), GeometryError);
}
