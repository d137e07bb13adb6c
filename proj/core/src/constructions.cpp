#include <cmath>
#include <numbers>
#include <stdexcept>

#include "holesat/holes.hpp"

namespace holesat {

namespace {

Point round_point(double x, double y) {
  return Point{static_cast<Coord>(std::llround(x)), static_cast<Coord>(std::llround(y))};
}

bool general_position(const std::vector<Point>& pts) {
  return find_collinear_triple(pts).empty();
}

// Inner point i must lie inside every triangle spanned by its edge
// (outer i, outer i+1) and any other point of the set.
bool double_circle_valid(const PointSet& s, int m) {
  for (int i = 0; i < m; ++i) {
    const int a = i;
    const int b = (i + 1) % m;
    const int q = m + i;
    for (int x = 0; x < 2 * m; ++x) {
      if (x == a || x == b || x == q) continue;
      const Orientation o = s.orient(a, b, x);
      if (s.orient(a, b, q) != o || s.orient(b, x, q) != o || s.orient(x, a, q) != o)
        return false;
    }
  }
  return true;
}

bool two_ring_valid(const PointSet& s, int m) {
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        const IndexSet t{a, b, c};
        if (is_hole(s, t)) return false;
      }
  return true;
}

}  // namespace

PointSet generate_double_circle(int n, double radius) {
  if (n < 6 || n % 2 != 0)
    throw std::invalid_argument("double circle needs an even number of points >= 6");
  const int m = n / 2;
  const double pi = std::numbers::pi;
  for (double scale : {1.0, 1.0007, 1.0131, 1.0473}) {
    const double r = radius * scale;
    for (double depth : {0.02, 0.01, 0.005, 0.002, 0.001}) {
      std::vector<Point> pts;
      for (int i = 0; i < m; ++i) {
        const double t = pi / 2 + 2 * pi * i / m;
        pts.push_back(round_point(r * std::cos(t), r * std::sin(t)));
      }
      const double inner = r * std::cos(pi / m) * (1.0 - depth);
      for (int i = 0; i < m; ++i) {
        const double t = pi / 2 + 2 * pi * (i + 0.5) / m;
        pts.push_back(round_point(inner * std::cos(t), inner * std::sin(t)));
      }
      if (!general_position(pts)) continue;
      PointSet s(std::move(pts));
      if (double_circle_valid(s, m)) return s;
    }
  }
  throw GeometryError("double circle: rounding broke the construction for n=" +
                      std::to_string(n));
}

PointSet generate_two_ring(int n, double radius) {
  if (n < 10 || n % 2 != 0)
    throw std::invalid_argument("two-ring construction needs an even number of points >= 10");
  const int m = n / 2;
  const double pi = std::numbers::pi;
  for (double scale : {1.0, 1.0007, 1.0131, 1.0473}) {
    const double r = radius * scale;
    for (double shrink : {0.02, 0.01, 0.005, 0.002}) {
      // Rotation keeps pairs of antipodal inner/outer points off a common
      // line through the centre; it must stay small against the shrink.
      const double twist = (m % 2 == 0) ? shrink / 10 : 0.0;
      std::vector<Point> pts;
      for (int i = 0; i < m; ++i) {
        const double t = pi / 2 + 2 * pi * i / m;
        pts.push_back(round_point(r * std::cos(t), r * std::sin(t)));
      }
      const double inner = r * (1.0 - shrink);
      for (int i = 0; i < m; ++i) {
        const double t = pi / 2 + 2 * pi * i / m + twist;
        pts.push_back(round_point(inner * std::cos(t), inner * std::sin(t)));
      }
      if (!general_position(pts)) continue;
      PointSet s(std::move(pts));
      if (two_ring_valid(s, m)) return s;
    }
  }
  throw GeometryError("two-ring: rounding broke the construction for n=" + std::to_string(n));
}

std::vector<std::string> witness_names() { return {"fig2-n16", "fig4-n21", "fig6-n14"}; }

PointSet witness(const std::string& name) {
  // 16 points without two disjoint 5-holes.
  static const std::vector<Point> fig2 = {
      {0, 0},     {0, 270},   {280, 0},   {280, 270}, {18, 127},  {18, 143},
      {262, 127}, {262, 143}, {68, 117},  {68, 153},  {212, 117}, {212, 153},
      {118, 85},  {118, 185}, {162, 85},  {162, 185},
  };
  // 21 points without three pairwise disjoint 5-holes.
  static const std::vector<Point> fig4 = {
      {0, 161014},      {437034, 595949}, {326347, 343801}, {284425, 294548},
      {368806, 311583}, {359850, 306967}, {303825, 276373}, {295136, 271265},
      {384946, 285229}, {410465, 282863}, {385025, 275150}, {280383, 244110},
      {288858, 238662}, {432159, 221931}, {383508, 211334}, {343366, 205440},
      {352134, 200469}, {273710, 191231}, {383027, 201270}, {337326, 179552},
      {595182, 0},
  };
  // 14 points without two interior-disjoint 5-holes.
  static const std::vector<Point> fig6 = {
      {142, 0},  {0, 100}, {29, 105}, {65, 73},  {63, 81},  {49, 111},  {88, 58},
      {80, 79},  {98, 58}, {107, 65}, {105, 72}, {134, 35}, {131, 54}, {128, 142},
  };
  if (name == "fig2-n16") return PointSet(fig2);
  if (name == "fig4-n21") return PointSet(fig4);
  if (name == "fig6-n14") return PointSet(fig6);
  throw std::invalid_argument("unknown witness '" + name + "'");
}

}  // namespace holesat
