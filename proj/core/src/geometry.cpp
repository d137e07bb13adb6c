#include "holesat/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "holesat/signotope.hpp"

namespace holesat {

namespace {

using BigInt = boost::multiprecision::cpp_int;
__extension__ typedef __int128 Int128;

Orientation sign_of(Int128 v) {
  if (v > 0) return Orientation::Positive;
  if (v < 0) return Orientation::Negative;
  return Orientation::Zero;
}

template <typename Number>
Orientation sign_of_number(const Number& v) {
  if (v > 0) return Orientation::Positive;
  if (v < 0) return Orientation::Negative;
  return Orientation::Zero;
}

std::string describe(const Point& p) {
  std::ostringstream os;
  os << '(' << p.x << ',' << p.y << ')';
  return os.str();
}

// Floor of x + 1/2 for a rational x.
BigInt round_nearest(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x) * 2 +
               boost::multiprecision::denominator(x);
  BigInt den = boost::multiprecision::denominator(x) * 2;
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

Rational floor_rational(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return Rational(q);
}

// Image of `ordered` (point 0 extremal, the rest counterclockwise around it)
// under an orientation-preserving projective map that sends the direction
// `u` (with u . (p - p0) > 0 for all p != p0) to the positive x-axis and
// makes x-coordinates increase in the angular order around p0. Point 0 is
// placed far above and to the left of everything else.
std::vector<RationalPoint> projective_image(std::span<const Point> ordered,
                                            Int128 ux, Int128 uy) {
  const std::size_t n = ordered.size();
  std::vector<RationalPoint> image(n);
  if (n == 0) return image;
  const Point& origin = ordered[0];

  for (std::size_t i = 1; i < n; ++i) {
    const Int128 dx = static_cast<Int128>(ordered[i].x) - origin.x;
    const Int128 dy = static_cast<Int128>(ordered[i].y) - origin.y;
    // (dx,dy) -> (s,t) has matrix rows u and rot90(u): determinant |u|^2.
    const BigInt s = BigInt(ux) * BigInt(dx) + BigInt(uy) * BigInt(dy);
    const BigInt t = BigInt(ux) * BigInt(dy) - BigInt(uy) * BigInt(dx);
    if (s <= 0) {
      throw GeometryError("projective normalization: point " + describe(ordered[i]) +
                          " is not strictly on the positive side of the base point");
    }
    // (s,t) -> (t/s, 1/s) preserves orientation for s > 0.
    image[i].x = Rational(t, s);
    image[i].y = Rational(BigInt(1), s);
  }

  if (n == 1) return image;

  Rational min_x = image[1].x;
  Rational max_y = image[1].y;
  for (std::size_t i = 2; i < n; ++i) {
    min_x = std::min(min_x, image[i].x);
    max_y = std::max(max_y, image[i].y);
  }
  image[0].x = floor_rational(min_x) - 1;
  // Any sufficiently high base point works; the coefficient of y in
  // orient(base, a, b) is x_b - x_a > 0.
  Rational height = max_y + 1;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    image[0].y = height;
    bool ok = true;
    for (std::size_t a = 1; a < n && ok; ++a) {
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        ok = orient(image[0], image[a], image[b]) == Orientation::Positive;
      }
    }
    if (ok) return image;
    height *= 2;
  }
  throw GeometryError("projective normalization: failed to place base point");
}

bool same_chirotope(std::span<const RationalPoint> image,
                    std::span<const Point> ordered) {
  const std::size_t n = ordered.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (orient(image[a], image[b], image[c]) !=
            orient(ordered[a], ordered[b], ordered[c]))
          return false;
  return true;
}

// Scales and rounds rational coordinates to integers, accepting the first
// scale at which the orientation of every triple and the strict x-order
// survive.
std::optional<std::vector<Point>> integerize(std::span<const RationalPoint> image,
                                             std::span<const Point> ordered) {
  const std::size_t n = image.size();
  Rational min_x = image[0].x, max_x = image[0].x;
  Rational min_y = image[0].y, max_y = image[0].y;
  for (const auto& p : image) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  Rational span_x = max_x - min_x;
  Rational span_y = max_y - min_y;
  if (span_x == 0) span_x = 1;
  if (span_y == 0) span_y = 1;

  // Translation and positive axis scalings preserve orientation.
  std::vector<RationalPoint> unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    unit[i].x = (image[i].x - min_x) / span_x;
    unit[i].y = (image[i].y - min_y) / span_y;
  }

  for (int bits = 8; bits <= 60; bits += 4) {
    const Rational scale(BigInt(1) << bits);
    std::vector<Point> rounded(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const BigInt x = round_nearest(unit[i].x * scale);
      const BigInt y = round_nearest(unit[i].y * scale);
      if (x > kMaxCoord || y > kMaxCoord) {
        ok = false;
        break;
      }
      rounded[i] = Point{static_cast<Coord>(x), static_cast<Coord>(y)};
      if (i > 0 && rounded[i].x <= rounded[i - 1].x) ok = false;
    }
    if (!ok) continue;
    bool same = true;
    for (std::size_t a = 0; a < n && same; ++a)
      for (std::size_t b = a + 1; b < n && same; ++b)
        for (std::size_t c = b + 1; c < n && same; ++c)
          same = orient(rounded[a], rounded[b], rounded[c]) ==
                 orient(ordered[a], ordered[b], ordered[c]);
    if (same) return rounded;
  }
  return std::nullopt;
}

}  // namespace

Orientation orient(const Point& p, const Point& q, const Point& r) {
  const Int128 qx = static_cast<Int128>(q.x) - p.x;
  const Int128 qy = static_cast<Int128>(q.y) - p.y;
  const Int128 rx = static_cast<Int128>(r.x) - p.x;
  const Int128 ry = static_cast<Int128>(r.y) - p.y;
  return sign_of(qx * ry - qy * rx);
}

Orientation orient(const RationalPoint& p, const RationalPoint& q,
                   const RationalPoint& r) {
  const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sign_of_number(det);
}

std::vector<std::size_t> find_collinear_triple(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (orient(points[a], points[b], points[c]) == Orientation::Zero)
          return {a, b, c};
  return {};
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.x < -kMaxCoord || p.x > kMaxCoord || p.y < -kMaxCoord || p.y > kMaxCoord)
      throw GeometryError("coordinate out of range: " + describe(p));
  }
  if (auto t = find_collinear_triple(points_); !t.empty()) {
    throw GeometryError("points not in general position: " + describe(points_[t[0]]) +
                        ", " + describe(points_[t[1]]) + ", " +
                        describe(points_[t[2]]) + " are collinear");
  }
}

bool PointSet::is_canonical() const {
  for (std::size_t i = 1; i < size(); ++i)
    if (points_[i].x <= points_[i - 1].x) return false;
  for (std::size_t a = 1; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (orient(0, a, b) != Orientation::Positive) return false;
  return true;
}

std::vector<std::size_t> canonical_order(const PointSet& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (order.empty()) return order;
  const auto first = std::min_element(order.begin(), order.end(),
                                      [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
  std::iter_swap(order.begin(), first);
  const Point base = s[order.front()];
  // All other points lie in the half-open half-plane right of (or straight
  // above) the base point, so orientation is a strict weak order here.
  std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
    return orient(base, s[a], s[b]) == Orientation::Positive;
  });
  return order;
}

CanonicalForm canonicalize(const PointSet& s) {
  CanonicalForm result;
  result.labels = canonical_order(s);
  std::vector<Point> ordered;
  ordered.reserve(s.size());
  for (auto i : result.labels) ordered.push_back(s[i]);

  bool increasing = true;
  for (std::size_t i = 1; i < ordered.size(); ++i)
    if (ordered[i].x <= ordered[i - 1].x) increasing = false;
  if (increasing) {
    result.points = PointSet(std::move(ordered));
    return result;
  }

  // Direction u with u . (p - base) > 0 for every other point. The base is
  // the lexicographic minimum, so u = (1,0) works unless some point sits
  // straight above it; then tilt to u = (k,1).
  const Point base = ordered.front();
  Int128 k = 0;
  bool vertical = false;
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    const Int128 dx = static_cast<Int128>(ordered[i].x) - base.x;
    const Int128 dy = static_cast<Int128>(ordered[i].y) - base.y;
    if (dx == 0) {
      vertical = true;
    } else {
      // Need k*dx + dy > 0, i.e. k > -dy/dx.
      const Int128 num = -dy;
      Int128 floor_div = num / dx;
      if (num < 0 && num % dx != 0) --floor_div;
      k = std::max(k, floor_div + 1);
    }
  }
  const Int128 ux = vertical ? std::max<Int128>(k, 1) : 1;
  const Int128 uy = vertical ? 1 : 0;

  const auto image = projective_image(ordered, ux, uy);
  if (!same_chirotope(image, ordered))
    throw std::logic_error("canonicalize: projective image changed the order type");
  auto rounded = integerize(image, ordered);
  if (!rounded)
    throw GeometryError("canonicalize: canonical coordinates exceed the 64-bit range");
  result.points = PointSet(std::move(*rounded));
  result.transformed = true;
  return result;
}

std::vector<RationalPoint> project_normalize(const PointSet& s) {
  const std::size_t n = s.size();
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (s.orient(0, a, b) != Orientation::Positive)
        throw GeometryError(
            "project_normalize: points must be sorted counterclockwise around an "
            "extremal first point");

  std::vector<Point> ordered(s.begin(), s.end());
  Int128 ux = 1, uy = 0;
  if (n == 2) {
    ux = static_cast<Int128>(s[1].x) - s[0].x;
    uy = static_cast<Int128>(s[1].y) - s[0].y;
  } else if (n >= 3) {
    // u . d = cross(v_first, d) + cross(d, v_last), positive on the closed
    // cone spanned by the first and last direction.
    const Int128 fx = static_cast<Int128>(s[1].x) - s[0].x;
    const Int128 fy = static_cast<Int128>(s[1].y) - s[0].y;
    const Int128 lx = static_cast<Int128>(s[n - 1].x) - s[0].x;
    const Int128 ly = static_cast<Int128>(s[n - 1].y) - s[0].y;
    ux = ly - fy;
    uy = fx - lx;
  }
  auto image = projective_image(ordered, ux, uy);
  if (!same_chirotope(image, ordered))
    throw std::logic_error("project_normalize: order type not preserved");
  for (std::size_t i = 1; i < n; ++i)
    if (image[i].x <= image[i - 1].x)
      throw std::logic_error("project_normalize: x-coordinates not increasing");
  return image;
}

}  // namespace holesat
