#include "holesat/holes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace holesat {

namespace {

bool strictly_inside(const PointSet& s, const IndexSet& hull_ccw, int p) {
  const std::size_t h = hull_ccw.size();
  if (h < 3) return false;
  for (std::size_t i = 0; i < h; ++i) {
    const int u = hull_ccw[i];
    const int v = hull_ccw[(i + 1) % h];
    if (p == u || p == v) return false;
    if (s.orient(u, v, p) != Orientation::Positive) return false;
  }
  return true;
}

bool segments_cross(const PointSet& s, int p1, int p2, int q1, int q2) {
  if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) return false;
  return s.orient(p1, p2, q1) != s.orient(p1, p2, q2) &&
         s.orient(q1, q2, p1) != s.orient(q1, q2, p2);
}

std::vector<std::pair<int, int>> hull_edges(const IndexSet& hull) {
  std::vector<std::pair<int, int>> edges;
  if (hull.size() == 2) {
    edges.emplace_back(hull[0], hull[1]);
  } else if (hull.size() >= 3) {
    for (std::size_t i = 0; i < hull.size(); ++i)
      edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
  }
  return edges;
}

bool overlaps(std::span<const int> x1, std::span<const int> x2) {
  for (int a : x1)
    if (std::find(x2.begin(), x2.end(), a) != x2.end()) return true;
  return false;
}

void check_indices(const PointSet& s, std::span<const int> x) {
  for (int i : x)
    if (i < 0 || static_cast<std::size_t>(i) >= s.size())
      throw std::out_of_range("point index " + std::to_string(i) + " out of range");
}

// Depth-first extension of sorted index sets, pruning prefixes that fail
// `keep`. Every subset of a hole (or gon) is again a hole (gon), so the
// pruning is exact.
template <typename Keep, typename Emit>
void extend_subsets(int n, int k, IndexSet& prefix, Keep&& keep, Emit&& emit) {
  if (static_cast<int>(prefix.size()) == k) {
    emit(prefix);
    return;
  }
  const int start = prefix.empty() ? 0 : prefix.back() + 1;
  const int remaining = k - static_cast<int>(prefix.size());
  for (int i = start; i + remaining <= n; ++i) {
    prefix.push_back(i);
    if (keep(prefix)) extend_subsets(n, k, prefix, keep, emit);
    prefix.pop_back();
  }
}

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

IndexSet convex_hull(const PointSet& s, std::span<const int> x) {
  check_indices(s, x);
  IndexSet pts(x.begin(), x.end());
  std::sort(pts.begin(), pts.end(), [&](int a, int b) { return s[a] < s[b]; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  // Andrew's monotone chain; collinear triples cannot occur.
  IndexSet hull(2 * pts.size());
  std::size_t k = 0;
  for (int p : pts) {
    while (k >= 2 && s.orient(hull[k - 2], hull[k - 1], p) != Orientation::Positive) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && s.orient(hull[k - 2], hull[k - 1], *it) != Orientation::Positive) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

bool is_gon(const PointSet& s, std::span<const int> x) {
  return convex_hull(s, x).size() == x.size();
}

bool is_hole(const PointSet& s, std::span<const int> x) {
  if (x.size() <= 2) {
    check_indices(s, x);
    return true;
  }
  const IndexSet hull = convex_hull(s, x);
  if (hull.size() != x.size()) return false;
  for (int p = 0; p < static_cast<int>(s.size()); ++p)
    if (strictly_inside(s, hull, p)) return false;
  return true;
}

std::vector<Hole> enumerate_holes(const PointSet& s, int k) {
  if (k < 2) throw std::invalid_argument("hole size must be at least 2");
  std::vector<Hole> holes;
  IndexSet prefix;
  extend_subsets(
      static_cast<int>(s.size()), k, prefix,
      [&](const IndexSet& x) { return x.size() < 3 || is_hole(s, x); },
      [&](const IndexSet& x) { holes.push_back(Hole{x, HoleKind::Hole}); });
  return holes;
}

std::vector<Hole> enumerate_gons(const PointSet& s, int k) {
  if (k < 3) throw std::invalid_argument("gon size must be at least 3");
  std::vector<Hole> gons;
  IndexSet prefix;
  extend_subsets(
      static_cast<int>(s.size()), k, prefix,
      [&](const IndexSet& x) { return x.size() < 4 || is_gon(s, x); },
      [&](const IndexSet& x) { gons.push_back(Hole{x, HoleKind::Gon}); });
  return gons;
}

std::size_t count_holes_by_triangles(const PointSet& s, int k) {
  const int n = static_cast<int>(s.size());
  if (k < 2) throw std::invalid_argument("hole size must be at least 2");
  if (k > n) return 0;
  if (k == 2) return static_cast<std::size_t>(n) * (n - 1) / 2;

  // empty[a][b][c]: no point strictly inside triangle abc (a<b<c).
  std::vector<char> empty(static_cast<std::size_t>(n) * n * n, 0);
  auto at = [n](int a, int b, int c) { return (static_cast<std::size_t>(a) * n + b) * n + c; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const Orientation o = s.orient(a, b, c);
        bool is_empty = true;
        for (int i = 0; i < n && is_empty; ++i) {
          if (i == a || i == b || i == c) continue;
          if (s.orient(a, b, i) == o && s.orient(b, c, i) == o && s.orient(c, a, i) == o)
            is_empty = false;
        }
        empty[at(a, b, c)] = is_empty;
      }

  std::size_t count = 0;
  IndexSet prefix;
  extend_subsets(
      n, k, prefix,
      [&](const IndexSet& x) {
        const std::size_t m = x.size();
        if (m < 3) return true;
        const int c = x[m - 1];
        for (std::size_t i = 0; i + 1 < m - 1; ++i)
          for (std::size_t j = i + 1; j < m - 1; ++j)
            if (!empty[at(x[i], x[j], c)]) return false;
        return true;
      },
      [&](const IndexSet&) { ++count; });
  return count;
}

std::optional<Separator> find_separator(const PointSet& s, std::span<const int> x1,
                                        std::span<const int> x2) {
  check_indices(s, x1);
  check_indices(s, x2);
  if (x1.empty() || x2.empty() || overlaps(x1, x2)) return std::nullopt;
  for (int a : x1) {
    for (int b : x2) {
      Orientation side = Orientation::Zero;
      bool ok = true;
      for (int x : x1) {
        if (x == a) continue;
        const Orientation o = s.orient(a, b, x);
        if (side == Orientation::Zero) side = o;
        if (o != side) {
          ok = false;
          break;
        }
      }
      for (int x : x2) {
        if (!ok) break;
        if (x == b) continue;
        const Orientation o = s.orient(a, b, x);
        if (side == Orientation::Zero) side = -o;
        if (o != -side) ok = false;
      }
      if (ok) {
        return Separator{a, b, side == Orientation::Zero ? Orientation::Negative : side};
      }
    }
  }
  return std::nullopt;
}

bool hulls_disjoint(const PointSet& s, std::span<const int> x1, std::span<const int> x2) {
  return find_separator(s, x1, x2).has_value();
}

bool hulls_intersect(const PointSet& s, std::span<const int> x1, std::span<const int> x2) {
  check_indices(s, x1);
  check_indices(s, x2);
  if (x1.empty() || x2.empty()) return false;
  if (overlaps(x1, x2)) return true;
  const IndexSet h1 = convex_hull(s, x1);
  const IndexSet h2 = convex_hull(s, x2);
  for (auto [p1, p2] : hull_edges(h1))
    for (auto [q1, q2] : hull_edges(h2))
      if (segments_cross(s, p1, p2, q1, q2)) return true;
  for (int p : h1)
    if (strictly_inside(s, h2, p)) return true;
  for (int q : h2)
    if (strictly_inside(s, h1, q)) return true;
  return false;
}

bool hulls_interior_disjoint(const PointSet& s, std::span<const int> x1,
                             std::span<const int> x2) {
  check_indices(s, x1);
  check_indices(s, x2);
  if (x1.size() < 3 || x2.size() < 3) return true;
  const IndexSet h1 = convex_hull(s, x1);
  const IndexSet h2 = convex_hull(s, x2);
  // Two convex polygons have disjoint interiors iff the line through some
  // edge of one of them has the other polygon weakly on its outer side.
  auto separates = [&](const IndexSet& poly, const IndexSet& other) {
    for (auto [u, v] : hull_edges(poly)) {
      bool outside = true;
      for (int q : other) {
        if (s.orient(u, v, q) == Orientation::Positive && q != u && q != v) {
          outside = false;
          break;
        }
      }
      if (outside) return true;
    }
    return false;
  };
  return separates(h1, h2) || separates(h2, h1);
}

bool holes_compatible(const PointSet& s, std::span<const int> x1, std::span<const int> x2,
                      DisjointMode mode) {
  return mode == DisjointMode::Disjoint ? hulls_disjoint(s, x1, x2)
                                        : hulls_interior_disjoint(s, x1, x2);
}

void for_each_disjoint_tuple(const PointSet& s, std::span<const int> sizes, DisjointMode mode,
                             const std::function<bool(std::span<const Hole* const>)>& visit) {
  if (sizes.empty()) return;
  for (int k : sizes) {
    if (k < 2) throw std::invalid_argument("hole sizes must be at least 2");
    if (mode == DisjointMode::InteriorDisjoint && k < 3)
      throw std::invalid_argument("interior-disjoint hole sizes must be at least 3");
  }
  std::vector<int> slots(sizes.begin(), sizes.end());
  std::sort(slots.begin(), slots.end());

  // All holes of the needed sizes, grouped by size in one list.
  std::vector<Hole> holes;
  std::map<int, std::pair<std::size_t, std::size_t>> range;
  for (int k : slots) {
    if (range.count(k)) continue;
    const std::size_t begin = holes.size();
    for (auto& h : enumerate_holes(s, k)) holes.push_back(std::move(h));
    range[k] = {begin, holes.size()};
  }
  const std::size_t total = holes.size();

  std::vector<const Hole*> chosen;
  if (slots.size() == 1) {
    auto [b, e] = range[slots[0]];
    for (std::size_t i = b; i < e; ++i) {
      chosen = {&holes[i]};
      if (!visit(chosen)) return;
    }
    return;
  }

  std::vector<Bitset> compatible(total, Bitset(total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j)
      if (holes_compatible(s, holes[i].indices, holes[j].indices, mode)) {
        compatible[i].set(j);
        compatible[j].set(i);
      }

  std::vector<std::size_t> picked;
  bool stop = false;
  std::function<void(std::size_t, const Bitset&)> recurse = [&](std::size_t slot,
                                                                const Bitset& allowed) {
    if (stop) return;
    if (slot == slots.size()) {
      chosen.clear();
      for (auto i : picked) chosen.push_back(&holes[i]);
      if (!visit(chosen)) stop = true;
      return;
    }
    auto [b, e] = range[slots[slot]];
    if (slot > 0 && slots[slot] == slots[slot - 1]) b = picked.back() + 1;
    for (std::size_t i = b; i < e && !stop; ++i) {
      if (!allowed.test(i)) continue;
      Bitset next = allowed;
      auto& w = next.words();
      const auto& c = compatible[i].words();
      for (std::size_t t = 0; t < w.size(); ++t) w[t] &= c[t];
      picked.push_back(i);
      recurse(slot + 1, next);
      picked.pop_back();
    }
  };
  Bitset all(total);
  for (std::size_t i = 0; i < total; ++i) all.set(i);
  recurse(0, all);
}

std::optional<std::vector<Hole>> find_disjoint_tuple(const PointSet& s,
                                                     std::span<const int> sizes,
                                                     DisjointMode mode) {
  std::optional<std::vector<Hole>> found;
  for_each_disjoint_tuple(s, sizes, mode, [&](std::span<const Hole* const> tuple) {
    std::vector<Hole> out;
    for (const Hole* h : tuple) out.push_back(*h);
    found = std::move(out);
    return false;
  });
  return found;
}

std::uint64_t count_disjoint_tuples(const PointSet& s, std::span<const int> sizes,
                                    DisjointMode mode) {
  std::uint64_t count = 0;
  for_each_disjoint_tuple(s, sizes, mode, [&](std::span<const Hole* const>) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace holesat
