#include "holesat/signotope.hpp"

#include <stdexcept>
#include <string>

namespace holesat {

Signotope::Signotope(int n) : n_(n) {
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("signotope size out of range: " + std::to_string(n));
  signs_.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) set(a, b, c, Orientation::Positive);
}

void Signotope::set(int a, int b, int c, Orientation o) {
  const auto v = static_cast<std::int8_t>(o);
  signs_[index(a, b, c)] = v;
  signs_[index(b, c, a)] = v;
  signs_[index(c, a, b)] = v;
  signs_[index(b, a, c)] = static_cast<std::int8_t>(-v);
  signs_[index(a, c, b)] = static_cast<std::int8_t>(-v);
  signs_[index(c, b, a)] = static_cast<std::int8_t>(-v);
}

Signotope chirotope(const PointSet& s) {
  Signotope sig(static_cast<int>(s.size()));
  const int n = sig.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) sig.set(a, b, c, s.orient(a, b, c));
  return sig;
}

Signotope canonical_chirotope(const PointSet& s) {
  const auto labels = canonical_order(s);
  Signotope sig(static_cast<int>(s.size()));
  const int n = sig.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        sig.set(a, b, c, s.orient(labels[a], labels[b], labels[c]));
  return sig;
}

std::vector<std::array<int, 4>> check_signotope(const Signotope& sig) {
  std::vector<std::array<int, 4>> violations;
  const int n = sig.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const Orientation seq[4] = {sig(a, b, c), sig(a, b, d), sig(a, c, d),
                                      sig(b, c, d)};
          int changes = 0;
          for (int i = 1; i < 4; ++i) changes += seq[i] != seq[i - 1];
          if (changes > 1) violations.push_back({a, b, c, d});
        }
  return violations;
}

bool in_triangle(const Signotope& sig, int i, int a, int b, int c) {
  if (i == a || i == b || i == c) return false;
  const Orientation o = sig(a, b, c);
  return sig(a, b, i) == o && sig(b, c, i) == o && sig(c, a, i) == o;
}

bool empty_triangle(const Signotope& sig, int a, int b, int c) {
  for (int i = 0; i < sig.size(); ++i)
    if (in_triangle(sig, i, a, b, c)) return false;
  return true;
}

bool in_convex_position(const Signotope& sig, std::span<const int> x) {
  const std::size_t k = x.size();
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        for (std::size_t c = b + 1; c < k; ++c) {
          if (p == a || p == b || p == c) continue;
          if (in_triangle(sig, x[p], x[a], x[b], x[c])) return false;
        }
  return true;
}

bool is_abstract_hole(const Signotope& sig, std::span<const int> x) {
  const std::size_t k = x.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c)
        if (!empty_triangle(sig, x[a], x[b], x[c])) return false;
  return true;
}

}  // namespace holesat
