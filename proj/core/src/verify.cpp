#include "holesat/verify.hpp"

#include <algorithm>
#include <sstream>

namespace holesat {

namespace {

std::string format_set(std::span<const int> x) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i] + 1;
  os << '}';
  return os.str();
}

bool shares_point(std::span<const int> x1, std::span<const int> x2) {
  for (int v : x1)
    if (std::find(x2.begin(), x2.end(), v) != x2.end()) return true;
  return false;
}

// x1 \ {a,b} all on side `left` of a->b and x2 \ {a,b} all on the other.
bool split_by(const Signotope& sig, int a, int b, std::span<const int> x1,
              std::span<const int> x2, bool left) {
  for (int c : x1)
    if (c != a && c != b && sig.positive(a, b, c) != left) return false;
  for (int c : x2)
    if (c != a && c != b && sig.positive(a, b, c) == left) return false;
  return true;
}

}  // namespace

std::vector<bool> assignment_from_literals(std::span<const int> literals, int num_vars) {
  std::vector<bool> a(static_cast<std::size_t>(num_vars) + 1, false);
  for (int lit : literals) {
    const int v = lit > 0 ? lit : -lit;
    if (v == 0) continue;
    if (v > num_vars) throw std::out_of_range("model literal " + std::to_string(lit) + " exceeds variable count");
    a[static_cast<std::size_t>(v)] = lit > 0;
  }
  return a;
}

Signotope decode_model(const std::vector<bool>& assignment, const VarRegistry& registry,
                       const HoleProblem& problem) {
  if (assignment.size() < static_cast<std::size_t>(registry.size()) + 1)
    throw DecodeError("model does not cover every variable");
  Signotope sig(problem.n);
  for (int a = 0; a < problem.n; ++a)
    for (int b = a + 1; b < problem.n; ++b)
      for (int c = b + 1; c < problem.n; ++c) {
        const bool v = assignment[static_cast<std::size_t>(registry.id(VarTag::orientation(a, b, c)))];
        sig.set(a, b, c, v ? Orientation::Positive : Orientation::Negative);
        if (problem.orientation != OrientationEncoding::PaperFaithful) continue;
        const int perm[6][3] = {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}};
        for (int p = 0; p < 6; ++p) {
          const bool w = assignment[static_cast<std::size_t>(
              registry.id(VarTag::orientation(perm[p][0], perm[p][1], perm[p][2])))];
          if (w != (p < 3 ? v : !v))
            throw DecodeError("orientation variables of triple " + format_set(perm[0]) +
                              " disagree");
        }
      }
  return sig;
}

std::vector<IndexSet> abstract_holes(const Signotope& sig, int k) {
  std::vector<IndexSet> out;
  const int n = sig.size();
  if (k < 0 || k > n) return out;
  IndexSet x;
  // Subsets of holes are holes, so prefixes that fail are pruned.
  auto extend = [&](auto&& self, int next) -> void {
    if (static_cast<int>(x.size()) == k) {
      out.push_back(x);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(x.size())); ++v) {
      x.push_back(v);
      bool ok = true;
      const int m = static_cast<int>(x.size());
      for (int i = 0; i + 1 < m - 1 && ok; ++i)
        for (int j = i + 1; j < m - 1 && ok; ++j) ok = empty_triangle(sig, x[i], x[j], v);
      if (ok) self(self, v + 1);
      x.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

bool abstractly_separated(const Signotope& sig, std::span<const int> x1, std::span<const int> x2,
                          bool through_members) {
  if (through_members) {
    if (shares_point(x1, x2)) return false;
    for (int a : x1)
      for (int b : x2)
        if (split_by(sig, a, b, x1, x2, true) || split_by(sig, a, b, x1, x2, false)) return true;
    return false;
  }
  const int n = sig.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && split_by(sig, a, b, x1, x2, true)) return true;
  return false;
}

VerifyResult verify_model(const Signotope& sig, const HoleProblem& problem) {
  VerifyResult r;
  if (sig.size() != problem.n) {
    r.detail = "signotope has " + std::to_string(sig.size()) + " points, problem expects " +
               std::to_string(problem.n);
    return r;
  }
  if (auto bad = check_signotope(sig); !bad.empty()) {
    const auto& q = bad.front();
    r.detail = "signotope axioms violated on " + format_set(q);
    r.witness.emplace_back(q.begin(), q.end());
    return r;
  }

  switch (problem.mode) {
    case ProblemMode::TwoDisjointHoles:
    case ProblemMode::TwoInteriorDisjointHoles: {
      const bool strict = problem.mode == ProblemMode::TwoDisjointHoles;
      const auto h1 = abstract_holes(sig, problem.k1);
      const auto h2 = problem.k2 == problem.k1 ? h1 : abstract_holes(sig, problem.k2);
      for (const auto& x1 : h1)
        for (const auto& x2 : h2)
          if (abstractly_separated(sig, x1, x2, strict)) {
            r.detail = std::string(strict ? "disjoint" : "interior-disjoint") + " holes " +
                       format_set(x1) + " and " + format_set(x2);
            r.witness = {x1, x2};
            return r;
          }
      r.passed = true;
      r.detail = "no " + std::string(strict ? "disjoint" : "interior-disjoint") + " (" +
                 std::to_string(problem.k1) + "," + std::to_string(problem.k2) + ") holes";
      return r;
    }
    case ProblemMode::ForbidHole: {
      const auto holes = abstract_holes(sig, problem.k);
      if (!holes.empty()) {
        r.detail = std::to_string(problem.k) + "-hole " + format_set(holes.front());
        r.witness = {holes.front()};
        return r;
      }
      r.passed = true;
      r.detail = "no " + std::to_string(problem.k) + "-hole";
      return r;
    }
    case ProblemMode::ForbidGon: {
      const int n = problem.n;
      const int k = problem.k;
      IndexSet x(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) x[i] = i;
      while (true) {
        if (in_convex_position(sig, x)) {
          r.detail = std::to_string(k) + "-gon " + format_set(x);
          r.witness = {x};
          return r;
        }
        int i = k - 1;
        while (i >= 0 && x[i] == n - k + i) --i;
        if (i < 0) break;
        ++x[i];
        for (int j = i + 1; j < k; ++j) x[j] = x[j - 1] + 1;
      }
      r.passed = true;
      r.detail = "no " + std::to_string(k) + "-gon";
      return r;
    }
    case ProblemMode::CountHoles: {
      const auto holes = abstract_holes(sig, problem.k);
      const auto count = static_cast<int>(holes.size());
      r.detail = std::to_string(count) + " " + std::to_string(problem.k) + "-holes (threshold " +
                 std::to_string(problem.threshold) + ")";
      if (count >= problem.threshold) {
        r.witness = holes;
        return r;
      }
      r.passed = true;
      return r;
    }
  }
  return r;
}

}  // namespace holesat
