#include "holesat/encoder.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holesat {

namespace {

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> x(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) x[i] = i;
  while (true) {
    fn(std::span<const int>(x));
    int i = k - 1;
    while (i >= 0 && x[i] == n - k + i) --i;
    if (i < 0) return;
    ++x[i];
    for (int j = i + 1; j < k; ++j) x[j] = x[j - 1] + 1;
  }
}

bool contains(std::span<const int> x, int v) { return std::find(x.begin(), x.end(), v) != x.end(); }

bool hole_mode(ProblemMode m) { return m != ProblemMode::ForbidGon; }

// Which auxiliary families a problem needs.
struct Needs {
  bool bounding = false;
  bool gon4 = false;
  bool inside = false;
  bool hole3 = false;
};

Needs needs_of(const HoleProblem& p) {
  Needs need;
  if (p.mode == ProblemMode::ForbidGon) {
    need.gon4 = true;
  } else {
    int largest = p.disjoint_mode() ? std::max(p.k1, p.k2) : p.k;
    need.hole3 = largest >= 3;
    need.inside = need.hole3;
    need.gon4 = largest >= 4 && !p.simplified_holes;
  }
  need.bounding = need.gon4 || need.inside;
  return need;
}

// Orientation literals of all ordered triples, looked up once.
class OrientationTable {
 public:
  OrientationTable(const HoleProblem& p, const VarRegistry& reg) : n_(p.n) {
    lits_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (a != b && b != c && a != c) lits_[idx(a, b, c)] = orientation_literal(p, reg, a, b, c);
  }
  int operator()(int a, int b, int c) const { return lits_[idx(a, b, c)]; }

 private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }
  int n_;
  std::vector<int> lits_;
};

// out <-> AND(terms), as one binary clause per term plus one long clause.
void define_and(ClauseGroup& g, int out, std::span<const int> terms) {
  std::vector<int> back{out};
  for (int t : terms) {
    g.add({-out, t});
    back.push_back(-t);
  }
  g.add(back);
}

// Variable standing for "X is a hole" (|X| >= 3); 0 for |X| == 2 where the
// property is constant true.
int hole_literal(const VarRegistry& reg, std::span<const int> x) {
  if (x.size() <= 2) return 0;
  return reg.id(VarTag::hole(x));
}

// Variable standing for "X is a gon" (|X| >= 4).
int gon_literal(const VarRegistry& reg, std::span<const int> x) {
  return reg.id(VarTag::gon(x));
}

// Variables counted by the forbid and cardinality families.
std::vector<int> target_variables(const HoleProblem& p, const VarRegistry& reg) {
  std::vector<int> vars;
  for_each_subset(p.n, p.k, [&](std::span<const int> x) {
    vars.push_back(p.mode == ProblemMode::ForbidGon ? gon_literal(reg, x) : hole_literal(reg, x));
  });
  return vars;
}

std::vector<int> lr_sizes(const HoleProblem& p) {
  std::vector<int> s{p.k1, p.k2};
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::string_view mode_name(ProblemMode mode) {
  switch (mode) {
    case ProblemMode::TwoDisjointHoles: return "two-disjoint-holes";
    case ProblemMode::TwoInteriorDisjointHoles: return "two-interior-disjoint-holes";
    case ProblemMode::ForbidHole: return "forbid-hole";
    case ProblemMode::ForbidGon: return "forbid-gon";
    case ProblemMode::CountHoles: return "count-holes";
  }
  return "?";
}

ProblemMode parse_mode(std::string_view name) {
  for (auto m : {ProblemMode::TwoDisjointHoles, ProblemMode::TwoInteriorDisjointHoles,
                 ProblemMode::ForbidHole, ProblemMode::ForbidGon, ProblemMode::CountHoles})
    if (mode_name(m) == name) return m;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

void HoleProblem::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (n < 3 || n > Signotope::kMaxPoints) fail("n must be between 3 and 64");
  switch (mode) {
    case ProblemMode::TwoDisjointHoles:
      if (k1 < 2 || k1 > 6 || k2 < 2 || k2 > 6) fail("hole sizes must be between 2 and 6");
      break;
    case ProblemMode::TwoInteriorDisjointHoles:
      if (k1 < 3 || k1 > 6 || k2 < 3 || k2 > 6)
        fail("interior-disjoint hole sizes must be between 3 and 6");
      break;
    case ProblemMode::ForbidHole:
      if (k < 3 || k > 6) fail("hole size must be between 3 and 6");
      break;
    case ProblemMode::ForbidGon:
      if (k < 4 || k > 6) fail("gon size must be between 4 and 6");
      break;
    case ProblemMode::CountHoles:
      if (k < 3 || k > 6) fail("hole size must be between 3 and 6");
      if (threshold < 1) fail("threshold must be at least 1");
      break;
  }
  const int largest = disjoint_mode() ? std::max(k1, k2) : k;
  if (n < largest) fail("n must be at least the largest hole size");
  if (hints && !(mode == ProblemMode::TwoDisjointHoles && k1 == 5 && k2 == 5))
    fail("hints are only implied facts for two disjoint 5-holes");
  if (relaxed_lr && mode != ProblemMode::TwoDisjointHoles)
    fail("relaxed L/R witnesses apply to two-disjoint-holes mode only");
  if (simplified_holes && mode == ProblemMode::ForbidGon)
    fail("simplified hole definition does not apply to gon mode");
}

std::vector<int> HoleProblem::hole_variable_sizes() const {
  std::set<int> sizes;
  if (disjoint_mode()) {
    if (k1 >= 4) sizes.insert(k1);
    if (k2 >= 4) sizes.insert(k2);
  } else if (hole_mode(mode) && k >= 4) {
    sizes.insert(k);
  }
  return {sizes.begin(), sizes.end()};
}

std::string HoleProblem::describe() const {
  std::ostringstream os;
  os << "n=" << n << " mode=" << mode_name(mode) << " k1=" << k1 << " k2=" << k2 << " k=" << k
     << " threshold=" << threshold << " orientation="
     << (orientation == OrientationEncoding::PaperFaithful ? "paper-faithful" : "compact")
     << " hints=" << hints << " relaxed-lr=" << relaxed_lr << " simplified=" << simplified_holes;
  return os.str();
}

HoleProblem HoleProblem::parse(std::string_view text) {
  HoleProblem p;
  std::istringstream in{std::string(text)};
  std::string field;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed problem field '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "n") p.n = std::stoi(value);
    else if (key == "mode") p.mode = parse_mode(value);
    else if (key == "k1") p.k1 = std::stoi(value);
    else if (key == "k2") p.k2 = std::stoi(value);
    else if (key == "k") p.k = std::stoi(value);
    else if (key == "threshold") p.threshold = std::stoi(value);
    else if (key == "orientation") {
      if (value == "paper-faithful") p.orientation = OrientationEncoding::PaperFaithful;
      else if (value == "compact") p.orientation = OrientationEncoding::Compact;
      else throw std::invalid_argument("unknown orientation encoding '" + value + "'");
    } else if (key == "hints") p.hints = value == "1";
    else if (key == "relaxed-lr") p.relaxed_lr = value == "1";
    else if (key == "simplified") p.simplified_holes = value == "1";
    else throw std::invalid_argument("unknown problem field '" + key + "'");
  }
  p.validate();
  return p;
}

void ClauseGroup::add(std::span<const int> clause) {
  if (clause.empty()) throw std::logic_error("empty clause in group " + name_);
  literals_.insert(literals_.end(), clause.begin(), clause.end());
  ends_.push_back(literals_.size());
}

std::size_t CnfInstance::clause_count() const {
  std::size_t c = 0;
  for (const auto& g : groups) c += g.size();
  return c;
}

const ClauseGroup* CnfInstance::group(std::string_view name) const {
  for (const auto& g : groups)
    if (g.name() == name) return &g;
  return nullptr;
}

VarRegistry build_registry(const HoleProblem& p) {
  p.validate();
  const int n = p.n;
  const Needs need = needs_of(p);
  VarRegistry reg;

  for_each_subset(n, 3, [&](std::span<const int> t) {
    const int a = t[0], b = t[1], c = t[2];
    reg.add(VarTag::orientation(a, b, c));
    if (p.orientation == OrientationEncoding::PaperFaithful) {
      reg.add(VarTag::orientation(b, c, a));
      reg.add(VarTag::orientation(c, a, b));
      reg.add(VarTag::orientation(b, a, c));
      reg.add(VarTag::orientation(a, c, b));
      reg.add(VarTag::orientation(c, b, a));
    }
  });
  if (need.bounding) {
    for_each_subset(n, 4, [&](std::span<const int> q) {
      reg.add(VarTag::bounding(q[0], q[1], q[2], q[3]));
      reg.add(VarTag::bounding(q[2], q[3], q[0], q[1]));
    });
  }
  if (need.gon4) for_each_subset(n, 4, [&](std::span<const int> q) { reg.add(VarTag::gon(q)); });
  if (need.inside) {
    for_each_subset(n, 4, [&](std::span<const int> q) {
      reg.add(VarTag::inside(q[1], q[0], q[2], q[3]));
      reg.add(VarTag::inside(q[2], q[0], q[1], q[3]));
    });
  }
  if (need.hole3) for_each_subset(n, 3, [&](std::span<const int> t) { reg.add(VarTag::hole(t)); });
  for (int s : p.hole_variable_sizes())
    for_each_subset(n, s, [&](std::span<const int> x) { reg.add(VarTag::hole(x)); });
  if (p.mode == ProblemMode::ForbidGon && p.k >= 5)
    for_each_subset(n, p.k, [&](std::span<const int> x) { reg.add(VarTag::gon(x)); });

  if (p.disjoint_mode()) {
    for (int s : lr_sizes(p)) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b) reg.add(VarTag::left(s, a, b));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b) reg.add(VarTag::right(s, a, b));
    }
  }

  if (p.mode == ProblemMode::CountHoles) {
    const auto m = static_cast<int>(binomial(n, p.k));
    const int bound = p.threshold - 1;
    if (bound > 0 && bound < m)
      for (int i = 1; i < m; ++i)
        for (int j = 1; j <= bound; ++j) reg.add(VarTag::counter(i, j));
  }
  return reg;
}

int orientation_literal(const HoleProblem& p, const VarRegistry& reg, int a, int b, int c) {
  if (p.orientation == OrientationEncoding::PaperFaithful) return reg.id(VarTag::orientation(a, b, c));
  int t[3] = {a, b, c};
  bool odd = false;
  // Three-element sort, tracking permutation parity.
  if (t[0] > t[1]) { std::swap(t[0], t[1]); odd = !odd; }
  if (t[1] > t[2]) { std::swap(t[1], t[2]); odd = !odd; }
  if (t[0] > t[1]) { std::swap(t[0], t[1]); odd = !odd; }
  const int id = reg.id(VarTag::orientation(t[0], t[1], t[2]));
  return odd ? -id : id;
}

std::vector<ClauseGroup> emit_orientation_axioms(const HoleProblem& p, const VarRegistry& reg) {
  std::vector<ClauseGroup> out;
  const int n = p.n;

  if (p.orientation == OrientationEncoding::PaperFaithful) {
    ClauseGroup alt(std::string(groups::kAlternating));
    for_each_subset(n, 3, [&](std::span<const int> t) {
      const int a = t[0], b = t[1], c = t[2];
      const int abc = reg.id(VarTag::orientation(a, b, c));
      const int bca = reg.id(VarTag::orientation(b, c, a));
      const int cab = reg.id(VarTag::orientation(c, a, b));
      const int bac = reg.id(VarTag::orientation(b, a, c));
      const int acb = reg.id(VarTag::orientation(a, c, b));
      const int cba = reg.id(VarTag::orientation(c, b, a));
      auto equal = [&](int x, int y) {
        alt.add({-x, y});
        alt.add({x, -y});
      };
      equal(abc, bca);
      equal(bca, cab);
      alt.add({abc, bac});
      alt.add({-abc, -bac});
      equal(bac, acb);
      equal(acb, cba);
    });
    out.push_back(std::move(alt));
  }

  ClauseGroup sig(std::string(groups::kSignotope));
  for_each_subset(n, 4, [&](std::span<const int> q) {
    const int a = q[0], b = q[1], c = q[2], d = q[3];
    const int abc = orientation_literal(p, reg, a, b, c);
    const int abd = orientation_literal(p, reg, a, b, d);
    const int acd = orientation_literal(p, reg, a, c, d);
    const int bcd = orientation_literal(p, reg, b, c, d);
    // Forbid +-+ and -+- on every subsequence of length three.
    sig.add({abc, -abd, acd});
    sig.add({-abc, abd, -acd});
    sig.add({abc, -abd, bcd});
    sig.add({-abc, abd, -bcd});
    sig.add({abc, -acd, bcd});
    sig.add({-abc, acd, -bcd});
    sig.add({abd, -acd, bcd});
    sig.add({-abd, acd, -bcd});
  });
  out.push_back(std::move(sig));

  ClauseGroup sorted(std::string(groups::kSortedAroundFirst));
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) sorted.add({orientation_literal(p, reg, 0, a, b)});
  out.push_back(std::move(sorted));
  return out;
}

std::vector<ClauseGroup> emit_hole_definitions(const HoleProblem& p, const VarRegistry& reg) {
  std::vector<ClauseGroup> out;
  const int n = p.n;
  const Needs need = needs_of(p);
  const OrientationTable o(p, reg);

  if (need.bounding) {
    ClauseGroup bounding(std::string(groups::kBoundingSegments));
    auto define = [&](int a, int b, int c, int d) {
      const int e = reg.id(VarTag::bounding(a, b, c, d));
      const int x = o(a, b, c);
      const int y = o(a, b, d);
      bounding.add({-e, x, -y});
      bounding.add({-e, -x, y});
      bounding.add({e, x, y});
      bounding.add({e, -x, -y});
    };
    for_each_subset(n, 4, [&](std::span<const int> q) {
      define(q[0], q[1], q[2], q[3]);
      define(q[2], q[3], q[0], q[1]);
    });
    out.push_back(std::move(bounding));
  }

  if (need.gon4 || need.inside) {
    ClauseGroup five(std::string(groups::kGonsContainments));
    for_each_subset(n, 4, [&](std::span<const int> q) {
      const int a = q[0], b = q[1], c = q[2], d = q[3];
      const int left = reg.id(VarTag::bounding(a, b, c, d));
      const int right = reg.id(VarTag::bounding(c, d, a, b));
      if (need.gon4) {
        const int terms[] = {left, right};
        define_and(five, reg.id(VarTag::gon(q)), terms);
      }
      if (need.inside) {
        const int b_inside[] = {-left, right};
        define_and(five, reg.id(VarTag::inside(b, a, c, d)), b_inside);
        const int c_inside[] = {left, -right};
        define_and(five, reg.id(VarTag::inside(c, a, b, d)), c_inside);
      }
    });
    out.push_back(std::move(five));
  }

  if (need.hole3) {
    ClauseGroup three(std::string(groups::kThreeHoles));
    std::vector<int> terms;
    for_each_subset(n, 3, [&](std::span<const int> t) {
      const int a = t[0], b = t[1], c = t[2];
      terms.clear();
      // Points outside the x-range a..c cannot lie in the triangle.
      for (int i = a + 1; i < c; ++i)
        if (i != b) terms.push_back(-reg.id(VarTag::inside(i, a, b, c)));
      define_and(three, reg.id(VarTag::hole(t)), terms);
    });
    out.push_back(std::move(three));
  }

  const auto sizes = p.hole_variable_sizes();
  if (!sizes.empty()) {
    ClauseGroup holes(std::string(groups::kKHoles));
    std::vector<int> terms;
    for (int s : sizes) {
      for_each_subset(n, s, [&](std::span<const int> x) {
        terms.clear();
        if (!p.simplified_holes)
          for_each_subset(s, 4, [&](std::span<const int> pos) {
            const int sub[] = {x[pos[0]], x[pos[1]], x[pos[2]], x[pos[3]]};
            terms.push_back(reg.id(VarTag::gon(sub)));
          });
        for_each_subset(s, 3, [&](std::span<const int> pos) {
          const int sub[] = {x[pos[0]], x[pos[1]], x[pos[2]]};
          terms.push_back(reg.id(VarTag::hole(sub)));
        });
        define_and(holes, reg.id(VarTag::hole(x)), terms);
      });
    }
    out.push_back(std::move(holes));
  }

  if (p.mode == ProblemMode::ForbidGon && p.k >= 5) {
    ClauseGroup gons(std::string(groups::kKGons));
    std::vector<int> terms;
    for_each_subset(n, p.k, [&](std::span<const int> x) {
      terms.clear();
      for_each_subset(p.k, 4, [&](std::span<const int> pos) {
        const int sub[] = {x[pos[0]], x[pos[1]], x[pos[2]], x[pos[3]]};
        terms.push_back(reg.id(VarTag::gon(sub)));
      });
      define_and(gons, reg.id(VarTag::gon(x)), terms);
    });
    out.push_back(std::move(gons));
  }
  return out;
}

ClauseGroup emit_disjointness(const HoleProblem& p, const VarRegistry& reg) {
  if (!p.disjoint_mode()) throw std::invalid_argument("disjointness family needs a disjoint mode");
  p.validate();
  const int n = p.n;
  const OrientationTable o(p, reg);
  const bool interior = p.mode == ProblemMode::TwoInteriorDisjointHoles;
  ClauseGroup g(std::string(groups::kDisjointness));
  std::vector<int> clause;

  for (int s : lr_sizes(p)) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> hole_vars;
    for_each_subset(n, s, [&](std::span<const int> x) {
      subsets.emplace_back(x.begin(), x.end());
      hole_vars.push_back(hole_literal(reg, x));
    });

    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const int left = reg.id(VarTag::left(s, a, b));
        const int right = reg.id(VarTag::right(s, a, b));
        for (std::size_t xi = 0; xi < subsets.size(); ++xi) {
          const auto& x = subsets[xi];
          const bool has_a = contains(x, a);
          const bool has_b = contains(x, b);
          // Left witness: hole through a (strict), or any hole avoiding b
          // (relaxed), or any hole at all (interior); the rest of the hole
          // lies strictly left of a->b.
          bool left_ok = interior || (p.relaxed_lr ? !has_b : (has_a && !has_b));
          bool right_ok = interior || (p.relaxed_lr ? !has_a : (has_b && !has_a));
          if (left_ok) {
            clause.assign({left});
            if (hole_vars[xi] != 0) clause.push_back(-hole_vars[xi]);
            for (int c : x)
              if (c != a && c != b) clause.push_back(-o(a, b, c));
            if (clause.size() > 1 + (hole_vars[xi] != 0)) g.add(clause);
          }
          if (right_ok) {
            clause.assign({right});
            if (hole_vars[xi] != 0) clause.push_back(-hole_vars[xi]);
            for (int c : x)
              if (c != a && c != b) clause.push_back(o(a, b, c));
            if (clause.size() > 1 + (hole_vars[xi] != 0)) g.add(clause);
          }
        }
      }
    }
  }

  const auto sizes = lr_sizes(p);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      g.add({-reg.id(VarTag::left(p.k1, a, b)), -reg.id(VarTag::right(p.k2, a, b))});
      if (p.k1 != p.k2)
        g.add({-reg.id(VarTag::left(p.k2, a, b)), -reg.id(VarTag::right(p.k1, a, b))});
    }
  return g;
}

ClauseGroup emit_hints(const HoleProblem& p, const VarRegistry& reg) {
  if (!(p.mode == ProblemMode::TwoDisjointHoles && p.k1 == 5 && p.k2 == 5))
    throw std::invalid_argument("hints are only implied facts for two disjoint 5-holes");
  ClauseGroup g(std::string(groups::kHints));
  const int n = p.n;
  std::vector<int> clause;
  // Every 10 consecutive points contain a 5-hole.
  for (int start = 0; start + 10 <= n; ++start) {
    clause.clear();
    for_each_subset(10, 5, [&](std::span<const int> pos) {
      int x[5];
      for (int i = 0; i < 5; ++i) x[i] = start + pos[i];
      clause.push_back(reg.id(VarTag::hole(x)));
    });
    g.add(clause);
  }
  // A 5-hole among the first (last) 7 of 17 points would be separated by a
  // vertical line from a 5-hole among the remaining 10.
  if (n == 17) {
    for (int offset : {0, 10})
      for_each_subset(7, 5, [&](std::span<const int> pos) {
        int x[5];
        for (int i = 0; i < 5; ++i) x[i] = offset + pos[i];
        g.add({-reg.id(VarTag::hole(x))});
      });
  }
  return g;
}

ClauseGroup emit_cardinality(const HoleProblem& p, const VarRegistry& reg) {
  if (p.mode != ProblemMode::CountHoles) throw std::invalid_argument("cardinality needs count-holes mode");
  if (p.threshold < 1) throw std::invalid_argument("threshold must be at least 1");
  ClauseGroup g(std::string(groups::kCardinality));
  const auto x = target_variables(p, reg);
  const int m = static_cast<int>(x.size());
  const int bound = p.threshold - 1;
  if (bound >= m) return g;
  if (bound == 0) {
    for (int v : x) g.add({-v});
    return g;
  }
  // Sequential counter: C(i,j) means at least j of x_1..x_i are true.
  auto s = [&](int i, int j) { return reg.id(VarTag::counter(i, j)); };
  auto xv = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };
  g.add({-xv(1), s(1, 1)});
  for (int j = 2; j <= bound; ++j) g.add({-s(1, j)});
  for (int i = 2; i < m; ++i) {
    g.add({-xv(i), s(i, 1)});
    g.add({-s(i - 1, 1), s(i, 1)});
    for (int j = 2; j <= bound; ++j) {
      g.add({-xv(i), -s(i - 1, j - 1), s(i, j)});
      g.add({-s(i - 1, j), s(i, j)});
    }
    g.add({-xv(i), -s(i - 1, bound)});
  }
  g.add({-xv(m), -s(m - 1, bound)});
  return g;
}

ClauseGroup emit_forbidden(const HoleProblem& p, const VarRegistry& reg) {
  if (p.mode != ProblemMode::ForbidHole && p.mode != ProblemMode::ForbidGon)
    throw std::invalid_argument("forbid family needs forbid-hole or forbid-gon mode");
  ClauseGroup g(std::string(groups::kForbid));
  for (int v : target_variables(p, reg)) g.add({-v});
  return g;
}

EncodedProblem build_instance(const HoleProblem& p) {
  EncodedProblem out;
  out.registry = build_registry(p);
  out.instance.problem = p;
  out.instance.num_vars = out.registry.size();
  auto& groups = out.instance.groups;
  for (auto& g : emit_orientation_axioms(p, out.registry)) groups.push_back(std::move(g));
  for (auto& g : emit_hole_definitions(p, out.registry)) groups.push_back(std::move(g));
  if (p.disjoint_mode()) groups.push_back(emit_disjointness(p, out.registry));
  if (p.hints) groups.push_back(emit_hints(p, out.registry));
  if (p.mode == ProblemMode::ForbidHole || p.mode == ProblemMode::ForbidGon)
    groups.push_back(emit_forbidden(p, out.registry));
  if (p.mode == ProblemMode::CountHoles) groups.push_back(emit_cardinality(p, out.registry));
  std::erase_if(groups, [](const ClauseGroup& g) { return g.empty(); });
  return out;
}

std::vector<bool> assignment_from_signotope(const HoleProblem& p, const VarRegistry& reg,
                                            const Signotope& sig) {
  if (sig.size() != p.n) throw std::invalid_argument("signotope size does not match problem");
  const int n = p.n;
  std::vector<bool> value(static_cast<std::size_t>(reg.size()) + 1, false);

  // Hole flags of all s-subsets for the L/R witnesses.
  struct Subsets {
    std::vector<std::vector<int>> sets;
    std::vector<bool> hole;
  };
  std::vector<std::pair<int, Subsets>> by_size;
  auto subsets_of = [&](int s) -> const Subsets& {
    for (auto& [size, subs] : by_size)
      if (size == s) return subs;
    Subsets subs;
    for_each_subset(n, s, [&](std::span<const int> x) {
      subs.sets.emplace_back(x.begin(), x.end());
      subs.hole.push_back(is_abstract_hole(sig, x));
    });
    by_size.emplace_back(s, std::move(subs));
    return by_size.back().second;
  };

  const bool interior = p.mode == ProblemMode::TwoInteriorDisjointHoles;
  auto witness = [&](const VarTag& t, bool left) {
    const int a = static_cast<int>(t.idx[0]);
    const int b = static_cast<int>(t.idx[1]);
    const auto& subs = subsets_of(t.size);
    for (std::size_t i = 0; i < subs.sets.size(); ++i) {
      if (!subs.hole[i]) continue;
      const auto& x = subs.sets[i];
      const bool has_a = contains(x, a);
      const bool has_b = contains(x, b);
      bool allowed = interior || (p.relaxed_lr ? (left ? !has_b : !has_a)
                                               : (left ? (has_a && !has_b) : (has_b && !has_a)));
      if (!allowed) continue;
      bool side = true;
      std::size_t tested = 0;
      for (int c : x) {
        if (c == a || c == b) continue;
        ++tested;
        if (sig.positive(a, b, c) != left) {
          side = false;
          break;
        }
      }
      if (side && tested > 0) return true;
    }
    return false;
  };

  std::vector<int> counted;
  if (p.mode == ProblemMode::CountHoles) counted = target_variables(p, reg);

  for (int id = 1; id <= reg.size(); ++id) {
    const VarTag& t = reg.tag(id);
    const auto i = [&](std::size_t j) { return static_cast<int>(t.idx[j]); };
    bool v = false;
    switch (t.kind) {
      case VarKind::Orientation:
        v = sig.positive(i(0), i(1), i(2));
        break;
      case VarKind::Bounding:
        v = sig(i(0), i(1), i(2)) == sig(i(0), i(1), i(3));
        break;
      case VarKind::Gon: {
        std::vector<int> x(t.idx.begin(), t.idx.begin() + t.arity);
        v = in_convex_position(sig, x);
        break;
      }
      case VarKind::Inside:
        v = in_triangle(sig, i(0), i(1), i(2), i(3));
        break;
      case VarKind::Hole: {
        std::vector<int> x(t.idx.begin(), t.idx.begin() + t.arity);
        v = is_abstract_hole(sig, x);
        break;
      }
      case VarKind::Left:
        v = witness(t, true);
        break;
      case VarKind::Right:
        v = witness(t, false);
        break;
      case VarKind::Counter: {
        const int prefix = i(0), at_least = i(1);
        int c = 0;
        for (int j = 0; j < prefix; ++j) c += value[static_cast<std::size_t>(counted[j])];
        v = c >= at_least;
        break;
      }
    }
    value[static_cast<std::size_t>(id)] = v;
  }
  return value;
}

bool clause_satisfied(std::span<const int> clause, const std::vector<bool>& assignment) {
  for (int lit : clause) {
    const bool v = assignment[static_cast<std::size_t>(lit > 0 ? lit : -lit)];
    if ((lit > 0) == v) return true;
  }
  return false;
}

std::optional<std::size_t> first_falsified(const ClauseGroup& group,
                                           const std::vector<bool>& assignment) {
  for (std::size_t i = 0; i < group.size(); ++i)
    if (!clause_satisfied(group.clause(i), assignment)) return i;
  return std::nullopt;
}

}  // namespace holesat
