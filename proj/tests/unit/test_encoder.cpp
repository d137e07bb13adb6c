#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "holesat/dimacs.hpp"
#include "holesat/encoder.hpp"
#include "holesat/holes.hpp"
#include "support.hpp"

using namespace holesat;

namespace {

HoleProblem two_disjoint(int n, int k1 = 5, int k2 = 5) {
  HoleProblem p;
  p.n = n;
  p.k1 = k1;
  p.k2 = k2;
  return p;
}

HoleProblem faithful_55(int n, bool hints) {
  HoleProblem p = two_disjoint(n);
  p.orientation = OrientationEncoding::PaperFaithful;
  p.hints = hints;
  return p;
}

bool group_satisfied(const CnfInstance& inst, std::string_view name, const std::vector<bool>& a) {
  const ClauseGroup* g = inst.group(name);
  return g == nullptr || !first_falsified(*g, a).has_value();
}

std::uint64_t C(int n, int k) { return binomial(n, k); }

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(17, 5) == 6188);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("variable count closed form") {
  for (int n = 6; n <= 17; ++n) {
    const VarRegistry reg = build_registry(faithful_55(n, true));
    const auto expected = 6 * C(n, 3) + 2 * C(n, 4) + C(n, 4) + 2 * C(n, 4) + C(n, 3) + C(n, 5) +
                          2 * static_cast<std::uint64_t>(n) * (n - 1);
    REQUIRE(static_cast<std::uint64_t>(reg.size()) == expected);
  }
  CHECK(build_registry(faithful_55(17, true)).size() == 23392);
}

TEST_CASE("n=17 (5,5) clause counts per family") {
  const EncodedProblem e = build_instance(faithful_55(17, true));
  const auto& inst = e.instance;
  CHECK(inst.num_vars == 23392);
  CHECK(inst.group(groups::kAlternating)->size() == 10 * C(17, 3));
  CHECK(inst.group(groups::kSignotope)->size() == 19040);
  CHECK(inst.group(groups::kSortedAroundFirst)->size() == 120);
  CHECK(inst.group(groups::kBoundingSegments)->size() == 19040);
  CHECK(inst.group(groups::kDisjointness)->size() == 742832);
  const ClauseGroup* hints = inst.group(groups::kHints);
  REQUIRE(hints != nullptr);
  REQUIRE(hints->size() == 50);
  int windows = 0, units = 0;
  for (std::size_t i = 0; i < hints->size(); ++i) {
    const auto c = hints->clause(i);
    if (c.size() == 252) ++windows;
    if (c.size() == 1 && c[0] < 0) ++units;
  }
  CHECK(windows == 8);
  CHECK(units == 42);
  const double total = static_cast<double>(inst.clause_count());
  CHECK(total >= 825689 * 0.85);
  CHECK(total <= 825689 * 1.15);
}

TEST_CASE("compact mode drops the alternating family") {
  const EncodedProblem e = build_instance(two_disjoint(10));
  CHECK(e.instance.group(groups::kAlternating) == nullptr);
  CHECK(e.registry.count(VarKind::Orientation) == C(10, 3));
  CHECK(orientation_literal(e.instance.problem, e.registry, 2, 1, 0) ==
        -orientation_literal(e.instance.problem, e.registry, 0, 1, 2));
  CHECK(orientation_literal(e.instance.problem, e.registry, 1, 2, 0) ==
        orientation_literal(e.instance.problem, e.registry, 0, 1, 2));
}

TEST_CASE("forbid-gon allocates no hole, containment or side variables") {
  HoleProblem p;
  p.n = 17;
  p.mode = ProblemMode::ForbidGon;
  p.k = 6;
  const VarRegistry reg = build_registry(p);
  CHECK(reg.count(VarKind::Hole) == 0);
  CHECK(reg.count(VarKind::Inside) == 0);
  CHECK(reg.count(VarKind::Left) == 0);
  CHECK(reg.count(VarKind::Right) == 0);
  CHECK(reg.count(VarKind::Gon) == C(17, 4) + C(17, 6));
}

TEST_CASE("problem validation") {
  HoleProblem p = two_disjoint(10, 5, 7);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = two_disjoint(4, 5, 5);
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = two_disjoint(10, 2, 4);
  CHECK_NOTHROW(p.validate());
  p.mode = ProblemMode::TwoInteriorDisjointHoles;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = two_disjoint(12, 4, 5);
  p.hints = true;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = two_disjoint(12);
  p.mode = ProblemMode::TwoInteriorDisjointHoles;
  p.hints = true;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.hints = false;
  p.relaxed_lr = true;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  HoleProblem c;
  c.n = 10;
  c.mode = ProblemMode::CountHoles;
  c.threshold = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  HoleProblem g;
  g.n = 10;
  g.mode = ProblemMode::ForbidGon;
  g.k = 3;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("problem description round-trips") {
  HoleProblem p = faithful_55(17, true);
  p.relaxed_lr = true;
  CHECK(HoleProblem::parse(p.describe()) == p);
  HoleProblem c;
  c.n = 16;
  c.mode = ProblemMode::CountHoles;
  c.threshold = 11;
  CHECK(HoleProblem::parse(c.describe()) == c);
  CHECK_THROWS(HoleProblem::parse("n=10 colour=blue"));
}

TEST_CASE("registry numbering is deterministic and tags round-trip") {
  const HoleProblem p = faithful_55(9, false);
  const VarRegistry a = build_registry(p);
  const VarRegistry b = build_registry(p);
  CHECK(a == b);
  std::stringstream ss;
  a.write(ss);
  CHECK(VarRegistry::read(ss) == a);
  for (int id = 1; id <= a.size(); ++id) REQUIRE(VarTag::parse(a.tag(id).to_string()) == a.tag(id));
  CHECK(VarTag::orientation(0, 1, 2).to_string() == "O(1,2,3)");
  CHECK(VarTag::bounding(0, 1, 2, 3).to_string() == "E(1,2;3,4)");
  CHECK(VarTag::inside(1, 0, 2, 3).to_string() == "I(2;1,3,4)");
  CHECK(VarTag::left(5, 0, 1).to_string() == "L5(1,2)");
  CHECK_THROWS(VarTag::parse("Q(1,2)"));
  CHECK_THROWS(VarTag::parse("O(1,2)"));
}

TEST_CASE("byte-identical DIMACS on rebuild") {
  for (const HoleProblem& p : {faithful_55(12, true), two_disjoint(11, 3, 4)}) {
    std::ostringstream a, b;
    const auto e1 = build_instance(p);
    const auto e2 = build_instance(p);
    write_dimacs(a, e1.instance, &e1.registry);
    write_dimacs(b, e2.instance, &e2.registry);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("no empty clause and no unregistered literal") {
  std::vector<HoleProblem> problems{faithful_55(11, true), two_disjoint(8, 2, 4)};
  HoleProblem q = two_disjoint(9, 3, 5);
  q.mode = ProblemMode::TwoInteriorDisjointHoles;
  problems.push_back(q);
  for (auto mode : {ProblemMode::ForbidHole, ProblemMode::ForbidGon, ProblemMode::CountHoles}) {
    HoleProblem r;
    r.n = 9;
    r.mode = mode;
    r.k = 5;
    r.threshold = 3;
    problems.push_back(r);
  }
  for (const auto& p : problems) {
    const auto e = build_instance(p);
    for (const auto& g : e.instance.groups)
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto c = g.clause(i);
        REQUIRE_FALSE(c.empty());
        for (int lit : c) REQUIRE((lit != 0 && std::abs(lit) <= e.instance.num_vars));
      }
  }
}

TEST_CASE("derived 5-hole variables equal geometric holes") {
  std::mt19937_64 rng(31);
  for (auto orientation : {OrientationEncoding::Compact, OrientationEncoding::PaperFaithful})
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet s = canonicalize(testing::random_point_set(rng, 10)).points;
      HoleProblem p = two_disjoint(10);
      p.orientation = orientation;
      const VarRegistry reg = build_registry(p);
      const auto a = assignment_from_signotope(p, reg, chirotope(s));
      for (int id = 1; id <= reg.size(); ++id) {
        const VarTag& t = reg.tag(id);
        if (t.kind != VarKind::Hole || t.size != 5) continue;
        const std::vector<int> x(t.idx.begin(), t.idx.begin() + 5);
        REQUIRE(a[static_cast<std::size_t>(id)] == is_hole(s, x));
      }
    }
}

TEST_CASE("chirotope assignment satisfies the definitions and matches geometry") {
  std::mt19937_64 rng(32);
  const std::vector<std::pair<int, int>> sizes{{3, 3}, {3, 4}, {4, 4}, {2, 4}, {4, 5}, {5, 5}};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + trial % 5;
    const PointSet s = testing::random_point_set(rng, n);
    const Signotope sig = canonical_chirotope(s);
    const auto [k1, k2] = sizes[static_cast<std::size_t>(trial) % sizes.size()];
    for (bool interior : {false, true}) {
      if (interior && k1 < 3) continue;
      HoleProblem p = two_disjoint(n, k1, k2);
      if (interior) p.mode = ProblemMode::TwoInteriorDisjointHoles;
      p.orientation = trial % 2 ? OrientationEncoding::PaperFaithful : OrientationEncoding::Compact;
      p.relaxed_lr = !interior && trial % 3 == 0;
      if (n < std::max(k1, k2)) continue;
      const auto e = build_instance(p);
      const auto a = assignment_from_signotope(p, e.registry, sig);
      for (const auto& g : e.instance.groups)
        if (g.name() != groups::kDisjointness) REQUIRE(group_satisfied(e.instance, g.name(), a));
      const int pair[] = {k1, k2};
      const bool present =
          find_disjoint_tuple(s, pair, interior ? DisjointMode::InteriorDisjoint : DisjointMode::Disjoint)
              .has_value();
      REQUIRE(group_satisfied(e.instance, groups::kDisjointness, a) == !present);
    }
  }
}

TEST_CASE("sequential counter accepts exactly the sets below the threshold") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet s = testing::random_point_set(rng, 8);
    const Signotope sig = canonical_chirotope(s);
    const int k = 3 + trial % 3;
    const auto holes = static_cast<int>(enumerate_holes(s, k).size());
    for (int t : {holes, holes + 1, std::max(1, holes - 1), 1}) {
      HoleProblem p;
      p.n = 8;
      p.mode = ProblemMode::CountHoles;
      p.k = k;
      p.threshold = t;
      const auto e = build_instance(p);
      const auto a = assignment_from_signotope(p, e.registry, sig);
      bool all = true;
      for (const auto& g : e.instance.groups) all = all && !first_falsified(g, a);
      REQUIRE(all == (holes < t));
    }
  }
}

TEST_CASE("hints hold on every geometric set") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 10 + trial % 3;
    const Signotope sig = canonical_chirotope(testing::random_point_set(rng, n));
    const HoleProblem p = faithful_55(n, true);
    const auto e = build_instance(p);
    REQUIRE(group_satisfied(e.instance, groups::kHints, assignment_from_signotope(p, e.registry, sig)));
  }
}

TEST_CASE("forbid families reject exactly the sets containing the structure") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 7 + trial % 3;
    const PointSet s = testing::random_point_set(rng, n);
    const Signotope sig = canonical_chirotope(s);
    for (auto mode : {ProblemMode::ForbidHole, ProblemMode::ForbidGon})
      for (int k = 4; k <= 6; ++k) {
        HoleProblem p;
        p.n = n;
        p.mode = mode;
        p.k = k;
        const auto e = build_instance(p);
        const auto a = assignment_from_signotope(p, e.registry, sig);
        bool all = true;
        for (const auto& g : e.instance.groups) all = all && !first_falsified(g, a);
        const bool present = mode == ProblemMode::ForbidHole ? !enumerate_holes(s, k).empty()
                                                             : !enumerate_gons(s, k).empty();
        REQUIRE(all == !present);
      }
  }
}

TEST_CASE("simplified hole definition agrees with the full one") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet s = testing::random_point_set(rng, 9);
    const Signotope sig = canonical_chirotope(s);
    HoleProblem p = two_disjoint(9);
    p.simplified_holes = true;
    const auto e = build_instance(p);
    CHECK(e.registry.count(VarKind::Gon) == 0);
    const auto a = assignment_from_signotope(p, e.registry, sig);
    for (const auto& g : e.instance.groups)
      if (g.name() != groups::kDisjointness) REQUIRE_FALSE(first_falsified(g, a));
  }
}
