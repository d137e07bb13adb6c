#include <random>

#include <benchmark/benchmark.h>

#include "holesat/encoder.hpp"
#include "holesat/holes.hpp"
#include "holesat/verify.hpp"

using namespace holesat;

namespace {

PointSet random_set(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(-1'000'000, 1'000'000);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    pts.push_back({coord(rng), coord(rng)});
    if (!find_collinear_triple(pts).empty()) pts.pop_back();
  }
  return PointSet(std::move(pts));
}

void BM_Orient(benchmark::State& state) {
  const PointSet s = random_set(64, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.orient(i % 64, (i + 7) % 64, (i + 19) % 64));
    ++i;
  }
}
BENCHMARK(BM_Orient);

void BM_EnumerateHoles(benchmark::State& state) {
  const PointSet s = random_set(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_holes(s, 5));
}
BENCHMARK(BM_EnumerateHoles)->Arg(12)->Arg(17)->Arg(21);

void BM_DisjointPair(benchmark::State& state) {
  const PointSet s = witness("fig2-n16");
  const int sizes[] = {5, 5};
  for (auto _ : state) benchmark::DoNotOptimize(find_disjoint_tuple(s, sizes, DisjointMode::Disjoint));
}
BENCHMARK(BM_DisjointPair);

void BM_CanonicalChirotope(benchmark::State& state) {
  const PointSet s = random_set(17, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_chirotope(s));
}
BENCHMARK(BM_CanonicalChirotope);

void BM_BuildInstance(benchmark::State& state) {
  HoleProblem p;
  p.n = static_cast<int>(state.range(0));
  p.orientation = OrientationEncoding::PaperFaithful;
  p.hints = p.n == 17;
  for (auto _ : state) benchmark::DoNotOptimize(build_instance(p));
}
BENCHMARK(BM_BuildInstance)->Arg(12)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_VerifyModel(benchmark::State& state) {
  const Signotope sig = canonical_chirotope(witness("fig2-n16"));
  HoleProblem p;
  p.n = 16;
  for (auto _ : state) benchmark::DoNotOptimize(verify_model(sig, p));
}
BENCHMARK(BM_VerifyModel);

}  // namespace

BENCHMARK_MAIN();
