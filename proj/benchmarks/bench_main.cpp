#include <benchmark/benchmark.h>

#include <random>

#include "planesum/conjecture.hpp"
#include "planesum/geometry.hpp"
#include "planesum/sumset.hpp"
#include "planesum/triangulation.hpp"

using namespace planesum;

namespace {

// Random non-collinear set of n points in a box of side `box`.
PointSet random_set(std::size_t n, Coord box, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<Point> pts;
    while (pts.size() < n) {
      pts.push_back({static_cast<Coord>(rng() % box), static_cast<Coord>(rng() % box)});
    }
    PointSet s(pts);
    if (!is_collinear(s)) return s;
  }
}

void BM_ConvexHull(benchmark::State& state) {
  const PointSet s = random_set(static_cast<std::size_t>(state.range(0)), 1 << 20, 1);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(4)->Range(16, 16384)->Complexity(benchmark::oNLogN);

void BM_ClassifyPoints(benchmark::State& state) {
  const PointSet s = random_set(static_cast<std::size_t>(state.range(0)), 256, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_points(s));
}
BENCHMARK(BM_ClassifyPoints)->RangeMultiplier(4)->Range(16, 4096);

void BM_MinkowskiSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointSet a = random_set(n, 64, 3);
  const PointSet b = random_set(n, 64, 4);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinkowskiSum)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_CheckPair(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PointSet a = random_set(n, 6, 5);
  const PointSet b = random_set(n, 6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(check_pair(a, b));
}
BENCHMARK(BM_CheckPair)->DenseRange(4, 16, 4);

void BM_TriangulateExplicit(benchmark::State& state) {
  const PointSet s = random_set(static_cast<std::size_t>(state.range(0)), 1024, 7);
  for (auto _ : state) benchmark::DoNotOptimize(triangulate_explicit(s));
}
BENCHMARK(BM_TriangulateExplicit)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
