#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "mrqa/medit.hpp"
#include "mrqa/rng.hpp"
#include "mrqa/series.hpp"

namespace {

using namespace mrqa;

Segment random_segment(Rng& rng, std::size_t n, double window) {
  Segment s;
  s.rel_times.reserve(n);
  s.amplitudes.reserve(n);
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t += rng.uniform_positive() * window / static_cast<double>(n + 1);
    s.rel_times.push_back(t);
    s.amplitudes.push_back(rng.normal());
  }
  return s;
}

std::vector<Segment> random_segments(std::size_t count, std::size_t mean_size,
                                     std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Segment> segs(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.uniform_index(2 * mean_size);
    segs[i] = random_segment(rng, n, 1.0);
    segs[i].index = i;
    segs[i].start_time = static_cast<double>(i);
  }
  return segs;
}

// Single DP evaluation as a function of segment size.
void BM_EditDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(42);
  const Segment a = random_segment(rng, n, 1.0);
  const Segment b = random_segment(rng, n, 1.0);
  const CostParams p{1.0, 1.0, 1.0, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(edit_distance(a, b, p));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_EditDistance)->RangeMultiplier(2)->Range(4, 64)->Complexity();

// Dense all-pairs matrix (the quadratic-in-W path used for exports).
void BM_DistanceMatrixDense(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  const auto segs = random_segments(w, 5, 7);
  const CostParams p{1.0, 1.0, 1.0, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_matrix(segs, p, 1));
  }
}
BENCHMARK(BM_DistanceMatrixDense)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

// Banded matrix: the linear-in-W path the sliding analysis rides on.
void BM_DistanceMatrixBanded(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  const std::size_t band = 50;
  const auto segs = random_segments(w, 5, 11);
  const CostParams p{1.0, 1.0, 1.0, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(banded_distance_matrix(segs, p, band, 1));
  }
}
BENCHMARK(BM_DistanceMatrixBanded)
    ->Arg(256)
    ->Arg(1024)
    ->Unit(benchmark::kMillisecond);

}  // namespace
