#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "mrqa/medit.hpp"
#include "mrqa/recurrence.hpp"
#include "mrqa/rng.hpp"

namespace {

using namespace mrqa;

DistanceMatrix random_matrix(std::size_t w, std::uint64_t seed) {
  Rng rng(seed);
  DistanceMatrix d;
  d.width = w;
  d.data.assign(w * w, 0.0);
  d.start_times.resize(w);
  for (std::size_t i = 0; i < w; ++i) d.start_times[i] = static_cast<double>(i);
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = i + 1; j < w; ++j) {
      const double v = rng.uniform_positive();
      d.at(i, j) = v;
      d.at(j, i) = v;
    }
  }
  return d;
}

BandedDistances random_banded(std::size_t w, std::size_t band,
                              std::uint64_t seed) {
  Rng rng(seed);
  BandedDistances d;
  d.width = w;
  d.band = band;
  d.data.assign(w * (band + 1), 0.0);
  d.start_times.resize(w);
  for (std::size_t i = 0; i < w; ++i) {
    d.start_times[i] = static_cast<double>(i);
    for (std::size_t off = 1; off <= band && i + off < w; ++off) {
      d.data[i * (band + 1) + off] = rng.uniform_positive();
    }
  }
  return d;
}

void BM_ThresholdByRate(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  const auto d = random_matrix(w, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(threshold_by_rate(d, 0.15, 1));
  }
}
BENCHMARK(BM_ThresholdByRate)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_DiagonalHistogram(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  const auto rp = threshold_by_rate(random_matrix(w, 5), 0.15, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diagonal_histogram(rp));
  }
}
BENCHMARK(BM_DiagonalHistogram)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

// Full sliding-window DET profile over banded storage: the reference
// experiment's per-realization workload.
void BM_SlidingWindowDet(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  const WindowSpec spec{200, 0.75};
  const auto d = random_banded(w, spec.window_size, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sliding_window_det(d, spec, 0.15, 2, 1));
  }
}
BENCHMARK(BM_SlidingWindowDet)
    ->Arg(1000)
    ->Arg(4000)
    ->Unit(benchmark::kMillisecond);

}  // namespace
