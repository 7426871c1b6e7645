#ifndef MRQA_RNG_HPP
#define MRQA_RNG_HPP

#include <cstdint>
#include <random>

namespace mrqa {

// Derives a statistically independent sub-seed from a base seed and a consumer
// index (splitmix64 finalizer). Every parallel unit of work (surrogate
// realization, Monte Carlo cell, generator stage) gets its own derived seed so
// results are reproducible regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

// Seeded random source. The engine stream (std::mt19937_64) is fixed by the
// C++ standard and all variate transforms are implemented here, so sequences
// are bit-reproducible across standard libraries. Not thread-safe; use one
// instance per thread/unit of work.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Uniform on (0, 1); never returns 0 (safe under log()).
  double uniform_positive();

  // Uniform integer in [0, n); unbiased via rejection. n must be > 0.
  std::size_t uniform_index(std::size_t n);

  // Standard normal via the Marsaglia polar method (second variate cached).
  double normal();

  // Gamma(shape, scale) via Marsaglia–Tsang squeeze; shape < 1 boosted
  // through Gamma(shape + 1) · U^{1/shape}.
  double gamma(double shape, double scale);

  // Poisson(lambda) via Knuth's product-of-uniforms method. Intended for the
  // moderate rates used in the Monte Carlo oracles (lambda <= ~30).
  unsigned poisson(double lambda);

 private:
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace mrqa

#endif  // MRQA_RNG_HPP
