#include "mrqa/rng.hpp"

#include <cassert>
#include <cmath>

#include "mrqa/errors.hpp"

namespace mrqa {

namespace {

// splitmix64 finalizer; full-period bijection on u64.
std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  // Two finalizer rounds decorrelate consecutive indices under any base.
  return splitmix64(splitmix64(base) ^ splitmix64(index));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_positive() {
  double u;
  do {
    u = uniform();
  } while (u <= 0.0);
  return u;
}

std::size_t Rng::uniform_index(std::size_t n) {
  assert(n > 0);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Marsaglia polar method.
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  cached_normal_ = v * factor;
  has_cached_normal_ = true;
  return u * factor;
}

double Rng::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw invalid_input_error("gamma variate requires shape > 0 and scale > 0");
  }
  if (shape < 1.0) {
    // Boost: Gamma(shape) = Gamma(shape + 1) * U^{1/shape}.
    const double u = uniform_positive();
    return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia–Tsang squeeze method.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_positive();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v * scale;
    }
  }
}

unsigned Rng::poisson(double lambda) {
  if (!(lambda > 0.0)) {
    throw invalid_input_error("poisson variate requires lambda > 0");
  }
  // Knuth: multiply uniforms until the product drops below exp(-lambda).
  // Split large rates so the running product stays away from underflow.
  unsigned count = 0;
  double remaining = lambda;
  while (remaining > 16.0) {
    const double threshold = std::exp(-16.0);
    double p = 1.0;
    unsigned k = 0;
    for (;;) {
      p *= uniform_positive();
      if (p < threshold) break;
      ++k;
    }
    count += k;
    remaining -= 16.0;
  }
  const double threshold = std::exp(-remaining);
  double p = 1.0;
  for (;;) {
    p *= uniform_positive();
    if (p < threshold) break;
    ++count;
  }
  return count;
}

}  // namespace mrqa
