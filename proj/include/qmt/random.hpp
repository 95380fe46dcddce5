#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace qmt {

/// SplitMix64 finalizer; a bijective mix of 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for one Monte Carlo trial as a pure function of its coordinates in a
/// sweep. Distinct coordinates give statistically independent streams.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t method,
                                    std::uint64_t snr_index,
                                    std::uint64_t trial_index) noexcept {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ (method + 0x51ED270B27B1F1D5ULL));
  h = splitmix64(h ^ (snr_index + 0x2545F4914F6CDD1DULL));
  h = splitmix64(h ^ (trial_index + 0x6A09E667F3BCC909ULL));
  return h;
}

/// A seeded random stream owned by exactly one trial.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on [0, 1).
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double normal() { return normal_(engine_); }

  /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> complex_normal(double variance) {
    const double sd = std::sqrt(0.5 * variance);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {sd * re, sd * im};
  }

  std::uint64_t uniform_index(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qmt
