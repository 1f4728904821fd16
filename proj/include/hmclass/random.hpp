#pragma once

// Seeded generation used by the verification suites. Uniform variates are
// built directly from mt19937_64 output (top 53 bits) so draws are
// bit-identical across standard libraries.

#include <cmath>
#include <cstdint>
#include <random>

namespace hmclass {

/// SplitMix64 finalizer; derives independent per-case seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double open_uniform() { return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [lo, hi].
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Standard exponential, for flat Dirichlet splits.
  double exponential() { return -std::log(open_uniform()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hmclass
