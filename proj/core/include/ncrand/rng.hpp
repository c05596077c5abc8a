#pragma once

// Seed derivation and the Gaussian stream shared by every Monte Carlo module.
// The derivation rule below is part of the output contract: reports quote the
// base seed, and identical (seed, trial) pairs must reproduce samples exactly.

#include <cstdint>
#include <random>

namespace ncrand {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Stable per-stream seed: stream i of base b is
/// splitmix64(splitmix64(b) ^ splitmix64(0x9E3779B97F4A7C15 * (i + 1))).
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) ^ splitmix64(0x9E3779B97F4A7C15ull * (stream + 1)));
}

/// Standard normal variates via Box-Muller over explicit mt19937_64 uniforms
/// (std::normal_distribution is implementation-defined; this stream is not).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on (0, 1]: (x >> 11) + 1 scaled by 2^-53.
  double uniform01() {
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
  }

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ncrand
