#pragma once

#include <cstdint>
#include <random>

namespace iips::hunter {

/// SplitMix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-trial seed: splitmix64(master ^ splitmix64(index + 0x9e3779b97f4a7c15)).
/// Frozen; changing it invalidates every recorded hunt.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// mt19937_64 with a portable bounded draw (rejection sampling), so the same
/// seed yields the same values on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace iips::hunter
