#pragma once

// Deterministic random numbers for sweeps and simulation. splitmix64 is
// used instead of <random> engines plus distributions because report
// byte-reproducibility across standard library implementations is part of
// the library contract, and uniform_real_distribution output is not pinned
// by the standard.

#include <cstdint>

namespace spinphase {

inline constexpr std::uint64_t default_seed = 42;

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

struct splitmix64 {
  std::uint64_t state = 0;

  explicit splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    return detail::mix64(z);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Independent stream for (seed, index); used to give every simulation shot
// its own generator so results are independent of evaluation order.
inline splitmix64 stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(detail::mix64(seed ^ detail::mix64(index + 0x9E3779B97F4A7C15ull)));
}

inline constexpr const char* generator_name = "splitmix64";

}  // namespace spinphase
