#pragma once

#include <cstdint>
#include <random>

namespace gencover {

/// Seeded generator used by every randomized routine.
///
/// Algorithm: std::mt19937_64 (fully specified by the C++ standard) seeded with
/// the 64-bit seed; bounded draws use rejection sampling on the raw 64-bit
/// output followed by a modulo, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives independent per-trial seeds from (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gencover
