#pragma once

#include <cstdint>

namespace elimgame {

/// SplitMix64 generator. Cheap, seedable, and usable as a counter-based
/// stream: `stream(seed, index)` yields an independent generator for each
/// (seed, index) pair, so parallel workers can reproduce any round of a
/// simulation without sharing state.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  constexpr result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(operator()() >> 11) * 0x1.0p-53; }

  /// Uniform index in [0, n).
  std::uint64_t index(std::uint64_t n) { return operator()() % n; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Independent stream keyed by (seed, index).
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t key =
        mix(seed + 0x9E3779B97F4A7C15ull) ^ mix((index + 1) * 0xDA942042E4DD58B5ull);
    return SplitMix64(key);
  }

 private:
  std::uint64_t state_;
};

}  // namespace elimgame
