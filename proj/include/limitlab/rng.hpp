#pragma once

#include <cstdint>
#include <string>

namespace limitlab {

// SplitMix64 (Steele, Lea & Flood). The n-th output of the stream seeded
// with `seed` is mix(seed + n * kGamma), so it can be sampled at any index.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kSplitMixMul1 = 0xBF58476D1CE4E5B9ULL;
inline constexpr std::uint64_t kSplitMixMul2 = 0x94D049BB133111EBULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * kSplitMixMul1;
  z = (z ^ (z >> 27)) * kSplitMixMul2;
  return z ^ (z >> 31);
}

/// n-th output (n >= 1) of the SplitMix64 stream for `seed`.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t n) noexcept {
  return splitmix64_mix(seed + n * kSplitMixGamma);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept {
    state_ += kSplitMixGamma;
    return splitmix64_mix(state_);
  }
  /// Uniform-ish value in [0, bound) by reduction modulo `bound`.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// One-line record of the generator and its constants for artifact headers.
std::string rng_description();

}  // namespace limitlab
