#pragma once

#include <cstdint>

namespace otg {

/// SplitMix64 (Steele, Lea, Flood 2014). The state starts at the seed and
/// advances by the golden-ratio increment before each output, so a given seed
/// yields the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound] by rejection; bound < 2^64 - 1.
  std::uint64_t uniform_inclusive(std::uint64_t bound) {
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t v;
    do {
      v = next();
    } while (v > limit);
    return v % range;
  }

 private:
  std::uint64_t state_;
};

}  // namespace otg
