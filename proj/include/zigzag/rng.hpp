#pragma once

#include <cstdint>

namespace zigzag {

// SplitMix64: the fixed, documented generator used for all randomized
// operations so that runs are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  double unit() {  // [0, 1)
    return double(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace zigzag
