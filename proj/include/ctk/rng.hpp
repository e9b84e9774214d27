#pragma once

#include <cstdint>

namespace ctk {

// SplitMix64: seedable, splittable 64-bit generator (Steele, Lea & Flood).
// All randomness in this library flows through an explicitly passed
// SplitMix64&. Parallel work splits the stream with split() instead of
// sharing one generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
  }

  // Independent child stream; advances this generator by one draw.
  SplitMix64 split() { return SplitMix64(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace ctk
