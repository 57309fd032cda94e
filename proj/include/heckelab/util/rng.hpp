#pragma once

#include <cstdint>

namespace heckelab {

// SplitMix64. Deterministic sequences for randomized checks and generic
// linear combinations; never used for anything cryptographic.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  // small signed integer in [-span, span]
  long small_int(long span) {
    return static_cast<long>(below(2 * static_cast<std::uint64_t>(span) + 1)) - span;
  }

 private:
  std::uint64_t state_;
};

}  // namespace heckelab
