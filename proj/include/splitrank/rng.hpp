#pragma once

#include <cstdint>

namespace splitrank {

/// splitmix64 generator. Self-contained so seeded sweeps reproduce bit-for-bit
/// across standard libraries (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] (inclusive). Modulo bias is irrelevant at the tiny
  /// ranges used here.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Deterministic stream for sub-task i of a seeded sweep.
  static Rng derived(std::uint64_t seed, std::uint64_t index) {
    Rng base(seed);
    return Rng(base.next() ^ (0x517cc1b727220a95ULL * (index + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace splitrank
