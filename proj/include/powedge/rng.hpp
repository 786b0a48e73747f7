#pragma once

#include <cstdint>
#include <random>

namespace powedge {

/// mt19937_64 with a portable bounded draw. std::uniform_int_distribution is
/// implementation-defined, which would make seeded instances differ across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  unsigned in_range(unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(below(hi - lo + 1ULL)); }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 of (base, index): independent per-instance seeds from one run seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace powedge
