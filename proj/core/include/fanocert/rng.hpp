// Deterministic RNG for sampling and seed splitting.  SplitMix64 keeps
// streams portable across platforms and standard-library versions, and the
// per-(class, index) derivation lets a report grow without perturbing
// samples that were already drawn.
#pragma once

#include <cstdint>

namespace fanocert {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via 128-bit multiply; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const auto wide = static_cast<unsigned __int128>(next()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Seed for sample `index` of class `cls`: hash the triple so that adding
// samples or classes never shifts earlier streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cls, std::uint64_t index) {
  SplitMix64 a(base ^ (0xa0761d6478bd642fULL + cls));
  const std::uint64_t mid = a.next();
  SplitMix64 b(mid ^ (0xe7037ed1a0b428dbULL + index));
  return b.next();
}

}  // namespace fanocert
