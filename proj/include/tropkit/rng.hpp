#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace tropkit {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic seeded generator. Bounded draws use rejection sampling so
/// outputs depend only on the engine stream, not on library distribution
/// internals. Substreams are derived from the original seed and a tag, which
/// keeps parallel or reordered consumers replayable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(detail::splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw from the inclusive range [lo, hi].
  long long uniform(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("tropkit: empty sampling range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<long long>(next_u64());
    std::uint64_t range = span + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % range);
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return static_cast<long long>(static_cast<std::uint64_t>(lo) + draw % range);
  }

  /// Uniform in [0, 1).
  double uniform_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_unit() < p; }

  /// Independent substream identified by tag; derived from the original
  /// seed, so forks do not depend on how many draws happened before.
  Rng fork(std::uint64_t tag) const {
    return Rng(detail::splitmix64(seed_ ^ detail::splitmix64(tag + 1)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tropkit
