#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace scpd::mutate {

/// Seeded mt19937_64 with hand-rolled draws. The standard distributions are
/// implementation-defined, so they would make output depend on the stdlib.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Weighted boolean. Always consumes exactly one draw.
  bool roll(double chance) { return uniform() < chance; }

  /// Uniform in [0, n); n must be positive. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      if (j != i - 1) std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes several values into one seed (splitmix64 steps).
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

}  // namespace scpd::mutate
