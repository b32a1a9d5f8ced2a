#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace plsearch {

using Seed = std::uint64_t;

/// Seed used by every entry point when the caller does not pass one.
inline constexpr Seed kDefaultSeed = 20011101;

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001B3ULL;
  }
  return h;
}

__extension__ using uint128_t = unsigned __int128;

/// Child seed splitting rule: every random purpose gets its own stream,
///
///   child = mix64(mix64(parent ^ fnv1a(purpose)) + index)
///
/// so results depend only on (parent seed, purpose, index) and never on the
/// order or thread in which streams are consumed.
constexpr Seed derive_seed(Seed parent, std::string_view purpose,
                           std::uint64_t index = 0) noexcept {
  return mix64(mix64(parent ^ fnv1a(purpose)) + index);
}

/// Reproducible generator. The engine is mt19937_64; the bounded-integer and
/// real mappings are defined here (not by <random> distributions) so that a
/// given seed produces the same stream with every standard library.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    auto product = static_cast<uint128_t>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<uint128_t>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  template <class Container>
  void shuffle(Container& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace plsearch
