#pragma once

// Distribution helpers with a fixed algorithm. The standard library leaves
// uniform_int_distribution and shuffle implementation-defined, which would
// make seeded outputs differ between toolchains.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace hublab {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace hublab
