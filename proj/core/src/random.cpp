#include "oinv/random.hpp"

#include <limits>

namespace oinv {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits; reject words above it.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t word = next();
  while (word >= limit) word = next();
  return lo + static_cast<std::int64_t>(word % range);
}

Rational SeededRng::rational(std::int64_t magnitude) {
  const std::int64_t f = uniform(-magnitude, magnitude);
  const std::int64_t d = uniform(1, magnitude);
  Rational r(static_cast<long>(f), static_cast<long>(d));
  r.canonicalize();
  return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace oinv
