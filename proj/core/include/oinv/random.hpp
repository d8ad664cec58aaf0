#pragma once

#include <cstdint>
#include <random>

#include "oinv/rational.hpp"

namespace oinv {

/// Seeded generator with a fixed, platform-independent draw procedure.
///
/// Raw words come from std::mt19937_64 (whose output sequence is fixed by
/// the standard). Bounded integers use rejection sampling on the raw word,
/// so results do not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// f/d with f uniform in [-magnitude, magnitude] and d uniform in
  /// [1, magnitude]; f is drawn before d.
  Rational rational(std::int64_t magnitude);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer of seed + index; used to give each trial of a
/// seeded procedure its own independent stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace oinv
