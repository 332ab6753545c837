#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "linkne/rational.hpp"

namespace linkne {

/// Seed split scheme: every consumer derives its own stream from the user
/// seed as derive_seed(seed, stream_id), where derive_seed runs two rounds of
/// SplitMix64 over seed ^ golden * (stream_id + 1). Streams are stable across
/// platforms and thread counts.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic generator: std::mt19937_64 (its raw output sequence is fixed
/// by the standard) with our own bounded-integer mapping.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi], by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return (next() >> 63) != 0; }
  /// Integer in [-bound, bound] as a rational.
  Rat small_int(std::int64_t bound) { return Rat(static_cast<long>(uniform_int(-bound, bound))); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace linkne
