#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evidence/rational.hpp"

namespace evidence {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for stream `index` under `seed`; used for per-record and
/// per-trial streams.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Counter-based generator: word i of stream (seed, id) is a pure function of
/// (seed, id, i), so any partitioning of streams across threads reproduces
/// the sequential draws.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(derive_seed(seed, stream_id)) {}

  std::uint64_t next() { return mix64(key_ ^ mix64(counter_++)); }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Samples an index with exactly the given rational probabilities by drawing a
/// uniform integer below their common denominator.
class DiscreteSampler {
 public:
  /// Probabilities must be nonnegative and sum to one; their common
  /// denominator must fit in 64 bits. Throws Error{invalid_spec} otherwise.
  explicit DiscreteSampler(std::span<const Rational> probs);

  std::size_t draw(CounterStream& stream) const;
  std::size_t size() const { return cumulative_.size(); }

 private:
  std::uint64_t denominator_ = 1;
  std::vector<std::uint64_t> cumulative_;
};

}  // namespace evidence
