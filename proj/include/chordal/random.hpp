#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chordal/bignat.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// Deterministic bit source. Streams derived from one seed by index are
// independent of each other and of the order in which they are used.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}
  static RandomStream derived(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  std::uint64_t draws() const { return draws_; }

  // Uniform in [0, w), by rejection on bit-length(w)-bit strings.
  BigNat uniform_below(const BigNat& w);
  std::uint64_t uniform_below(std::uint64_t w);
  // Uniform in [0, 2^bits).
  BigNat random_bits(unsigned bits);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

// Index i with probability weights[i] / sum(weights); zero weights are never chosen.
std::size_t categorical(const std::vector<BigNat>& weights, RandomStream& rng);
std::size_t categorical(const std::vector<BigNat>& weights, const BigNat& total, RandomStream& rng);

// Uniform size-k subset of `from` (sorted).
LabelSet random_subset(const LabelSet& from, std::size_t k, RandomStream& rng);
// Uniform size-k subset of `from` that contains `must`.
LabelSet random_subset_containing(const LabelSet& from, std::size_t k, Label must, RandomStream& rng);
// Uniform size-k subset of `from` that is not contained in `avoid_within`.
LabelSet random_subset_not_within(const LabelSet& from, std::size_t k, const LabelSet& avoid_within,
                                  RandomStream& rng);
// Uniform nonempty subset of `from`: one draw in [1, 2^m - 1], read as a bit mask.
LabelSet random_nonempty_subset(const LabelSet& from, RandomStream& rng);

}  // namespace chordal
