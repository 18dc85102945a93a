#pragma once

#include <optional>
#include <vector>

#include "am/result.hpp"
#include "am/rng.hpp"
#include "am/words.hpp"

namespace am {

// UniformRandom — uniform over the candidate set (default).
// FirstStored   — first candidate in stored order; deterministic.
// MaxWeight     — argmax of the word measure, ties by stored order. With the
//                 default uniform measure this degenerates to FirstStored.
enum class TiePolicy { UniformRandom, FirstStored, MaxWeight };

// Brute-force maximum-likelihood memory: a verbatim copy of S, scanned in
// full on every query. Optional per-word measure for weighted retrieval.
class BruteForceMemory {
 public:
  static BruteForceMemory store(WordSet s, std::optional<std::vector<double>> weights = {});

  const WordSet& stored() const { return store_; }
  bool has_weights() const { return !weights_.empty(); }
  const std::vector<double>& weights() const { return weights_; }

  // Ordered-list storage model: m * n * ceil(log2 l) bits.
  std::uint64_t memory_bits() const;
  // Symbols copied at store time (m * n).
  std::uint64_t store_op_count() const { return store_.size() * store_.word_length(); }

 private:
  explicit BruteForceMemory(WordSet s, std::vector<double> weights)
      : store_(std::move(s)), weights_(std::move(weights)) {}

  WordSet store_;
  std::vector<double> weights_;  // empty = uniform
};

// Full scan of the m stored words; op_count = m * n symbol comparisons.
RetrievalResult retrieve(const BruteForceMemory& mem, std::span<const Symbol> q,
                         TiePolicy policy, Rng& rng);
RetrievalResult retrieve(const BruteForceMemory& mem, std::span<const Symbol> q,
                         TiePolicy policy = TiePolicy::UniformRandom, std::uint64_t seed = 0);

}  // namespace am
