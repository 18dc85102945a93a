#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "am/result.hpp"
#include "am/words.hpp"

namespace am {

// PaperSum — diagonal holds the stored-word count (the weight formula summed
//            over all index pairs, i = j included). Default.
// Zeroed   — classical null-diagonal variant; swept in the harness.
enum class DiagonalMode { PaperSum, Zeroed };

// Query entries in {-1, 0, +1} (0 = erased); stored patterns in {-1, +1}.
using BipolarWord = std::vector<std::int8_t>;

std::uint32_t hopfield_bits_per_symbol(std::uint32_t l);

// Each symbol becomes its ceil(log2 l)-bit big-endian expansion, bit 0 -> -1,
// bit 1 -> +1. An erased symbol zeroes all of its bits.
BipolarWord encode_bipolar(std::span<const Symbol> w, std::uint32_t l);

// Inverse of encode_bipolar (entries >= 0 read as bit 1). Returns nullopt when
// some bit group decodes to a value >= l.
std::optional<Word> decode_bipolar(const BipolarWord& state, std::uint32_t l, std::uint32_t n);

// Integer correlation weights over n' = n * ceil(log2 l) bipolar neurons.
class HopfieldNetwork {
 public:
  static HopfieldNetwork store(const WordSet& s, DiagonalMode diag = DiagonalMode::PaperSum);

  std::uint32_t neuron_count() const { return neurons_; }
  std::uint32_t word_length() const { return word_length_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::uint64_t stored_count() const { return stored_count_; }
  DiagonalMode diagonal_mode() const { return diag_; }
  std::int32_t weight(std::uint32_t i, std::uint32_t j) const {
    return weights_[static_cast<std::size_t>(i) * neurons_ + j];
  }

  // Upper-triangle weights at ceil(log2(2m+1)) bits each; diagonal adds
  // n' * ceil(log2(m+1)) when kept.
  std::uint64_t memory_bits(bool include_diagonal = false) const;
  // Multiply-accumulates spent storing: m * n'^2.
  std::uint64_t store_op_count() const {
    return stored_count_ * neurons_ * neurons_;
  }

 private:
  HopfieldNetwork() = default;

  std::uint32_t neurons_ = 0;
  std::uint32_t word_length_ = 0;
  std::uint32_t alphabet_size_ = 0;
  std::uint64_t stored_count_ = 0;
  DiagonalMode diag_ = DiagonalMode::PaperSum;
  std::vector<std::int32_t> weights_;  // dense n' x n', symmetric
};

struct HopfieldRun {
  BipolarWord state;
  bool converged = false;
  std::uint32_t iterations = 0;
  std::uint64_t op_count = 0;  // iterations * n'^2 multiply-accumulates
};

inline constexpr std::uint32_t kDefaultHopfieldIters = 10;

// Synchronous sign iteration v <- sign(M v), sign(x) = +1 iff x >= 0, from the
// query state (erasures as 0). Stops at the first fixed point or after
// max_iters; iterations counts state-changing updates (the confirming update
// is free). clamp_known resets unerased entries to their query values after
// each update.
HopfieldRun retrieve(const HopfieldNetwork& net, const BipolarWord& query,
                     std::uint32_t max_iters = kDefaultHopfieldIters, bool clamp_known = false);

// encode -> iterate -> decode. Mismatch when the final state fails to decode
// or (when membership is supplied) decodes outside the stored set.
RetrievalResult retrieve_word(const HopfieldNetwork& net, std::span<const Symbol> q,
                              std::uint32_t max_iters = kDefaultHopfieldIters,
                              bool clamp_known = false, const WordSet* membership = nullptr);

}  // namespace am
