#pragma once

#include <cstdint>
#include <vector>

#include "am/result.hpp"
#include "am/rng.hpp"
#include "am/words.hpp"

namespace am {

// Included — the storage rule ranges over all index pairs, i1 = i2 included
//            (diagonal marks used letters). Default.
// Excluded — cross-cluster connections only, the original clique formulation.
enum class SelfPairs { Included, Excluded };

// Binary clique network: n clusters of l neurons, neuron (i, j) = "position i
// holds letter j". Connections in a bit-packed symmetric (n*l)^2 matrix.
class GBNNetwork {
 public:
  static GBNNetwork store(const WordSet& s, SelfPairs self_pairs = SelfPairs::Included);

  std::uint32_t clusters() const { return clusters_; }
  std::uint32_t letters() const { return letters_; }
  std::uint32_t neuron_count() const { return clusters_ * letters_; }
  std::uint64_t gamma() const { return gamma_; }
  SelfPairs self_pairs() const { return self_pairs_; }

  // Throws std::invalid_argument when g < n*l.
  void set_gamma(std::uint64_t g);

  bool connected(std::uint32_t u, std::uint32_t v) const {
    return rows_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] >> (v & 63) & 1;
  }
  bool connected(std::uint32_t i1, std::uint32_t j1, std::uint32_t i2, std::uint32_t j2) const {
    return connected(i1 * letters_ + j1, i2 * letters_ + j2);
  }

  // Cross-cluster connection count model: C(n,2) * l^2 bits.
  std::uint64_t memory_bits() const;
  // Dense figure: (n*l)^2 bits.
  std::uint64_t memory_bits_dense() const;
  // Pair insertions at store time: m * n^2.
  std::uint64_t store_op_count() const { return stored_count_ * clusters_ * clusters_; }

  std::span<const std::uint64_t> row(std::uint32_t u) const {
    return {rows_.data() + static_cast<std::size_t>(u) * row_words_, row_words_};
  }
  std::uint32_t row_words() const { return row_words_; }

 private:
  GBNNetwork() = default;

  void connect(std::uint32_t u, std::uint32_t v);

  std::uint32_t clusters_ = 0;
  std::uint32_t letters_ = 0;
  std::uint32_t row_words_ = 0;
  std::uint64_t gamma_ = 0;
  std::uint64_t stored_count_ = 0;
  SelfPairs self_pairs_ = SelfPairs::Included;
  std::vector<std::uint64_t> rows_;  // bit-packed, row-major
};

// Binary neuron values, one bit per (cluster, letter) pair.
class NeuronActivation {
 public:
  NeuronActivation(std::uint32_t clusters, std::uint32_t letters);

  bool active(std::uint32_t i, std::uint32_t j) const {
    return bits_[(static_cast<std::size_t>(i) * letters_ + j) >> 6] >>
               ((static_cast<std::size_t>(i) * letters_ + j) & 63) &
           1;
  }
  void set(std::uint32_t i, std::uint32_t j);
  std::vector<Symbol> active_letters(std::uint32_t i) const;
  std::size_t active_count(std::uint32_t i) const;

  bool operator==(const NeuronActivation& other) const = default;

  std::uint32_t clusters() const { return clusters_; }
  std::uint32_t letters() const { return letters_; }

 private:
  friend NeuronActivation gbnn_update(const GBNNetwork&, const NeuronActivation&);

  std::uint32_t clusters_;
  std::uint32_t letters_;
  std::vector<std::uint64_t> bits_;
};

// v_0: 1 at (i, q(i)) for unerased clusters, erased clusters all-zero.
NeuronActivation gbnn_init(const GBNNetwork& net, std::span<const Symbol> q);

// One winner-take-all step: score = W v + gamma v, each cluster keeps its
// maxima. Every cluster ends with at least one active neuron.
NeuronActivation gbnn_update(const GBNNetwork& net, const NeuronActivation& v);

inline constexpr std::uint32_t kDefaultGbnnIters = 1;

// Iterates to the fixed iteration count or a fixed point, whichever first;
// decodes per cluster (unique active letter, otherwise a uniform pick among
// the active ones -> Ambiguous). Mismatch when membership is supplied and the
// decoded word is not stored. op_count = iterations * (n*l)^2 dense score
// accumulations.
RetrievalResult retrieve(const GBNNetwork& net, std::span<const Symbol> q,
                         std::uint32_t iterations, Rng& rng,
                         const WordSet* membership = nullptr);
RetrievalResult retrieve(const GBNNetwork& net, std::span<const Symbol> q,
                         std::uint32_t iterations = kDefaultGbnnIters, std::uint64_t seed = 0,
                         const WordSet* membership = nullptr);

}  // namespace am
