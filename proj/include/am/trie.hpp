#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "am/result.hpp"
#include "am/rng.hpp"
#include "am/words.hpp"

namespace am {

// LeafWeighted — at erased depths, pick a leaf uniformly (each child weighted
//                by its subtree leaf count); matches brute-force UniformRandom
//                in distribution. Default.
// FirstChild   — smallest symbol at every erased depth; deterministic.
enum class PathPolicy { LeafWeighted, FirstChild };

enum class TrieMode { Eager, Lazy };

// Permutation listing q's unerased positions in increasing order, then its
// erased positions in increasing order. sigma[d] = original position read at
// trie depth d.
std::vector<std::uint32_t> permutation_for(std::span<const Symbol> q);
std::vector<std::uint32_t> permutation_for_mask(std::uint32_t n, std::uint64_t erased_mask);

// Trie over sigma-permuted stored words. Nodes live in an arena; children are
// symbol-sorted sparse vectors; every node carries the count of stored words
// below it.
class PermutationTrie {
 public:
  PermutationTrie(const WordSet& s, std::vector<std::uint32_t> sigma);

  struct Node {
    std::vector<std::pair<Symbol, std::uint32_t>> children;  // sorted by symbol
    std::uint64_t leaf_count = 0;
  };

  const std::vector<std::uint32_t>& sigma() const { return sigma_; }
  const Node& node(std::uint32_t idx) const { return arena_[idx]; }
  const Node& root() const { return arena_[0]; }
  // Nodes excluding the root (one per stored symbol edge).
  std::uint64_t node_count() const { return arena_.size() - 1; }

 private:
  std::vector<std::uint32_t> sigma_;
  std::vector<Node> arena_;
};

struct TrieBuildStats {
  std::uint64_t trie_count = 0;
  std::uint64_t node_count = 0;   // non-root nodes over all tries
  std::uint64_t bits_estimate = 0;
};

// Algorithm state: one canonical trie per erasure-pattern bitmask. Retrieval
// only ever selects permutations of the unerased-first form, one per pattern,
// so 2^n tries cover every query. Eager builds them all up front (n capped);
// Lazy builds on first use and memoizes, publish-once under a mutex.
class TrieMemory {
 public:
  static constexpr std::uint32_t kDefaultEagerCap = 16;

  // Throws ResourceError for Eager with n above the cap. Requires n <= 64.
  static TrieMemory build(const WordSet& s, TrieMode mode,
                          std::uint32_t eager_cap = kDefaultEagerCap);

  std::uint32_t word_length() const { return store_.word_length(); }
  std::uint32_t alphabet_size() const { return store_.alphabet_size(); }
  std::size_t stored_count() const { return store_.size(); }
  TrieMode mode() const { return mode_; }

  // Trie for an erasure-pattern bitmask; lazily built when absent.
  const PermutationTrie& trie_for(std::uint64_t erased_mask) const;

  TrieBuildStats stats() const;
  // Symbol insertion steps spent building tries so far.
  std::uint64_t store_op_count() const;

 private:
  TrieMemory(const WordSet& s, TrieMode mode);

  const PermutationTrie& build_and_publish(std::uint64_t erased_mask) const;

  WordSet store_;  // retained for lazy builds
  TrieMode mode_;
  mutable std::unique_ptr<std::mutex> mutex_;  // owned pointer keeps the type movable
  mutable std::map<std::uint64_t, std::unique_ptr<PermutationTrie>> tries_;
};

// Trie descent: unerased symbols in sigma-order, then one rank-weighted path
// through the erased suffix. op_count = trie nodes visited (root included),
// n + 1 on a full descent regardless of m and l.
RetrievalResult retrieve(const TrieMemory& mem, std::span<const Symbol> q, PathPolicy policy,
                         Rng& rng);
RetrievalResult retrieve(const TrieMemory& mem, std::span<const Symbol> q,
                         PathPolicy policy = PathPolicy::LeafWeighted, std::uint64_t seed = 0);

}  // namespace am
