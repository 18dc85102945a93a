#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace am {

using Symbol = std::uint32_t;

// Erasure mark. Lives outside every valid alphabet [0, l); written as '?' in files.
inline constexpr Symbol kErased = 0xFFFFFFFFu;

// A complete word is a vector of n symbols in [0, l). A partial word may
// additionally hold kErased entries.
using Word = std::vector<Symbol>;
using PartialWord = std::vector<Symbol>;

inline bool is_erased(Symbol s) { return s == kErased; }

std::size_t erased_count(std::span<const Symbol> w);

// d(w1, w2) == 0: at every position the symbols agree or at least one is erased.
// Throws std::invalid_argument on length mismatch.
bool masked_eq(std::span<const Symbol> w1, std::span<const Symbol> w2);

// r distinct erased positions of a length-n word, kept sorted ascending.
struct ErasurePattern {
  std::vector<std::uint32_t> positions;

  std::size_t size() const { return positions.size(); }
  // Bitmask form, valid for n <= 64.
  std::uint64_t bitmask() const;
};

// Replaces the pattern's positions of w by kErased.
PartialWord apply_pattern(std::span<const Symbol> w, const ErasurePattern& pattern);

// The stored set S: m distinct words of identical length n over alphabet [0, l).
class WordSet {
 public:
  // Validates l >= 2, shape, symbol range and distinctness.
  WordSet(std::uint32_t alphabet_size, std::uint32_t word_length, std::vector<Word> words);

  // Flat storage variant (m * n symbols, row-major).
  WordSet(std::uint32_t alphabet_size, std::uint32_t word_length, std::vector<Symbol> flat);

  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::uint32_t word_length() const { return word_length_; }
  std::size_t size() const { return count_; }

  std::span<const Symbol> word(std::size_t i) const {
    return {flat_.data() + i * word_length_, word_length_};
  }
  Word word_copy(std::size_t i) const;

  // Linear membership scan.
  bool contains(std::span<const Symbol> w) const;

 private:
  void validate() const;

  std::uint32_t alphabet_size_;
  std::uint32_t word_length_;
  std::size_t count_;
  std::vector<Symbol> flat_;
};

// Indices of stored words matching q up to erasures, in stored order.
std::vector<std::size_t> candidate_indices(const WordSet& s, std::span<const Symbol> q);

// The matching words themselves (S(q) in stored order).
std::vector<Word> candidates(const WordSet& s, std::span<const Symbol> q);

// Calls fn(pattern) for every r-subset of [0, n), in lexicographic order.
template <typename Fn>
void for_each_pattern(std::uint32_t n, std::uint32_t r, Fn&& fn) {
  ErasurePattern p;
  p.positions.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) p.positions[i] = i;
  if (r > n) return;
  while (true) {
    fn(static_cast<const ErasurePattern&>(p));
    // next combination
    std::uint32_t i = r;
    while (i > 0 && p.positions[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++p.positions[i - 1];
    for (std::uint32_t j = i; j < r; ++j) p.positions[j] = p.positions[j - 1] + 1;
  }
}

}  // namespace am
