#include "am/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace am {

std::size_t erased_count(std::span<const Symbol> w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), kErased));
}

bool masked_eq(std::span<const Symbol> w1, std::span<const Symbol> w2) {
  if (w1.size() != w2.size())
    throw std::invalid_argument("masked_eq: length mismatch (" + std::to_string(w1.size()) +
                                " vs " + std::to_string(w2.size()) + ")");
  for (std::size_t i = 0; i < w1.size(); ++i) {
    if (w1[i] != w2[i] && !is_erased(w1[i]) && !is_erased(w2[i])) return false;
  }
  return true;
}

std::uint64_t ErasurePattern::bitmask() const {
  std::uint64_t mask = 0;
  for (auto p : positions) mask |= std::uint64_t{1} << p;
  return mask;
}

PartialWord apply_pattern(std::span<const Symbol> w, const ErasurePattern& pattern) {
  PartialWord out(w.begin(), w.end());
  for (auto p : pattern.positions) {
    if (p >= w.size()) throw std::invalid_argument("apply_pattern: position out of range");
    out[p] = kErased;
  }
  return out;
}

WordSet::WordSet(std::uint32_t alphabet_size, std::uint32_t word_length, std::vector<Word> words)
    : alphabet_size_(alphabet_size), word_length_(word_length), count_(words.size()) {
  flat_.reserve(count_ * word_length_);
  for (const auto& w : words) {
    if (w.size() != word_length_)
      throw std::invalid_argument("WordSet: word of length " + std::to_string(w.size()) +
                                  ", expected " + std::to_string(word_length_));
    flat_.insert(flat_.end(), w.begin(), w.end());
  }
  validate();
}

WordSet::WordSet(std::uint32_t alphabet_size, std::uint32_t word_length, std::vector<Symbol> flat)
    : alphabet_size_(alphabet_size),
      word_length_(word_length),
      count_(word_length ? flat.size() / word_length : 0),
      flat_(std::move(flat)) {
  if (word_length_ == 0 || flat_.size() % word_length_ != 0)
    throw std::invalid_argument("WordSet: flat buffer size not a multiple of word length");
  validate();
}

void WordSet::validate() const {
  if (alphabet_size_ < 2) throw std::invalid_argument("WordSet: alphabet size must be >= 2");
  if (count_ == 0) throw std::invalid_argument("WordSet: empty set");
  for (Symbol s : flat_) {
    if (s >= alphabet_size_)
      throw std::invalid_argument("WordSet: symbol " + std::to_string(s) +
                                  " outside alphabet of size " + std::to_string(alphabet_size_));
  }
  // Distinctness. Words pack into 64 bits whenever n*ceil(log2 l) <= 64;
  // otherwise fall back to sorting word indices.
  std::uint32_t bits = 1;
  while ((std::uint64_t{1} << bits) < alphabet_size_) ++bits;
  if (static_cast<std::uint64_t>(bits) * word_length_ <= 64) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count_ * 2);
    for (std::size_t i = 0; i < count_; ++i) {
      std::uint64_t key = 0;
      auto w = word(i);
      for (Symbol s : w) key = (key << bits) | s;
      if (!seen.insert(key).second) throw std::invalid_argument("WordSet: duplicate word");
    }
  } else {
    std::vector<std::size_t> idx(count_);
    for (std::size_t i = 0; i < count_; ++i) idx[i] = i;
    auto cmp = [&](std::size_t a, std::size_t b) {
      auto wa = word(a), wb = word(b);
      return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
    };
    std::sort(idx.begin(), idx.end(), cmp);
    for (std::size_t i = 1; i < count_; ++i) {
      auto a = word(idx[i - 1]), b = word(idx[i]);
      if (std::equal(a.begin(), a.end(), b.begin(), b.end()))
        throw std::invalid_argument("WordSet: duplicate word");
    }
  }
}

Word WordSet::word_copy(std::size_t i) const {
  auto w = word(i);
  return Word(w.begin(), w.end());
}

bool WordSet::contains(std::span<const Symbol> w) const {
  if (w.size() != word_length_) return false;
  for (std::size_t i = 0; i < count_; ++i) {
    auto cur = word(i);
    if (std::equal(cur.begin(), cur.end(), w.begin(), w.end())) return true;
  }
  return false;
}

std::vector<std::size_t> candidate_indices(const WordSet& s, std::span<const Symbol> q) {
  if (q.size() != s.word_length())
    throw std::invalid_argument("candidates: query length mismatch");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (masked_eq(s.word(i), q)) out.push_back(i);
  }
  return out;
}

std::vector<Word> candidates(const WordSet& s, std::span<const Symbol> q) {
  std::vector<Word> out;
  for (auto i : candidate_indices(s, q)) out.push_back(s.word_copy(i));
  return out;
}

}  // namespace am
