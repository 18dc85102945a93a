#include "am/sampling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace am {

namespace {

constexpr std::uint64_t kFisherYatesLimit = std::uint64_t{1} << 20;

std::uint32_t bits_per_symbol(std::uint32_t l) {
  std::uint32_t bits = 1;
  while ((std::uint64_t{1} << bits) < l) ++bits;
  return bits;
}

// index -> word, big-endian base-l digits
void decode_index(std::uint64_t idx, std::uint32_t l, std::uint32_t n, Symbol* out) {
  for (std::uint32_t i = n; i-- > 0;) {
    out[i] = static_cast<Symbol>(idx % l);
    idx /= l;
  }
}

}  // namespace

std::optional<std::uint64_t> universe_size(std::uint32_t l, std::uint32_t n) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (total > UINT64_MAX / l) return std::nullopt;
    total *= l;
  }
  return total;
}

WordSet sample_word_set(std::uint32_t l, std::uint32_t n, std::uint64_t m, Rng& rng) {
  if (l < 2) throw std::invalid_argument("sample_word_set: alphabet size must be >= 2");
  if (n == 0) throw std::invalid_argument("sample_word_set: word length must be >= 1");
  if (m == 0) throw std::invalid_argument("sample_word_set: m must be >= 1");
  auto total = universe_size(l, n);
  if (total && m > *total)
    throw std::invalid_argument("sample_word_set: m = " + std::to_string(m) +
                                " exceeds l^n = " + std::to_string(*total));

  std::vector<Symbol> flat(m * n);
  if (total && *total <= kFisherYatesLimit) {
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(*total));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t i = 0; i < m; ++i) {
      std::uint64_t j = i + rng.below(*total - i);
      std::swap(idx[i], idx[j]);
      decode_index(idx[i], l, n, flat.data() + i * n);
    }
  } else {
    // m << l^n here, so collisions are rare; rejecting the whole word on a
    // collision keeps the subset distribution exactly uniform.
    const std::uint32_t bits = bits_per_symbol(l);
    if (static_cast<std::uint64_t>(bits) * n <= 64) {
      std::unordered_set<std::uint64_t> seen;
      seen.reserve(static_cast<std::size_t>(m * 2));
      for (std::uint64_t i = 0; i < m;) {
        std::uint64_t key = 0;
        Symbol* w = flat.data() + i * n;
        for (std::uint32_t p = 0; p < n; ++p) {
          w[p] = static_cast<Symbol>(rng.below(l));
          key = (key << bits) | w[p];
        }
        if (seen.insert(key).second) ++i;
      }
    } else {
      std::set<Word> seen;
      for (std::uint64_t i = 0; i < m;) {
        Word w(n);
        for (std::uint32_t p = 0; p < n; ++p) w[p] = static_cast<Symbol>(rng.below(l));
        if (seen.insert(w).second) {
          std::copy(w.begin(), w.end(), flat.begin() + static_cast<std::size_t>(i * n));
          ++i;
        }
      }
    }
  }
  return WordSet(l, n, std::move(flat));
}

WordSet sample_word_set(std::uint32_t l, std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  Rng rng(seed);
  return sample_word_set(l, n, m, rng);
}

Word sample_word(std::uint32_t l, std::uint32_t n, Rng& rng) {
  Word w(n);
  for (std::uint32_t i = 0; i < n; ++i) w[i] = static_cast<Symbol>(rng.below(l));
  return w;
}

ErasurePattern sample_pattern(std::uint32_t n, std::uint32_t r, Rng& rng) {
  if (r > n) throw std::invalid_argument("sample_pattern: r > n");
  // partial Fisher-Yates over positions
  std::vector<std::uint32_t> pos(n);
  for (std::uint32_t i = 0; i < n; ++i) pos[i] = i;
  ErasurePattern p;
  p.positions.resize(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    std::uint64_t j = i + rng.below(n - i);
    std::swap(pos[i], pos[j]);
    p.positions[i] = pos[i];
  }
  std::sort(p.positions.begin(), p.positions.end());
  return p;
}

PartialWord erase(std::span<const Symbol> w, std::uint32_t r, Rng& rng) {
  if (r > w.size())
    throw std::invalid_argument("erase: r = " + std::to_string(r) + " exceeds word length " +
                                std::to_string(w.size()));
  auto pattern = sample_pattern(static_cast<std::uint32_t>(w.size()), r, rng);
  return apply_pattern(w, pattern);
}

PartialWord erase(std::span<const Symbol> w, std::uint32_t r, std::uint64_t seed) {
  Rng rng(seed);
  return erase(w, r, rng);
}

}  // namespace am
