#pragma once

#include <cstdint>
#include <optional>

#include "am/rng.hpp"
#include "am/words.hpp"

namespace am {

// l^n as a 64-bit count, or nullopt on overflow.
std::optional<std::uint64_t> universe_size(std::uint32_t l, std::uint32_t n);

// Uniform sample of m distinct words (a uniform m-subset of [0,l)^n).
// Partial Fisher-Yates over enumerated word indices when l^n <= 2^20,
// rejection sampling of distinct words otherwise; both exactly uniform.
// Throws std::invalid_argument when m > l^n or m == 0.
WordSet sample_word_set(std::uint32_t l, std::uint32_t n, std::uint64_t m, Rng& rng);
WordSet sample_word_set(std::uint32_t l, std::uint32_t n, std::uint64_t m, std::uint64_t seed);

// Uniform word of [0,l)^n.
Word sample_word(std::uint32_t l, std::uint32_t n, Rng& rng);

// Uniform r-subset of [0, n) positions.
ErasurePattern sample_pattern(std::uint32_t n, std::uint32_t r, Rng& rng);

// Erasure channel e: exactly r positions erased, the r-subset uniform over
// all C(n,r) subsets; unerased symbols untouched. Throws when r > n.
PartialWord erase(std::span<const Symbol> w, std::uint32_t r, Rng& rng);
PartialWord erase(std::span<const Symbol> w, std::uint32_t r, std::uint64_t seed);

}  // namespace am
