#include "am/exact_oracle.hpp"

#include <stdexcept>
#include <unordered_set>

#include "am/errors.hpp"

namespace am {

namespace {

std::uint64_t binomial_u64_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // result * (n - i) / (i + 1) stays integral at every step
    if (result > cap) return cap + 1;
    result = result / (i + 1) * (n - i) + result % (i + 1) * (n - i) / (i + 1);
  }
  return result;
}

std::uint64_t check_budget(const WordSet& s, std::uint32_t r, std::uint64_t budget) {
  if (r > s.word_length())
    throw std::invalid_argument("exact_success_probability: r > n");
  std::uint64_t patterns = binomial_u64_capped(s.word_length(), r, budget);
  if (patterns > budget || s.size() > budget / std::max<std::uint64_t>(patterns, 1))
    throw ResourceError("exact_success_probability: m * C(n,r) exceeds budget of " +
                        std::to_string(budget) + " (word, pattern) pairs");
  return patterns;
}

struct PartialHash {
  std::size_t operator()(const PartialWord& w) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (Symbol s : w) {
      h ^= s + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Rational exact_success_probability(const WordSet& s, std::uint32_t r, std::uint64_t budget) {
  std::uint64_t patterns = check_budget(s, r, budget);
  std::unordered_set<PartialWord, PartialHash> distinct;
  distinct.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(s.size() * patterns, budget)));
  for_each_pattern(s.word_length(), r, [&](const ErasurePattern& p) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      distinct.insert(apply_pattern(s.word(i), p));
    }
  });
  return Rational(BigInt(distinct.size()), BigInt(s.size()) * patterns);
}

Rational exact_success_probability_by_average(const WordSet& s, std::uint32_t r,
                                              std::uint64_t budget) {
  std::uint64_t patterns = check_budget(s, r, budget);
  Rational sum = 0;
  for_each_pattern(s.word_length(), r, [&](const ErasurePattern& p) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      PartialWord q = apply_pattern(s.word(i), p);
      std::size_t matches = candidate_indices(s, q).size();
      sum += Rational(1, static_cast<unsigned>(matches));
    }
  });
  return sum / (BigInt(s.size()) * patterns);
}

}  // namespace am
