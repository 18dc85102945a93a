#include "am/brute_force.hpp"

#include <cmath>
#include <stdexcept>

namespace am {

namespace {

std::uint32_t ceil_log2_u64(std::uint64_t x) {
  std::uint32_t bits = 0;
  std::uint64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

}  // namespace

BruteForceMemory BruteForceMemory::store(WordSet s, std::optional<std::vector<double>> weights) {
  std::vector<double> w;
  if (weights) {
    if (weights->size() != s.size())
      throw std::invalid_argument("store: weight vector length " +
                                  std::to_string(weights->size()) + " != m = " +
                                  std::to_string(s.size()));
    double sum = 0.0;
    for (double x : *weights) {
      if (x < 0.0) throw std::invalid_argument("store: negative weight");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("store: weights sum to " + std::to_string(sum) + ", not 1");
    w = std::move(*weights);
  }
  return BruteForceMemory(std::move(s), std::move(w));
}

std::uint64_t BruteForceMemory::memory_bits() const {
  return store_.size() * store_.word_length() *
         std::max<std::uint32_t>(1, ceil_log2_u64(store_.alphabet_size()));
}

RetrievalResult retrieve(const BruteForceMemory& mem, std::span<const Symbol> q,
                         TiePolicy policy, Rng& rng) {
  const WordSet& s = mem.stored();
  if (q.size() != s.word_length())
    throw std::invalid_argument("retrieve: query length mismatch");

  // Evaluate d(w, q) at every position of every word, no early exit: the
  // operation tally is exactly m * n symbol comparisons.
  const std::size_t n = s.word_length();
  std::vector<std::size_t> cand;
  std::uint64_t ops = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto w = s.word(i);
    bool match = true;
    for (std::size_t p = 0; p < n; ++p) {
      ++ops;
      if (w[p] != q[p] && !is_erased(q[p])) match = false;
    }
    if (match) cand.push_back(i);
  }

  RetrievalResult res;
  res.op_count = ops;
  res.candidate_count = cand.size();
  if (cand.empty()) {
    res.status = Status::NoMatch;
    return res;
  }
  std::size_t pick = 0;
  switch (policy) {
    case TiePolicy::UniformRandom:
      pick = static_cast<std::size_t>(rng.below(cand.size()));
      break;
    case TiePolicy::FirstStored:
      pick = 0;
      break;
    case TiePolicy::MaxWeight: {
      if (mem.has_weights()) {
        const auto& wt = mem.weights();
        double best = wt[cand[0]];
        for (std::size_t k = 1; k < cand.size(); ++k) {
          if (wt[cand[k]] > best) {
            best = wt[cand[k]];
            pick = k;
          }
        }
      }
      break;
    }
  }
  res.word = s.word_copy(cand[pick]);
  res.status = cand.size() == 1 ? Status::Unique : Status::Ambiguous;
  return res;
}

RetrievalResult retrieve(const BruteForceMemory& mem, std::span<const Symbol> q,
                         TiePolicy policy, std::uint64_t seed) {
  Rng rng(seed);
  return retrieve(mem, q, policy, rng);
}

}  // namespace am
