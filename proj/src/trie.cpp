#include "am/trie.hpp"

#include <algorithm>
#include <stdexcept>

#include "am/errors.hpp"

namespace am {

namespace {

std::uint32_t ceil_log2_u64(std::uint64_t x) {
  std::uint32_t bits = 0;
  std::uint64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++bits;
  }
  return std::max<std::uint32_t>(bits, 1);
}

std::uint64_t erased_mask_of(std::span<const Symbol> q) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (is_erased(q[i])) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

std::vector<std::uint32_t> permutation_for_mask(std::uint32_t n, std::uint64_t erased_mask) {
  std::vector<std::uint32_t> sigma;
  sigma.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!(erased_mask >> i & 1)) sigma.push_back(i);
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (erased_mask >> i & 1) sigma.push_back(i);
  }
  return sigma;
}

std::vector<std::uint32_t> permutation_for(std::span<const Symbol> q) {
  if (q.size() > 64) throw std::invalid_argument("permutation_for: n > 64 unsupported");
  return permutation_for_mask(static_cast<std::uint32_t>(q.size()), erased_mask_of(q));
}

PermutationTrie::PermutationTrie(const WordSet& s, std::vector<std::uint32_t> sigma)
    : sigma_(std::move(sigma)) {
  if (sigma_.size() != s.word_length())
    throw std::invalid_argument("PermutationTrie: permutation length mismatch");
  arena_.emplace_back();  // root
  const std::uint32_t n = s.word_length();
  for (std::size_t w = 0; w < s.size(); ++w) {
    auto word = s.word(w);
    std::uint32_t cur = 0;
    ++arena_[cur].leaf_count;
    for (std::uint32_t d = 0; d < n; ++d) {
      Symbol sym = word[sigma_[d]];
      auto& children = arena_[cur].children;
      auto it = std::lower_bound(children.begin(), children.end(), sym,
                                 [](const auto& c, Symbol v) { return c.first < v; });
      if (it == children.end() || it->first != sym) {
        std::uint32_t idx = static_cast<std::uint32_t>(arena_.size());
        it = arena_[cur].children.insert(it, {sym, idx});
        arena_.emplace_back();
      }
      cur = it->second;
      ++arena_[cur].leaf_count;
    }
  }
}

TrieMemory::TrieMemory(const WordSet& s, TrieMode mode)
    : store_(s), mode_(mode), mutex_(std::make_unique<std::mutex>()) {}

TrieMemory TrieMemory::build(const WordSet& s, TrieMode mode, std::uint32_t eager_cap) {
  if (s.word_length() > 64)
    throw std::invalid_argument("TrieMemory: word length > 64 unsupported");
  TrieMemory mem(s, mode);
  if (mode == TrieMode::Eager) {
    if (s.word_length() > eager_cap)
      throw ResourceError("eager trie build: n = " + std::to_string(s.word_length()) +
                          " exceeds cap " + std::to_string(eager_cap) + " (2^n tries)");
    const std::uint64_t total = std::uint64_t{1} << s.word_length();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      mem.tries_.emplace(mask, std::make_unique<PermutationTrie>(
                                   s, permutation_for_mask(s.word_length(), mask)));
    }
  }
  return mem;
}

const PermutationTrie& TrieMemory::trie_for(std::uint64_t erased_mask) const {
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = tries_.find(erased_mask);
    if (it != tries_.end()) return *it->second;
  }
  if (mode_ == TrieMode::Eager)
    throw std::invalid_argument("trie_for: mask out of range for eager build");
  return build_and_publish(erased_mask);
}

const PermutationTrie& TrieMemory::build_and_publish(std::uint64_t erased_mask) const {
  auto built = std::make_unique<PermutationTrie>(
      store_, permutation_for_mask(store_.word_length(), erased_mask));
  std::lock_guard<std::mutex> lock(*mutex_);
  auto [it, inserted] = tries_.try_emplace(erased_mask, std::move(built));
  return *it->second;  // first publisher wins; a racing build is discarded
}

TrieBuildStats TrieMemory::stats() const {
  std::lock_guard<std::mutex> lock(*mutex_);
  TrieBuildStats st;
  st.trie_count = tries_.size();
  for (const auto& [mask, trie] : tries_) st.node_count += trie->node_count();
  const std::uint64_t per_node_bits =
      ceil_log2_u64(store_.alphabet_size()) + ceil_log2_u64(store_.size() + 1);
  st.bits_estimate = st.node_count * per_node_bits;
  return st;
}

std::uint64_t TrieMemory::store_op_count() const {
  std::lock_guard<std::mutex> lock(*mutex_);
  return tries_.size() * store_.size() * store_.word_length();
}

RetrievalResult retrieve(const TrieMemory& mem, std::span<const Symbol> q, PathPolicy policy,
                         Rng& rng) {
  const std::uint32_t n = mem.word_length();
  if (q.size() != n) throw std::invalid_argument("retrieve: query length mismatch");

  const std::uint64_t mask = erased_mask_of(q);
  const PermutationTrie& trie = mem.trie_for(mask);
  const auto& sigma = trie.sigma();
  const std::uint32_t r = static_cast<std::uint32_t>(erased_count(q));
  const std::uint32_t known = n - r;

  RetrievalResult res;
  Word out(n);
  std::uint32_t cur = 0;
  res.op_count = 1;  // root
  for (std::uint32_t d = 0; d < known; ++d) {
    Symbol sym = q[sigma[d]];
    const auto& children = trie.node(cur).children;
    auto it = std::lower_bound(children.begin(), children.end(), sym,
                               [](const auto& c, Symbol v) { return c.first < v; });
    if (it == children.end() || it->first != sym) {
      res.status = Status::NoMatch;
      res.candidate_count = 0;
      return res;
    }
    out[sigma[d]] = sym;
    cur = it->second;
    ++res.op_count;
  }

  const std::uint64_t count = trie.node(cur).leaf_count;
  res.candidate_count = count;
  res.status = count == 1 ? Status::Unique : Status::Ambiguous;

  // One rank draw selects a leaf; descending by rank keeps the choice
  // uniform over the count leaves below.
  std::uint64_t rank = 0;
  if (policy == PathPolicy::LeafWeighted && count > 1) rank = rng.below(count);
  for (std::uint32_t d = known; d < n; ++d) {
    const auto& children = trie.node(cur).children;
    std::uint32_t next = 0;
    Symbol sym = 0;
    for (const auto& [child_sym, child_idx] : children) {
      const std::uint64_t below = trie.node(child_idx).leaf_count;
      if (rank < below) {
        next = child_idx;
        sym = child_sym;
        break;
      }
      rank -= below;
    }
    out[sigma[d]] = sym;
    cur = next;
    ++res.op_count;
  }
  res.word = std::move(out);
  return res;
}

RetrievalResult retrieve(const TrieMemory& mem, std::span<const Symbol> q, PathPolicy policy,
                         std::uint64_t seed) {
  Rng rng(seed);
  return retrieve(mem, q, policy, rng);
}

}  // namespace am
