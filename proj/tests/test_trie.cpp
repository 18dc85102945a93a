#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "am/brute_force.hpp"
#include "am/errors.hpp"
#include "am/harness.hpp"
#include "am/sampling.hpp"
#include "am/trie.hpp"

using namespace am;

namespace {

Word w(std::initializer_list<Symbol> syms) { return Word(syms); }

}  // namespace

TEST_CASE("permutation_for: unerased positions first, both blocks increasing") {
  CHECK(permutation_for(w({5, kErased, 6, kErased})) == std::vector<std::uint32_t>{0, 2, 1, 3});
  CHECK(permutation_for(w({1, 2, 3})) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(permutation_for(w({kErased, kErased})) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("eager build: one trie per pattern, every trie holds all words") {
  WordSet s(4, 2, std::vector<Word>{w({1, 2}), w({1, 3})});
  auto mem = TrieMemory::build(s, TrieMode::Eager);
  auto st = mem.stats();
  CHECK(st.trie_count == 4);  // patterns {}, {0}, {1}, {0,1}
  for (std::uint64_t mask = 0; mask < 4; ++mask) {
    CHECK(mem.trie_for(mask).root().leaf_count == 2);
  }
  // empty pattern = plain trie of S
  const auto& plain = mem.trie_for(0);
  CHECK(plain.sigma() == std::vector<std::uint32_t>{0, 1});
  CHECK(plain.root().children.size() == 1);  // both words start with 1
}

TEST_CASE("single stored word: every trie is one path") {
  WordSet s(3, 5, std::vector<Word>{w({2, 0, 1, 2, 0})});
  auto mem = TrieMemory::build(s, TrieMode::Eager);
  auto st = mem.stats();
  CHECK(st.trie_count == 32);
  CHECK(st.node_count == 32 * 5);  // n non-root nodes per trie
}

TEST_CASE("retrieve examples from the two-word fixture") {
  WordSet s(4, 2, std::vector<Word>{w({1, 2}), w({1, 3})});
  auto mem = TrieMemory::build(s, TrieMode::Lazy);

  auto res = retrieve(mem, w({kErased, 3}), PathPolicy::LeafWeighted, 5ull);
  CHECK(res.status == Status::Unique);
  CHECK(*res.word == w({1, 3}));
  CHECK(*res.candidate_count == 1);

  std::map<Word, int> hits;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    auto r2 = retrieve(mem, w({1, kErased}), PathPolicy::LeafWeighted,
                       derive_stream_seed(3, t));
    CHECK(r2.status == Status::Ambiguous);
    CHECK(*r2.candidate_count == 2);
    ++hits[*r2.word];
  }
  CHECK(std::abs(static_cast<double>(hits[w({1, 2})]) / trials - 0.5) <= 0.02);
  CHECK(std::abs(static_cast<double>(hits[w({1, 3})]) / trials - 0.5) <= 0.02);

  auto res3 = retrieve(mem, w({2, kErased}), PathPolicy::LeafWeighted, 0ull);
  CHECK(res3.status == Status::NoMatch);
  CHECK_FALSE(res3.word.has_value());
}

TEST_CASE("FirstChild picks the smallest symbols") {
  WordSet s(4, 2, std::vector<Word>{w({1, 3}), w({1, 2})});
  auto mem = TrieMemory::build(s, TrieMode::Lazy);
  auto res = retrieve(mem, w({1, kErased}), PathPolicy::FirstChild, 0ull);
  CHECK(*res.word == w({1, 2}));
}

TEST_CASE("oracle equivalence against brute force") {
  Rng rng(77);
  for (int t = 0; t < 400; ++t) {
    const std::uint32_t l = 2 + static_cast<std::uint32_t>(rng.below(4));
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(5));
    const std::uint64_t m = 1 + rng.below(16);
    auto total = universe_size(l, n);
    if (total && m > *total) continue;
    WordSet s = sample_word_set(l, n, m, rng);
    auto trie = TrieMemory::build(s, TrieMode::Lazy);
    auto exact = BruteForceMemory::store(s);

    PartialWord q(n);
    for (auto& sym : q)
      sym = rng.below(3) == 0 ? kErased : static_cast<Symbol>(rng.below(l));
    auto rt = retrieve(trie, q, PathPolicy::LeafWeighted, rng);
    auto re = retrieve(exact, q, TiePolicy::UniformRandom, rng);
    CHECK(*rt.candidate_count == *re.candidate_count);
    CHECK(rt.status == re.status);
    if (rt.status == Status::Unique) CHECK(*rt.word == *re.word);
    if (rt.word) CHECK(masked_eq(*rt.word, q));
  }
}

TEST_CASE("LeafWeighted matches UniformRandom in distribution") {
  // ambiguous fixture with unequal subtree shapes
  WordSet s(3, 3, std::vector<Word>{w({0, 0, 0}), w({0, 1, 2}), w({0, 1, 1}), w({2, 2, 2})});
  auto trie = TrieMemory::build(s, TrieMode::Lazy);
  auto exact = BruteForceMemory::store(s);
  PartialWord q{0, kErased, kErased};

  std::map<Word, int> trie_hits, exact_hits;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    ++trie_hits[*retrieve(trie, q, PathPolicy::LeafWeighted, derive_stream_seed(1, t)).word];
    ++exact_hits[*retrieve(exact, q, TiePolicy::UniformRandom, derive_stream_seed(2, t)).word];
  }
  CHECK(trie_hits.size() == 3);
  for (const auto& [word, count] : trie_hits) {
    const double diff = std::abs(count - exact_hits[word]) / static_cast<double>(trials);
    CHECK(diff <= 0.03);
  }
}

TEST_CASE("op_count is n + O(1), independent of m") {
  for (std::uint64_t m : {10ull, 100ull, 1000ull}) {
    for (std::uint32_t n : {4u, 8u, 12u, 16u}) {
      Rng rng(n * 1000 + m);
      WordSet s = sample_word_set(16, n, m, rng);
      auto mem = TrieMemory::build(s, TrieMode::Lazy);
      const std::size_t idx = rng.below(s.size());
      PartialWord q = erase(s.word(idx), n / 2, rng);
      auto res = retrieve(mem, q, PathPolicy::LeafWeighted, rng);
      CHECK(res.op_count == n + 1);  // root + one node per level
    }
  }
}

TEST_CASE("node count bound: at most 2^n * m * n non-root nodes") {
  Rng rng(55);
  WordSet s = sample_word_set(4, 6, 12, rng);
  auto mem = TrieMemory::build(s, TrieMode::Eager);
  auto st = mem.stats();
  CHECK(st.trie_count == 64);
  CHECK(st.node_count <= (1ull << 6) * 12 * 6);
}

TEST_CASE("eager cap raises a resource error") {
  WordSet s = sample_word_set(2, 20, 5, 0ull);
  CHECK_THROWS_AS(TrieMemory::build(s, TrieMode::Eager), ResourceError);
  CHECK_NOTHROW(TrieMemory::build(s, TrieMode::Lazy));
}

TEST_CASE("lazy and eager retrievals agree") {
  Rng rng(91);
  WordSet s = sample_word_set(3, 5, 20, rng);
  auto eager = TrieMemory::build(s, TrieMode::Eager);
  auto lazy = TrieMemory::build(s, TrieMode::Lazy);
  for (int t = 0; t < 200; ++t) {
    const std::size_t idx = rng.below(s.size());
    const std::uint32_t r = static_cast<std::uint32_t>(rng.below(6));
    PartialWord q = erase(s.word(idx), r, rng);
    const std::uint64_t seed = rng.next_u64();
    auto a = retrieve(eager, q, PathPolicy::LeafWeighted, seed);
    auto b = retrieve(lazy, q, PathPolicy::LeafWeighted, seed);
    CHECK(a.status == b.status);
    CHECK(*a.candidate_count == *b.candidate_count);
    CHECK(a.word == b.word);
    CHECK(a.op_count == b.op_count);
  }
  CHECK(lazy.stats().trie_count <= eager.stats().trie_count);
}

TEST_CASE("adversarial set: single-erasure queries stay Unique and cheap") {
  for (std::uint32_t n : {3u, 5u, 8u}) {
    WordSet s = adversarial_set(2, n);
    auto mem = TrieMemory::build(s, TrieMode::Lazy);
    for (std::uint32_t k = 0; k < n; ++k) {
      for (Symbol a = 0; a < 2; ++a) {
        Word stored(n, a);
        stored[k] = 1 - a;
        PartialWord q(stored);
        q[k] = kErased;
        auto res = retrieve(mem, q, PathPolicy::LeafWeighted, 0ull);
        CHECK(res.status == Status::Unique);
        CHECK(*res.word == stored);
        CHECK(res.op_count <= 2 * n);
      }
    }
  }
}
