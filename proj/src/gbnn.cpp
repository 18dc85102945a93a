#include "am/gbnn.hpp"

#include <bit>
#include <stdexcept>

namespace am {

GBNNetwork GBNNetwork::store(const WordSet& s, SelfPairs self_pairs) {
  GBNNetwork net;
  net.clusters_ = s.word_length();
  net.letters_ = s.alphabet_size();
  net.row_words_ = (net.neuron_count() + 63) / 64;
  net.gamma_ = static_cast<std::uint64_t>(net.clusters_) * net.letters_;
  net.stored_count_ = s.size();
  net.self_pairs_ = self_pairs;
  net.rows_.assign(static_cast<std::size_t>(net.neuron_count()) * net.row_words_, 0);

  for (std::size_t w = 0; w < s.size(); ++w) {
    auto word = s.word(w);
    for (std::uint32_t i1 = 0; i1 < net.clusters_; ++i1) {
      const std::uint32_t u = i1 * net.letters_ + word[i1];
      for (std::uint32_t i2 = 0; i2 < net.clusters_; ++i2) {
        if (self_pairs == SelfPairs::Excluded && i1 == i2) continue;
        net.connect(u, i2 * net.letters_ + word[i2]);
      }
    }
  }
  return net;
}

void GBNNetwork::connect(std::uint32_t u, std::uint32_t v) {
  rows_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void GBNNetwork::set_gamma(std::uint64_t g) {
  const std::uint64_t floor = static_cast<std::uint64_t>(clusters_) * letters_;
  if (g < floor)
    throw std::invalid_argument("gamma = " + std::to_string(g) + " below n*l = " +
                                std::to_string(floor));
  gamma_ = g;
}

std::uint64_t GBNNetwork::memory_bits() const {
  return std::uint64_t{clusters_} * (clusters_ - 1) / 2 * letters_ * letters_;
}

std::uint64_t GBNNetwork::memory_bits_dense() const {
  return std::uint64_t{neuron_count()} * neuron_count();
}

NeuronActivation::NeuronActivation(std::uint32_t clusters, std::uint32_t letters)
    : clusters_(clusters),
      letters_(letters),
      bits_((static_cast<std::size_t>(clusters) * letters + 63) / 64, 0) {}

void NeuronActivation::set(std::uint32_t i, std::uint32_t j) {
  const std::size_t idx = static_cast<std::size_t>(i) * letters_ + j;
  bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

std::vector<Symbol> NeuronActivation::active_letters(std::uint32_t i) const {
  std::vector<Symbol> out;
  for (std::uint32_t j = 0; j < letters_; ++j) {
    if (active(i, j)) out.push_back(j);
  }
  return out;
}

std::size_t NeuronActivation::active_count(std::uint32_t i) const {
  return active_letters(i).size();
}

NeuronActivation gbnn_init(const GBNNetwork& net, std::span<const Symbol> q) {
  if (q.size() != net.clusters()) throw std::invalid_argument("gbnn_init: query length mismatch");
  NeuronActivation v(net.clusters(), net.letters());
  for (std::uint32_t i = 0; i < net.clusters(); ++i) {
    if (is_erased(q[i])) continue;
    if (q[i] >= net.letters())
      throw std::invalid_argument("gbnn_init: symbol " + std::to_string(q[i]) +
                                  " outside alphabet");
    v.set(i, q[i]);
  }
  return v;
}

NeuronActivation gbnn_update(const GBNNetwork& net, const NeuronActivation& v) {
  const std::uint32_t total = net.neuron_count();
  const std::uint32_t l = net.letters();
  std::vector<std::int64_t> score(total, 0);

  // W v: walk the connection row of every active neuron. The accounting
  // model is the dense (n*l)^2 accumulation; the sparse walk changes cost,
  // not values.
  for (std::uint32_t word_idx = 0; word_idx < v.bits_.size(); ++word_idx) {
    std::uint64_t bits = v.bits_[word_idx];
    while (bits) {
      const std::uint32_t u = word_idx * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      auto row = net.row(u);
      for (std::uint32_t rw = 0; rw < row.size(); ++rw) {
        std::uint64_t conn = row[rw];
        while (conn) {
          score[rw * 64 + std::countr_zero(conn)] += 1;
          conn &= conn - 1;
        }
      }
      score[u] += static_cast<std::int64_t>(net.gamma());  // gamma v term
    }
  }

  NeuronActivation next(net.clusters(), l);
  for (std::uint32_t i = 0; i < net.clusters(); ++i) {
    std::int64_t best = score[static_cast<std::size_t>(i) * l];
    for (std::uint32_t j = 1; j < l; ++j) {
      best = std::max(best, score[static_cast<std::size_t>(i) * l + j]);
    }
    for (std::uint32_t j = 0; j < l; ++j) {
      if (score[static_cast<std::size_t>(i) * l + j] == best) next.set(i, j);
    }
  }
  return next;
}

RetrievalResult retrieve(const GBNNetwork& net, std::span<const Symbol> q,
                         std::uint32_t iterations, Rng& rng, const WordSet* membership) {
  if (iterations < 1) throw std::invalid_argument("retrieve: iterations must be >= 1");
  if (net.gamma() < std::uint64_t{net.clusters()} * net.letters())
    throw std::invalid_argument("retrieve: gamma below n*l");

  NeuronActivation v = gbnn_init(net, q);
  std::uint32_t done = 0;
  for (std::uint32_t t = 0; t < iterations; ++t) {
    NeuronActivation next = gbnn_update(net, v);
    ++done;
    const bool fixed = next == v;
    v = std::move(next);
    if (fixed) break;
  }

  RetrievalResult res;
  res.op_count = static_cast<std::uint64_t>(done) * net.neuron_count() * net.neuron_count();

  Word out(net.clusters());
  bool ambiguous = false;
  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < net.clusters(); ++i) {
    auto letters = v.active_letters(i);
    if (letters.size() == 1) {
      out[i] = letters[0];
    } else {
      ambiguous = true;
      out[i] = letters[rng.below(letters.size())];
    }
    if (combos <= UINT64_MAX / letters.size())
      combos *= letters.size();
    else
      combos = UINT64_MAX;
  }
  res.word = std::move(out);
  res.candidate_count = combos;
  if (membership && !membership->contains(*res.word)) {
    res.status = Status::Mismatch;
  } else {
    res.status = ambiguous ? Status::Ambiguous : Status::Unique;
  }
  return res;
}

RetrievalResult retrieve(const GBNNetwork& net, std::span<const Symbol> q,
                         std::uint32_t iterations, std::uint64_t seed,
                         const WordSet* membership) {
  Rng rng(seed);
  return retrieve(net, q, iterations, rng, membership);
}

}  // namespace am
