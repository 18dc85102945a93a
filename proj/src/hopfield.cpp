#include "am/hopfield.hpp"

#include <bit>
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

std::uint32_t hopfield_bits_per_symbol(std::uint32_t l) {
  return std::max<std::uint32_t>(1, ceil_log2_u64(l));
}

BipolarWord encode_bipolar(std::span<const Symbol> w, std::uint32_t l) {
  const std::uint32_t bits = hopfield_bits_per_symbol(l);
  BipolarWord out(w.size() * bits);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_erased(w[i])) continue;  // all bits stay 0
    for (std::uint32_t b = 0; b < bits; ++b) {
      const bool set = (w[i] >> (bits - 1 - b)) & 1;
      out[i * bits + b] = set ? 1 : -1;
    }
  }
  return out;
}

std::optional<Word> decode_bipolar(const BipolarWord& state, std::uint32_t l, std::uint32_t n) {
  const std::uint32_t bits = hopfield_bits_per_symbol(l);
  if (state.size() != static_cast<std::size_t>(n) * bits)
    throw std::invalid_argument("decode_bipolar: state length mismatch");
  Word out(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Symbol v = 0;
    for (std::uint32_t b = 0; b < bits; ++b) {
      v = (v << 1) | (state[i * bits + b] >= 0 ? 1u : 0u);
    }
    if (v >= l) return std::nullopt;
    out[i] = v;
  }
  return out;
}

HopfieldNetwork HopfieldNetwork::store(const WordSet& s, DiagonalMode diag) {
  HopfieldNetwork net;
  net.word_length_ = s.word_length();
  net.alphabet_size_ = s.alphabet_size();
  net.stored_count_ = s.size();
  net.diag_ = diag;
  const std::uint32_t bits = hopfield_bits_per_symbol(s.alphabet_size());
  const std::uint32_t np = s.word_length() * bits;
  net.neurons_ = np;
  net.weights_.assign(static_cast<std::size_t>(np) * np, 0);

  // Bit-sliced correlation sum: with bipolar entries, M_ij = m - 2 * d_ij
  // where d_ij counts the stored words whose bits i and j disagree. One
  // m-bit column per neuron turns the m outer products into xor/popcount.
  const std::size_t blocks = (s.size() + 63) / 64;
  std::vector<std::uint64_t> columns(static_cast<std::size_t>(np) * blocks, 0);
  for (std::size_t w = 0; w < s.size(); ++w) {
    const BipolarWord enc = encode_bipolar(s.word(w), s.alphabet_size());
    for (std::uint32_t i = 0; i < np; ++i) {
      if (enc[i] > 0)
        columns[static_cast<std::size_t>(i) * blocks + (w >> 6)] |= std::uint64_t{1} << (w & 63);
    }
  }
  const std::int64_t m = static_cast<std::int64_t>(s.size());
  for (std::uint32_t i = 0; i < np; ++i) {
    const std::uint64_t* ci = columns.data() + static_cast<std::size_t>(i) * blocks;
    for (std::uint32_t j = i; j < np; ++j) {
      const std::uint64_t* cj = columns.data() + static_cast<std::size_t>(j) * blocks;
      std::int64_t disagree = 0;
      for (std::size_t b = 0; b < blocks; ++b) disagree += std::popcount(ci[b] ^ cj[b]);
      const std::int32_t weight = static_cast<std::int32_t>(m - 2 * disagree);
      net.weights_[static_cast<std::size_t>(i) * np + j] = weight;
      net.weights_[static_cast<std::size_t>(j) * np + i] = weight;
    }
  }
  if (diag == DiagonalMode::Zeroed) {
    for (std::uint32_t i = 0; i < np; ++i)
      net.weights_[static_cast<std::size_t>(i) * np + i] = 0;
  }
  return net;
}

std::uint64_t HopfieldNetwork::memory_bits(bool include_diagonal) const {
  const std::uint64_t pairs = std::uint64_t{neurons_} * (neurons_ - 1) / 2;
  std::uint64_t bits = pairs * ceil_log2_u64(2 * stored_count_ + 1);
  if (include_diagonal) bits += std::uint64_t{neurons_} * ceil_log2_u64(stored_count_ + 1);
  return bits;
}

HopfieldRun retrieve(const HopfieldNetwork& net, const BipolarWord& query,
                     std::uint32_t max_iters, bool clamp_known) {
  if (max_iters < 1) throw std::invalid_argument("retrieve: max_iters must be >= 1");
  const std::uint32_t np = net.neuron_count();
  if (query.size() != np) throw std::invalid_argument("retrieve: query length mismatch");

  // iterations bills the state-changing updates; the update that merely
  // confirms a fixed point is free, so a query sitting on an attractor
  // reports 0 iterations and the worked single-erasure case reports 1.
  HopfieldRun run;
  run.state = query;
  BipolarWord next(np);
  for (std::uint32_t t = 0; t < max_iters; ++t) {
    for (std::uint32_t i = 0; i < np; ++i) {
      std::int64_t acc = 0;
      for (std::uint32_t j = 0; j < np; ++j) {
        acc += static_cast<std::int64_t>(net.weight(i, j)) * run.state[j];
      }
      next[i] = acc >= 0 ? 1 : -1;
    }
    if (clamp_known) {
      for (std::uint32_t i = 0; i < np; ++i) {
        if (query[i] != 0) next[i] = query[i];
      }
    }
    if (next == run.state) {
      run.converged = true;
      break;
    }
    run.state.swap(next);
    ++run.iterations;
  }
  run.op_count = static_cast<std::uint64_t>(run.iterations) * np * np;
  return run;
}

RetrievalResult retrieve_word(const HopfieldNetwork& net, std::span<const Symbol> q,
                              std::uint32_t max_iters, bool clamp_known,
                              const WordSet* membership) {
  if (q.size() != net.word_length())
    throw std::invalid_argument("retrieve_word: query length mismatch");
  const BipolarWord enc = encode_bipolar(q, net.alphabet_size());
  HopfieldRun run = retrieve(net, enc, max_iters, clamp_known);

  RetrievalResult res;
  res.op_count = run.op_count;
  auto word = decode_bipolar(run.state, net.alphabet_size(), net.word_length());
  if (!word) {
    res.status = Status::Mismatch;
    return res;
  }
  res.word = std::move(*word);
  res.candidate_count = 1;
  if (membership && !membership->contains(*res.word)) {
    res.status = Status::Mismatch;
  } else {
    res.status = Status::Unique;
  }
  return res;
}

}  // namespace am
