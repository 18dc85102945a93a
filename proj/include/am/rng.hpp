#pragma once

#include <cstdint>
#include <random>

namespace am {

// Stream-derivation rule: stream i of base seed s is seeded with
// splitmix64_mix(s + GOLDEN * (i + 1)). Derived seeds are decorrelated for
// distinct (s, i) pairs, so parallel trials can each own an independent,
// reproducible generator.
inline std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t stream) {
  std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Seedable deterministic generator. Wraps std::mt19937_64 (whose output
// sequence is fixed by the standard) and does bounded draws by rejection,
// so results are identical on every platform and library version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng stream(std::uint64_t base_seed, std::uint64_t stream_id) {
    return Rng(derive_stream_seed(base_seed, stream_id));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased uniform draw in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return gen_() & (bound - 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1), 53 bits of precision.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace am
