#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "am/words.hpp"

namespace am {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Exact per-set success probability of the ML rule under r uniform erasures:
//   P = |distinct r-erasure partial words consistent with S| / (m * C(n, r)).
// Enumerates every (word, pattern) pair; throws ResourceError when
// m * C(n, r) exceeds the budget.
Rational exact_success_probability(const WordSet& s, std::uint32_t r,
                                   std::uint64_t budget = kDefaultOracleBudget);

// Same quantity along the other route: the average over all (word, pattern)
// pairs of 1 / |S(partial)|, with |S(partial)| recomputed by a full candidate
// scan per pair. Slower; kept as an independent cross-check.
Rational exact_success_probability_by_average(const WordSet& s, std::uint32_t r,
                                              std::uint64_t budget = kDefaultOracleBudget);

}  // namespace am
