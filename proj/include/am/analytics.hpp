#pragma once

#include <cstdint>
#include <optional>

#include "am/exact_oracle.hpp"

namespace am {

struct ScenarioParams {
  std::uint32_t l = 2;
  std::uint32_t n = 1;
  std::uint64_t m = 1;
  std::uint32_t r = 0;
  double p0 = 0.01;

  void validate() const;  // l >= 2, 1 <= m <= l^n, r <= n, 0 < p0 < 1
};

// ExactBigInt — exact rational arithmetic, available when l^n <= 2^20.
// LogGamma    — log-domain evaluation for arbitrary scale.
// Both agree to 1e-9 relative wherever both run.
enum class EvalMode { Auto, ExactBigInt, LogGamma };

std::uint32_t ceil_log2(std::uint64_t x);

// C(n, k) with exact big integers.
BigInt binomial_big(std::uint64_t n, std::uint64_t k);

// log2 C(n, k) in doubles (term-sum for small k, lgamma otherwise).
double log2_binomial(double n, double k);

// Expected ML success probability over uniformly drawn m-word sets with r
// uniform erasures:
//   E = (l^(n-r) / m) * (1 - C(l^n - m, l^r) / C(l^n, l^r)).
// Exact rational form; requires l^n <= 2^20.
Rational expected_success_rational(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                                   std::uint32_t r);

// Same quantity as a double; Auto picks ExactBigInt when l^n <= 2^20. The
// hypergeometric miss ratio is evaluated as a log-domain product of m terms
// (l^n - l^r - k) / (l^n - k), clamped to [0, 1].
double expected_success(std::uint32_t l, std::uint32_t n, std::uint64_t m, std::uint32_t r,
                        EvalMode mode = EvalMode::Auto);

// 1 - expected_success.
double residual_error(std::uint32_t l, std::uint32_t n, std::uint64_t m, std::uint32_t r,
                      EvalMode mode = EvalMode::Auto);
Rational residual_error_rational(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                                 std::uint32_t r);

// Stirling regime (m small against l^n - l^r):
//   E ~ (l^(n-r) / m) * (1 - exp(-m * l^(r-n))).
double expected_success_asymptotic(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                                   std::uint32_t r);

// m ~ 2 * P0 * l^(n-r), rounded to the nearest integer.
std::uint64_t capacity_estimate(std::uint32_t l, std::uint32_t n, std::uint32_t r, double p0);

// H = log2 C(l^n, m) bits to represent the unordered set.
double set_entropy_bits(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                        EvalMode mode = EvalMode::Auto);

// Small-m regime: H ~ m * log2(l^n).
double entropy_asymptotic_small_m(std::uint32_t l, std::uint32_t n, std::uint64_t m);

// Constant c = l^n / m regime: H ~ m * (c log2 c - c log2(c-1) + log2(c-1)).
// Throws when c <= 1.
double entropy_asymptotic_constant_c(std::uint64_t m, double c);

// The bracket above divided by n log2 l (unordered-set bits over ordered-list
// bits); tends to zero as n grows at fixed c.
double ordered_to_unordered_ratio(double c, std::uint32_t n, std::uint32_t l);

// Upper-triangle integer weights at ceil(log2(2m+1)) bits, n' = n ceil(log2 l)
// neurons; diagonal excluded by default.
std::uint64_t hnn_memory_bits(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                              bool include_diagonal = false);

// Cross-cluster binary connections: C(n,2) * l^2.
std::uint64_t gbnn_memory_bits(std::uint32_t l, std::uint32_t n);

// Ordered-list baseline: m * n * ceil(log2 l).
std::uint64_t ordered_list_bits(std::uint32_t l, std::uint32_t n, std::uint64_t m);

}  // namespace am
