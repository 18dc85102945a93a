#include "am/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "am/sampling.hpp"

namespace am {

namespace {

constexpr std::uint64_t kExactUniverseLimit = std::uint64_t{1} << 20;

// log2 of a positive big integer via its top 64 bits.
double log2_big(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("log2_big: nonpositive argument");
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 63) return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  const std::size_t shift = bits - 63;
  const BigInt top = x >> shift;
  return static_cast<double>(shift) + std::log2(static_cast<double>(top.convert_to<std::uint64_t>()));
}

void require_m_range(std::uint32_t l, std::uint32_t n, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  auto total = universe_size(l, n);
  if (total && m > *total)
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds l^n = " +
                                std::to_string(*total));
}

void require_basic(std::uint32_t l, std::uint32_t n, std::uint32_t r) {
  if (l < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (n < 1) throw std::invalid_argument("word length must be >= 1");
  if (r > n) throw std::invalid_argument("r > n");
}

// log of the hypergeometric miss ratio C(N - m, R) / C(N, R) as a product of
// m terms (N - R - k) / (N - k); avoids the catastrophic cancellation of the
// lgamma route when the ratio is close to 1.
double log_miss_ratio(double big_n, double big_r, std::uint64_t m) {
  if (big_r == 0.0) return 0.0;
  if (static_cast<double>(m) > big_n - big_r) return -INFINITY;  // C(N-m, R) = 0
  if (m <= 1'000'000) {
    double acc = 0.0;
    for (std::uint64_t k = 0; k < m; ++k) {
      acc += std::log1p(-big_r / (big_n - static_cast<double>(k)));
    }
    return acc;
  }
  return std::lgamma(big_n - static_cast<double>(m) + 1) - std::lgamma(big_n + 1) +
         std::lgamma(big_n - big_r + 1) -
         std::lgamma(big_n - big_r - static_cast<double>(m) + 1);
}

}  // namespace

void ScenarioParams::validate() const {
  require_basic(l, n, r);
  require_m_range(l, n, m);
  if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0, 1)");
}

std::uint32_t ceil_log2(std::uint64_t x) {
  std::uint32_t bits = 0;
  std::uint64_t v = 1;
  while (v < x) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

BigInt binomial_big(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact at every step
  }
  return result;
}

double log2_binomial(double n, double k) {
  if (k < 0 || k > n) return -INFINITY;
  k = std::min(k, n - k);
  if (k == 0) return 0.0;
  if (k <= 100000) {
    const std::uint64_t ki = static_cast<std::uint64_t>(k);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < ki; ++i) {
      acc += std::log2(n - static_cast<double>(i)) - std::log2(static_cast<double>(i + 1));
    }
    return acc;
  }
  constexpr double inv_ln2 = 1.4426950408889634;
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) * inv_ln2;
}

Rational expected_success_rational(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                                   std::uint32_t r) {
  require_basic(l, n, r);
  require_m_range(l, n, m);
  auto total = universe_size(l, n);
  if (!total || *total > kExactUniverseLimit)
    throw std::invalid_argument("expected_success_rational: l^n exceeds the exact-path limit");
  const std::uint64_t big_n = *total;
  std::uint64_t big_r = 1;
  for (std::uint32_t i = 0; i < r; ++i) big_r *= l;

  // miss = C(N - m, R) / C(N, R) = prod_{k<m} (N - R - k) / (N - k)
  Rational miss = 1;
  if (big_r > 0 && m > big_n - big_r) {
    miss = 0;
  } else {
    BigInt num = 1, den = 1;
    for (std::uint64_t k = 0; k < m; ++k) {
      num *= big_n - big_r - k;
      den *= big_n - k;
    }
    miss = Rational(num, den);
  }
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < n - r; ++i) scale *= l;
  return Rational(scale, m) * (Rational(1) - miss);
}

double expected_success(std::uint32_t l, std::uint32_t n, std::uint64_t m, std::uint32_t r,
                        EvalMode mode) {
  require_basic(l, n, r);
  require_m_range(l, n, m);
  auto total = universe_size(l, n);
  const bool exact_ok = total && *total <= kExactUniverseLimit;
  if (mode == EvalMode::Auto) mode = exact_ok ? EvalMode::ExactBigInt : EvalMode::LogGamma;
  if (mode == EvalMode::ExactBigInt) {
    if (!exact_ok)
      throw std::invalid_argument("expected_success: ExactBigInt needs l^n <= 2^20");
    return expected_success_rational(l, n, m, r).convert_to<double>();
  }
  const double ln_l = std::log(static_cast<double>(l));
  const double big_n = total ? static_cast<double>(*total) : std::exp(n * ln_l);
  auto r_total = universe_size(l, r);
  const double big_r = r_total ? static_cast<double>(*r_total) : std::exp(r * ln_l);
  const double log_miss = log_miss_ratio(big_n, big_r, m);
  // E = exp((n-r) ln l - ln m) * (1 - miss), assembled in log domain
  const double log_hit = std::log(-std::expm1(log_miss));
  const double log_e = (n - r) * ln_l - std::log(static_cast<double>(m)) + log_hit;
  return std::min(1.0, std::max(0.0, std::exp(log_e)));
}

double residual_error(std::uint32_t l, std::uint32_t n, std::uint64_t m, std::uint32_t r,
                      EvalMode mode) {
  return 1.0 - expected_success(l, n, m, r, mode);
}

Rational residual_error_rational(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                                 std::uint32_t r) {
  return Rational(1) - expected_success_rational(l, n, m, r);
}

double expected_success_asymptotic(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                                   std::uint32_t r) {
  require_basic(l, n, r);
  require_m_range(l, n, m);
  const double ln_l = std::log(static_cast<double>(l));
  const double x = static_cast<double>(m) * std::exp((static_cast<double>(r) - n) * ln_l);
  // (l^(n-r)/m) * (1 - e^-x) = (1 - e^-x) / x
  if (x == 0.0) return 1.0;
  return -std::expm1(-x) / x;
}

std::uint64_t capacity_estimate(std::uint32_t l, std::uint32_t n, std::uint32_t r, double p0) {
  require_basic(l, n, r);
  if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0, 1)");
  const double value = 2.0 * p0 * std::exp((static_cast<double>(n) - r) *
                                           std::log(static_cast<double>(l)));
  if (value >= 9.2e18) throw std::invalid_argument("capacity_estimate: result overflows");
  return static_cast<std::uint64_t>(std::llround(value));
}

double set_entropy_bits(std::uint32_t l, std::uint32_t n, std::uint64_t m, EvalMode mode) {
  require_basic(l, n, 0);
  auto total = universe_size(l, n);
  if (total && m > *total) throw std::invalid_argument("set_entropy_bits: m > l^n");
  if (m == 0 || (total && m == *total)) return 0.0;
  const bool exact_ok = total && *total <= kExactUniverseLimit &&
                        std::min<std::uint64_t>(m, *total - m) <= 10'000;
  if (mode == EvalMode::Auto) mode = exact_ok ? EvalMode::ExactBigInt : EvalMode::LogGamma;
  if (mode == EvalMode::ExactBigInt) {
    if (!exact_ok)
      throw std::invalid_argument("set_entropy_bits: parameters beyond the exact-path limit");
    return log2_big(binomial_big(*total, m));
  }
  const double big_n =
      total ? static_cast<double>(*total)
            : std::exp(static_cast<double>(n) * std::log(static_cast<double>(l)));
  return log2_binomial(big_n, static_cast<double>(m));
}

double entropy_asymptotic_small_m(std::uint32_t l, std::uint32_t n, std::uint64_t m) {
  return static_cast<double>(m) * n * std::log2(static_cast<double>(l));
}

double entropy_asymptotic_constant_c(std::uint64_t m, double c) {
  if (!(c > 1.0)) throw std::invalid_argument("entropy_asymptotic_constant_c: c must exceed 1");
  const double bracket = c * std::log2(c) - c * std::log2(c - 1.0) + std::log2(c - 1.0);
  return static_cast<double>(m) * bracket;
}

double ordered_to_unordered_ratio(double c, std::uint32_t n, std::uint32_t l) {
  if (!(c > 1.0)) throw std::invalid_argument("ordered_to_unordered_ratio: c must exceed 1");
  const double bracket = c * std::log2(c) - c * std::log2(c - 1.0) + std::log2(c - 1.0);
  return bracket / (static_cast<double>(n) * std::log2(static_cast<double>(l)));
}

std::uint64_t hnn_memory_bits(std::uint32_t l, std::uint32_t n, std::uint64_t m,
                              bool include_diagonal) {
  const std::uint64_t np = std::uint64_t{n} * std::max<std::uint32_t>(1, ceil_log2(l));
  std::uint64_t bits = np * (np - 1) / 2 * ceil_log2(2 * m + 1);
  if (include_diagonal) bits += np * ceil_log2(m + 1);
  return bits;
}

std::uint64_t gbnn_memory_bits(std::uint32_t l, std::uint32_t n) {
  return std::uint64_t{n} * (n - 1) / 2 * l * l;
}

std::uint64_t ordered_list_bits(std::uint32_t l, std::uint32_t n, std::uint64_t m) {
  return m * n * std::max<std::uint32_t>(1, ceil_log2(l));
}

}  // namespace am
