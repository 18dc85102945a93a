#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "am/brute_force.hpp"
#include "am/exact_oracle.hpp"
#include "am/gbnn.hpp"
#include "am/hopfield.hpp"
#include "am/trie.hpp"

namespace am {

enum class Backend { Exact, Trie, Hopfield, Gbnn };

const char* to_string(Backend b);
std::optional<Backend> backend_from_string(const std::string& name);

struct BackendOptions {
  TiePolicy exact_tie = TiePolicy::UniformRandom;
  TrieMode trie_mode = TrieMode::Lazy;
  PathPolicy trie_path = PathPolicy::LeafWeighted;
  std::uint32_t trie_eager_cap = TrieMemory::kDefaultEagerCap;
  std::uint32_t hopfield_max_iters = kDefaultHopfieldIters;
  DiagonalMode hopfield_diag = DiagonalMode::PaperSum;
  bool hopfield_clamp = false;
  std::uint32_t gbnn_iters = kDefaultGbnnIters;
  std::uint64_t gbnn_gamma = 0;  // 0 = the n*l default
  SelfPairs gbnn_self = SelfPairs::Included;
};

// Sweep = cross product of the four parameter lists, one row per
// (point, backend). Trials are seeded per (point, trial) from base_seed, so
// results are byte-identical for any worker count; all backends of a trial
// share the same sampled set, query word and erasure pattern.
struct ExperimentConfig {
  std::vector<std::uint32_t> ls{2};
  std::vector<std::uint32_t> ns{4};
  std::vector<std::uint64_t> ms{4};
  std::vector<std::uint32_t> rs{1};
  std::vector<Backend> backends{Backend::Exact};
  std::uint64_t trials = 1000;
  std::uint64_t base_seed = 0;
  unsigned workers = 0;  // 0 = available parallelism
  // One set per point instead of one per trial; the analytic reference then
  // comes from the per-set exact oracle instead of the expectation formula.
  bool fixed_set = false;
  BackendOptions options;
  std::uint64_t oracle_budget = kDefaultOracleBudget;

  void validate() const;
};

struct ResultRow {
  std::string backend;
  std::uint32_t l = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t r = 0;
  std::uint64_t trials = 0;
  std::optional<double> word_error_rate;
  std::optional<double> std_error;
  std::optional<double> analytic_error;
  std::optional<double> mean_op_count;
  std::optional<double> memory_bits;
  std::uint64_t seed = 0;
};

// One trial: sample S (fresh per trial unless fixed_set), build the memory,
// draw a stored word uniformly, erase r positions, retrieve; success iff the
// output equals the original word.
std::vector<ResultRow> run_error_experiment(const ExperimentConfig& cfg);

// Analytic-only rows (backend "analytic"): residual error per point.
std::vector<ResultRow> run_analytic_curve(const ExperimentConfig& cfg);

std::string result_rows_to_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows,
                               const std::string& title);

struct MemoryRow {
  std::uint32_t l = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  double entropy_bits = 0;
  std::uint64_t ordered_list_bits = 0;
  std::uint64_t hnn_bits = 0;
  std::uint64_t gbnn_bits = 0;
};

// Bit counts per point: H, the ordered-list baseline and both network models.
std::vector<MemoryRow> run_memory_experiment(const ExperimentConfig& cfg);
std::string memory_rows_to_csv(const ExperimentConfig& cfg, const std::vector<MemoryRow>& rows);

struct CapacityRow {
  std::string backend;
  std::uint32_t l = 0;
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  double p0 = 0;
  std::uint64_t probe_trials = 0;
  std::uint64_t max_m = 0;  // largest probed m with empirical error <= p0
  bool bracketed = false;   // false when no probe satisfied p0 or the cap hit
  std::uint64_t memory_bits = 0;
  double entropy_bits = 0;
  double ratio = 0;  // memory_bits / entropy_bits
};

struct CapacitySearchConfig {
  std::uint32_t l = 64;
  std::uint32_t n = 10;
  std::uint32_t r = 1;
  double p0 = 0.01;
  std::vector<Backend> backends{Backend::Hopfield, Backend::Gbnn};
  std::uint64_t probe_trials = 2000;
  std::uint64_t m_cap = 1 << 20;
  std::uint64_t base_seed = 0;
  unsigned workers = 0;
  BackendOptions options;
};

// Doubling then bisection on m, stopping at a +-20% window; each probe is a
// seeded error run at probe_trials.
std::vector<CapacityRow> run_capacity_experiment(const CapacitySearchConfig& cfg);
std::string capacity_rows_to_csv(const CapacitySearchConfig& cfg,
                                 const std::vector<CapacityRow>& rows);

struct ComplexityRow {
  std::string backend;
  std::uint32_t l = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t r = 0;
  std::uint64_t trials = 0;
  double mean_retrieve_ops = 0;
  double mean_store_ops = 0;
  std::optional<double> retrieve_ratio_vs_prev_n;
};

// Retrieval and store operation counts across the n sweep at each fixed m,
// with the growth ratio between successive n values.
std::vector<ComplexityRow> run_complexity_experiment(const ExperimentConfig& cfg);
std::string complexity_rows_to_csv(const ExperimentConfig& cfg,
                                   const std::vector<ComplexityRow>& rows);

// Every word with a single position k holding b on an all-a background, over
// k in [0, n) and ordered pairs a != b, duplicates removed (n = 2 collapses
// mirrored pairs).
WordSet adversarial_set(std::uint32_t l, std::uint32_t n);

}  // namespace am
