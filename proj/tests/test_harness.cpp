#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "am/analytics.hpp"
#include "am/errors.hpp"
#include "am/exact_oracle.hpp"
#include "am/harness.hpp"

using namespace am;

namespace {

Word w(std::initializer_list<Symbol> syms) { return Word(syms); }

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.ls = {4};
  cfg.ns = {4};
  cfg.ms = {8};
  cfg.rs = {1};
  cfg.backends = {Backend::Exact, Backend::Trie};
  cfg.trials = 400;
  cfg.base_seed = 12;
  return cfg;
}

}  // namespace

TEST_CASE("adversarial_set construction") {
  WordSet s3 = adversarial_set(2, 3);
  CHECK(s3.size() == 6);  // n * l * (l-1)
  std::set<Word> got;
  for (std::size_t i = 0; i < s3.size(); ++i) got.insert(s3.word_copy(i));
  CHECK(got == std::set<Word>{w({1, 0, 0}), w({0, 1, 0}), w({0, 0, 1}), w({0, 1, 1}),
                              w({1, 0, 1}), w({1, 1, 0})});

  WordSet s2 = adversarial_set(2, 2);
  CHECK(s2.size() == 2);  // mirrored pairs collapse at n = 2
  std::set<Word> got2;
  for (std::size_t i = 0; i < s2.size(); ++i) got2.insert(s2.word_copy(i));
  CHECK(got2 == std::set<Word>{w({0, 1}), w({1, 0})});

  WordSet s43 = adversarial_set(3, 4);
  CHECK(s43.size() == 4 * 3 * 2);
}

TEST_CASE("adversarial_set: hidden-b queries are singletons over a binary alphabet") {
  for (std::uint32_t n : {3u, 4u, 6u}) {
    WordSet s = adversarial_set(2, n);
    for (std::uint32_t k = 0; k < n; ++k) {
      for (Symbol a = 0; a < 2; ++a) {
        Word stored(n, a);
        stored[k] = 1 - a;
        PartialWord q(stored);
        q[k] = kErased;
        CHECK(candidates(s, q) == std::vector<Word>{stored});
      }
    }
  }
}

TEST_CASE("determinism: worker count never changes the CSV") {
  ExperimentConfig cfg = small_config();
  cfg.backends = {Backend::Exact, Backend::Trie, Backend::Hopfield, Backend::Gbnn};
  cfg.workers = 1;
  const auto rows1 = run_error_experiment(cfg);
  const std::string csv1 = result_rows_to_csv(cfg, rows1, "t");
  cfg.workers = 3;
  const std::string csv3 = result_rows_to_csv(cfg, run_error_experiment(cfg), "t");
  cfg.workers = 7;
  const std::string csv7 = result_rows_to_csv(cfg, run_error_experiment(cfg), "t");
  CHECK(csv1 == csv3);
  CHECK(csv1 == csv7);
  CHECK(csv1.find("backend,l,n,m,r,trials,word_error_rate,stderr,analytic_error,"
                  "mean_op_count,memory_bits,seed") != std::string::npos);
}

TEST_CASE("calibration: exact backend tracks the closed-form error within 3 SE") {
  ExperimentConfig cfg;
  cfg.ls = {4};
  cfg.ns = {4};
  cfg.ms = {32};
  cfg.rs = {1};
  cfg.backends = {Backend::Exact};
  cfg.trials = 20000;
  cfg.base_seed = 7;
  const auto rows = run_error_experiment(cfg);
  REQUIRE(rows.size() == 1);
  const double analytic = *rows[0].analytic_error;
  CHECK(analytic == doctest::Approx(residual_error(4, 4, 32, 1)));
  CHECK(std::abs(*rows[0].word_error_rate - analytic) <= 3 * *rows[0].std_error);
  // exact scan cost is exactly m * n comparisons
  CHECK(*rows[0].mean_op_count == 32 * 4);
}

TEST_CASE("r = 0 means zero error for the exact and trie backends") {
  ExperimentConfig cfg = small_config();
  cfg.rs = {0};
  for (const auto& row : run_error_experiment(cfg)) {
    CHECK(*row.word_error_rate == 0.0);
    CHECK(*row.analytic_error == 0.0);
  }
}

TEST_CASE("trie and exact error columns agree statistically") {
  ExperimentConfig cfg;
  cfg.ls = {4};
  cfg.ns = {4};
  cfg.ms = {24};
  cfg.rs = {2};
  cfg.backends = {Backend::Exact, Backend::Trie};
  cfg.trials = 8000;
  cfg.base_seed = 3;
  const auto rows = run_error_experiment(cfg);
  REQUIRE(rows.size() == 2);
  const double err_exact = *rows[0].word_error_rate;
  const double err_trie = *rows[1].word_error_rate;
  const double joint_se = std::hypot(*rows[0].std_error, *rows[1].std_error);
  CHECK(std::abs(err_exact - err_trie) <= 4 * joint_se);
  // both calibrate against the same analytic column
  CHECK(std::abs(err_exact - *rows[0].analytic_error) <= 3 * *rows[0].std_error);
  CHECK(std::abs(err_trie - *rows[1].analytic_error) <= 4 * *rows[1].std_error);
}

TEST_CASE("fixed-set mode references the per-set oracle") {
  ExperimentConfig cfg;
  cfg.ls = {2};
  cfg.ns = {6};
  cfg.ms = {10};
  cfg.rs = {2};
  cfg.backends = {Backend::Exact};
  cfg.trials = 20000;
  cfg.base_seed = 21;
  cfg.fixed_set = true;
  const auto rows = run_error_experiment(cfg);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].analytic_error.has_value());
  // per-set truth differs from the over-sets expectation in general, and the
  // empirical rate must match the per-set value
  CHECK(std::abs(*rows[0].word_error_rate - *rows[0].analytic_error) <=
        std::max(3 * *rows[0].std_error, 1e-12));
}

TEST_CASE("analytic curve rows are monotone in m and ordered by r") {
  ExperimentConfig cfg;
  cfg.ls = {256};
  cfg.ns = {4};
  cfg.ms = {1000, 10000, 100000, 1000000};
  cfg.rs = {1, 2, 3};
  const auto rows = run_analytic_curve(cfg);
  REQUIRE(rows.size() == 12);
  // monotone in m at fixed r; ordered by r at fixed m
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i].r == rows[j].r && rows[i].m < rows[j].m)
        CHECK(*rows[i].analytic_error <= *rows[j].analytic_error + 1e-15);
      if (rows[i].m == rows[j].m && rows[i].r < rows[j].r)
        CHECK(*rows[i].analytic_error <= *rows[j].analytic_error + 1e-15);
    }
  }
}

TEST_CASE("memory experiment rows respect the entropy bound") {
  ExperimentConfig cfg;
  cfg.ls = {2, 16};
  cfg.ns = {8, 12};
  cfg.ms = {1, 4, 16, 64};
  const auto rows = run_memory_experiment(cfg);
  CHECK(rows.size() == 16);
  for (const auto& row : rows) {
    CHECK(row.entropy_bits <= static_cast<double>(row.ordered_list_bits) + 1e-9);
    CHECK(row.entropy_bits >= 0.0);
  }
  const std::string csv = memory_rows_to_csv(cfg, rows);
  CHECK(csv.find("l,n,m,entropy_bits,ordered_list_bits,hnn_bits,gbnn_bits") != std::string::npos);
}

TEST_CASE("complexity experiment: trie stays flat, exact grows like m*n") {
  ExperimentConfig cfg;
  cfg.ls = {16};
  cfg.ns = {4, 6, 8};
  cfg.ms = {10, 100};
  cfg.rs = {2};
  cfg.backends = {Backend::Exact, Backend::Trie};
  cfg.trials = 50;
  cfg.base_seed = 5;
  const auto rows = run_complexity_experiment(cfg);
  REQUIRE(rows.size() == 12);
  for (const auto& row : rows) {
    if (row.backend == "exact") {
      CHECK(row.mean_retrieve_ops == static_cast<double>(row.m) * row.n);
    } else {
      CHECK(row.mean_retrieve_ops == row.n + 1.0);  // nodes visited
    }
  }
}

TEST_CASE("gbnn retrieval cost scales with the alphabet squared") {
  for (std::uint32_t l : {4u, 8u}) {
    ExperimentConfig cfg;
    cfg.ls = {l};
    cfg.ns = {4};
    cfg.ms = {10};
    cfg.rs = {1};
    cfg.backends = {Backend::Gbnn};
    cfg.trials = 20;
    cfg.base_seed = 9;
    const auto rows = run_error_experiment(cfg);
    CHECK(*rows[0].mean_op_count == static_cast<double>(4 * l) * (4 * l));
  }
}

TEST_CASE("infeasible points raise resource errors naming the point") {
  ExperimentConfig cfg = small_config();
  cfg.ms = {100000};  // > 4^4
  CHECK_THROWS_WITH_AS(static_cast<void>(run_error_experiment(cfg)),
                       doctest::Contains("m=100000"), ResourceError);

  ExperimentConfig eager = small_config();
  eager.ns = {20};
  eager.ls = {2};
  eager.ms = {4};
  eager.backends = {Backend::Trie};
  eager.options.trie_mode = TrieMode::Eager;
  CHECK_THROWS_AS(static_cast<void>(run_error_experiment(eager)), ResourceError);
}

TEST_CASE("capacity search finds the knee and orders the ratios") {
  CapacitySearchConfig cfg;
  cfg.l = 8;
  cfg.n = 6;
  cfg.r = 1;
  cfg.p0 = 0.01;
  cfg.probe_trials = 400;
  cfg.base_seed = 31;
  cfg.backends = {Backend::Hopfield, Backend::Gbnn};
  const auto rows = run_capacity_experiment(cfg);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.max_m >= 1);
    CHECK(row.bracketed);
    CHECK(row.ratio > 0.0);
  }
  // both networks need more bits than the set entropy at their capacity
  CHECK(rows[0].ratio > 1.0);
  CHECK(rows[1].ratio > 1.0);
}
