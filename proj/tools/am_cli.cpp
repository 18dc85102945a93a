// am: associative-memory workbench. Verbs: build, query, analytic,
// experiment, adversarial. Data goes to stdout (or --out), diagnostics to
// stderr. Exit codes: 0 ok, 1 usage/input error, 2 resource budget exceeded.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>

#include "am/analytics.hpp"
#include "am/errors.hpp"
#include "am/harness.hpp"
#include "am/io.hpp"
#include "am/sampling.hpp"

namespace {

using namespace am;

struct BackendFlags {
  std::string backend = "exact";
  std::string tie = "uniform";
  std::string trie_mode = "lazy";
  std::string path = "leafweighted";
  std::uint32_t max_iters = kDefaultHopfieldIters;
  std::string diag = "paper";
  bool clamp = false;
  std::uint32_t iters = kDefaultGbnnIters;
  std::uint64_t gamma = 0;
  std::string self = "include";
  std::uint64_t seed = 0;
};

void add_backend_flags(CLI::App* cmd, BackendFlags& f, bool with_seed = true) {
  cmd->add_option("--backend", f.backend, "exact | trie | hopfield | gbnn")
      ->check(CLI::IsMember({"exact", "trie", "hopfield", "gbnn"}));
  cmd->add_option("--tie", f.tie, "exact tie policy: uniform | first | maxweight")
      ->check(CLI::IsMember({"uniform", "first", "maxweight"}));
  cmd->add_option("--trie-mode", f.trie_mode, "eager | lazy")
      ->check(CLI::IsMember({"eager", "lazy"}));
  cmd->add_option("--path", f.path, "trie path policy: leafweighted | firstchild")
      ->check(CLI::IsMember({"leafweighted", "firstchild"}));
  cmd->add_option("--max-iters", f.max_iters, "hopfield iteration cap");
  cmd->add_option("--diag", f.diag, "hopfield diagonal: paper | zero")
      ->check(CLI::IsMember({"paper", "zero"}));
  cmd->add_flag("--clamp", f.clamp, "hopfield: reset known entries after each update");
  cmd->add_option("--iters", f.iters, "gbnn iteration count");
  cmd->add_option("--gamma", f.gamma, "gbnn memory coefficient (default n*l)");
  cmd->add_option("--self", f.self, "gbnn self pairs: include | exclude")
      ->check(CLI::IsMember({"include", "exclude"}));
  if (with_seed) cmd->add_option("--seed", f.seed, "rng seed (default 0, never wall-clock)");
}

BackendOptions to_options(const BackendFlags& f) {
  BackendOptions o;
  o.exact_tie = f.tie == "first"       ? TiePolicy::FirstStored
                : f.tie == "maxweight" ? TiePolicy::MaxWeight
                                       : TiePolicy::UniformRandom;
  o.trie_mode = f.trie_mode == "eager" ? TrieMode::Eager : TrieMode::Lazy;
  o.trie_path = f.path == "firstchild" ? PathPolicy::FirstChild : PathPolicy::LeafWeighted;
  o.hopfield_max_iters = f.max_iters;
  o.hopfield_diag = f.diag == "zero" ? DiagonalMode::Zeroed : DiagonalMode::PaperSum;
  o.hopfield_clamp = f.clamp;
  o.gbnn_iters = f.iters;
  o.gbnn_gamma = f.gamma;
  o.gbnn_self = f.self == "exclude" ? SelfPairs::Excluded : SelfPairs::Included;
  return o;
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << data;
}

std::vector<std::uint64_t> parse_u64_list(const std::vector<std::string>& items,
                                          const char* flag) {
  std::vector<std::uint64_t> out;
  for (const auto& item : items) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "invalid integer '" + item + "'");
    }
    if (used != item.size()) throw CLI::ValidationError(flag, "invalid integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> to_u32_list(const std::vector<std::uint64_t>& in, const char* flag) {
  std::vector<std::uint32_t> out;
  for (auto v : in) {
    if (v > UINT32_MAX) throw CLI::ValidationError(flag, "value too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

int cmd_build(const std::string& set_path, const BackendFlags& flags) {
  const WordSet s = read_word_set_file(set_path);
  const BackendOptions opt = to_options(flags);
  std::cout << "set: m=" << s.size() << " n=" << s.word_length() << " l=" << s.alphabet_size()
            << "\n";
  if (flags.backend == "exact") {
    auto mem = BruteForceMemory::store(s);
    std::cout << "exact: memory_bits=" << mem.memory_bits()
              << " store_ops=" << mem.store_op_count() << "\n";
  } else if (flags.backend == "trie") {
    auto mem = TrieMemory::build(s, opt.trie_mode, opt.trie_eager_cap);
    auto st = mem.stats();
    std::cout << "trie: mode=" << (opt.trie_mode == TrieMode::Eager ? "eager" : "lazy")
              << " tries=" << st.trie_count << " nodes=" << st.node_count
              << " bits_estimate=" << st.bits_estimate << " store_ops=" << mem.store_op_count()
              << "\n";
  } else if (flags.backend == "hopfield") {
    auto net = HopfieldNetwork::store(s, opt.hopfield_diag);
    std::cout << "hopfield: neurons=" << net.neuron_count() << " memory_bits=" << net.memory_bits()
              << " memory_bits_with_diag=" << net.memory_bits(true)
              << " store_ops=" << net.store_op_count() << "\n";
  } else {
    auto net = GBNNetwork::store(s, opt.gbnn_self);
    if (opt.gbnn_gamma) net.set_gamma(opt.gbnn_gamma);
    std::cout << "gbnn: neurons=" << net.neuron_count() << " gamma=" << net.gamma()
              << " memory_bits=" << net.memory_bits()
              << " memory_bits_dense=" << net.memory_bits_dense()
              << " store_ops=" << net.store_op_count() << "\n";
  }
  return 0;
}

int cmd_query(const std::string& set_path, const std::string& query_path,
              const BackendFlags& flags) {
  const WordSet s = read_word_set_file(set_path);
  const QueryFile qf = read_queries_file(query_path);
  if (qf.word_length != s.word_length() || qf.alphabet_size != s.alphabet_size())
    throw std::invalid_argument("query file header (n=" + std::to_string(qf.word_length) + ", l=" +
                                std::to_string(qf.alphabet_size) + ") does not match the set");
  const BackendOptions opt = to_options(flags);

  std::optional<BruteForceMemory> exact;
  std::optional<TrieMemory> trie;
  std::optional<HopfieldNetwork> hopfield;
  std::optional<GBNNetwork> gbnn;
  if (flags.backend == "exact") exact.emplace(BruteForceMemory::store(s));
  if (flags.backend == "trie") trie.emplace(TrieMemory::build(s, opt.trie_mode, opt.trie_eager_cap));
  if (flags.backend == "hopfield") hopfield.emplace(HopfieldNetwork::store(s, opt.hopfield_diag));
  if (flags.backend == "gbnn") {
    gbnn.emplace(GBNNetwork::store(s, opt.gbnn_self));
    if (opt.gbnn_gamma) gbnn->set_gamma(opt.gbnn_gamma);
  }

  for (std::size_t qi = 0; qi < qf.queries.size(); ++qi) {
    Rng rng = Rng::stream(flags.seed, qi);
    RetrievalResult res;
    if (exact) {
      res = retrieve(*exact, qf.queries[qi], opt.exact_tie, rng);
    } else if (trie) {
      res = retrieve(*trie, qf.queries[qi], opt.trie_path, rng);
    } else if (hopfield) {
      res = retrieve_word(*hopfield, qf.queries[qi], opt.hopfield_max_iters, opt.hopfield_clamp,
                          &s);
    } else {
      res = retrieve(*gbnn, qf.queries[qi], opt.gbnn_iters, rng, &s);
    }
    std::cout << (res.word ? format_word(*res.word) : std::string("-")) << ' '
              << to_string(res.status) << ' '
              << (res.candidate_count ? std::to_string(*res.candidate_count) : std::string("-"))
              << ' ' << res.op_count << "\n";
  }
  return 0;
}

int cmd_analytic(const std::string& kind, std::uint32_t l, std::uint32_t n, std::uint64_t m,
                 std::uint32_t r, double p0, const std::string& mode_name) {
  const EvalMode mode = mode_name == "exact"      ? EvalMode::ExactBigInt
                        : mode_name == "loggamma" ? EvalMode::LogGamma
                                                  : EvalMode::Auto;
  std::cout << "# columns: quantity,l,n,m,r,p0,value,log10_value\n";
  auto emit_row = [&](double value, bool with_log10) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::cout << kind << ',' << l << ',' << n << ',' << m << ',' << r << ',' << p0 << ',' << buf;
    if (with_log10) {
      std::snprintf(buf, sizeof buf, "%.12g", std::log10(value));
      std::cout << ',' << buf;
    } else {
      std::cout << ',';
    }
    std::cout << "\n";
  };
  // probabilities carry a log10 column as well (error curves live on log axes)
  auto emit_prob = [&](double value) { emit_row(value, true); };
  auto emit = [&](double value) { emit_row(value, false); };
  if (kind == "eq2") {
    emit_prob(expected_success(l, n, m, r, mode));
  } else if (kind == "err") {
    emit_prob(residual_error(l, n, m, r, mode));
  } else if (kind == "eq4") {
    emit_prob(expected_success_asymptotic(l, n, m, r));
  } else if (kind == "capacity") {
    emit(static_cast<double>(capacity_estimate(l, n, r, p0)));
  } else if (kind == "entropy") {
    emit(set_entropy_bits(l, n, m, mode));
  } else if (kind == "ratio") {
    auto total = universe_size(l, n);
    if (!total) throw std::invalid_argument("ratio: l^n overflows; pass smaller l, n");
    if (m == 0 || *total <= m) throw std::invalid_argument("ratio needs c = l^n / m > 1");
    emit(ordered_to_unordered_ratio(static_cast<double>(*total) / static_cast<double>(m), n, l));
  } else if (kind == "membits") {
    emit(static_cast<double>(hnn_memory_bits(l, n, m)));
    emit(static_cast<double>(gbnn_memory_bits(l, n)));
  } else {
    throw CLI::ValidationError("analytic", "unknown quantity '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"associative-memory workbench: brute-force ML, permutation tries, Hopfield and "
               "Gripon-Berrou networks, closed-form predictions and seeded experiments"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "build a memory from a word-set file, print stats");
  std::string build_set;
  BackendFlags build_flags;
  build->add_option("--set", build_set, "word-set file (header 'n l')")->required();
  add_backend_flags(build, build_flags);

  // query
  auto* query = app.add_subcommand("query", "answer partial-word queries from a file");
  std::string query_set, query_file;
  BackendFlags query_flags;
  query->add_option("--set", query_set, "word-set file")->required();
  query->add_option("--queries", query_file, "query file ('?' for erased symbols)")->required();
  add_backend_flags(query, query_flags);

  // analytic
  auto* analytic = app.add_subcommand(
      "analytic", "closed forms: eq2 | err | eq4 | capacity | entropy | ratio | membits");
  std::string analytic_kind, analytic_mode = "auto";
  std::uint64_t a_l = 2, a_n = 2, a_m = 1, a_r = 0;
  double a_p0 = 0.01;
  analytic->add_option("quantity", analytic_kind, "quantity to evaluate")->required();
  analytic->add_option("--l", a_l, "alphabet size");
  analytic->add_option("--n", a_n, "word length");
  analytic->add_option("--m", a_m, "stored-set size");
  analytic->add_option("--r", a_r, "erasure count");
  analytic->add_option("--p0", a_p0, "target residual error");
  analytic->add_option("--mode", analytic_mode, "auto | exact | loggamma")
      ->check(CLI::IsMember({"auto", "exact", "loggamma"}));

  // experiment
  auto* experiment = app.add_subcommand(
      "experiment",
      "seeded experiments: error | fig1 | fig2 | fig3 | table1 | table2.\n"
      "CSV schemas (after # comment lines echoing version, seed and options):\n"
      "  error/fig1/fig2: backend,l,n,m,r,trials,word_error_rate,stderr,analytic_error,"
      "mean_op_count,memory_bits,seed\n"
      "  fig3:   l,n,m,entropy_bits,ordered_list_bits,hnn_bits,gbnn_bits\n"
      "  table1: backend,l,n,r,p0,probe_trials,max_m,bracketed,memory_bits,entropy_bits,ratio\n"
      "  table2: backend,l,n,m,r,trials,mean_retrieve_ops,mean_store_ops,"
      "retrieve_ratio_vs_prev_n");
  std::string exp_kind, exp_out;
  std::uint64_t exp_seed = 0, exp_trials = 0;
  unsigned exp_workers = 0;
  bool exp_fixed = false;
  std::vector<std::string> exp_l, exp_n, exp_m, exp_r, exp_backends;
  double exp_p0 = 0.01;
  BackendFlags exp_flags;
  experiment->add_option("kind", exp_kind, "experiment kind")->required();
  experiment->add_option("--out", exp_out, "output CSV path (default stdout)");
  experiment->add_option("--seed", exp_seed, "base seed (default 0)");
  experiment->add_option("--trials", exp_trials, "trials per point (0 = preset default)");
  experiment->add_option("--workers", exp_workers, "worker threads (0 = all; output identical)");
  experiment->add_flag("--fixed-set", exp_fixed, "one sampled set per point, per-set oracle");
  experiment->add_option("--l", exp_l, "alphabet sizes")->delimiter(',');
  experiment->add_option("--n", exp_n, "word lengths")->delimiter(',');
  experiment->add_option("--m", exp_m, "set sizes")->delimiter(',');
  experiment->add_option("--r", exp_r, "erasure counts")->delimiter(',');
  experiment->add_option("--backends", exp_backends, "subset of exact,trie,hopfield,gbnn")
      ->delimiter(',');
  experiment->add_option("--p0", exp_p0, "target error for table1");
  add_backend_flags(experiment, exp_flags, /*with_seed=*/false);

  // adversarial
  auto* adversarial =
      app.add_subcommand("adversarial", "write the single-substitution lower-bound set");
  std::uint64_t adv_l = 2, adv_n = 3;
  std::string adv_out;
  adversarial->add_option("--l", adv_l, "alphabet size")->required();
  adversarial->add_option("--n", adv_n, "word length")->required();
  adversarial->add_option("--out", adv_out, "output word-set file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*build) return cmd_build(build_set, build_flags);
    if (*query) return cmd_query(query_set, query_file, query_flags);
    if (*analytic)
      return cmd_analytic(analytic_kind, static_cast<std::uint32_t>(a_l),
                          static_cast<std::uint32_t>(a_n), a_m, static_cast<std::uint32_t>(a_r),
                          a_p0, analytic_mode);
    if (*adversarial) {
      const WordSet s = adversarial_set(static_cast<std::uint32_t>(adv_l),
                                        static_cast<std::uint32_t>(adv_n));
      std::string data;
      data += std::to_string(s.word_length()) + ' ' + std::to_string(s.alphabet_size()) + '\n';
      for (std::size_t i = 0; i < s.size(); ++i) data += format_word(s.word(i)) + '\n';
      write_output(adv_out, data);
      return 0;
    }

    // experiment
    ExperimentConfig cfg;
    cfg.base_seed = exp_seed;
    cfg.workers = exp_workers;
    cfg.fixed_set = exp_fixed;
    cfg.options = to_options(exp_flags);
    auto lists_override = [&](std::vector<std::uint32_t>& ls, std::vector<std::uint32_t>& ns,
                              std::vector<std::uint64_t>& ms, std::vector<std::uint32_t>& rs) {
      if (!exp_l.empty()) ls = to_u32_list(parse_u64_list(exp_l, "--l"), "--l");
      if (!exp_n.empty()) ns = to_u32_list(parse_u64_list(exp_n, "--n"), "--n");
      if (!exp_m.empty()) ms = parse_u64_list(exp_m, "--m");
      if (!exp_r.empty()) rs = to_u32_list(parse_u64_list(exp_r, "--r"), "--r");
    };
    if (!exp_backends.empty()) {
      cfg.backends.clear();
      for (const auto& name : exp_backends) {
        auto b = backend_from_string(name);
        if (!b) throw CLI::ValidationError("--backends", "unknown backend '" + name + "'");
        cfg.backends.push_back(*b);
      }
    }

    std::string csv;
    if (exp_kind == "error") {
      cfg.trials = exp_trials ? exp_trials : 1000;
      lists_override(cfg.ls, cfg.ns, cfg.ms, cfg.rs);
      csv = result_rows_to_csv(cfg, run_error_experiment(cfg), "error experiment");
    } else if (exp_kind == "fig1") {
      cfg.ls = {256};
      cfg.ns = {4};
      cfg.ms = {1000, 10000, 100000, 1000000, 10000000, 100000000};
      cfg.rs = {1, 2, 3};
      lists_override(cfg.ls, cfg.ns, cfg.ms, cfg.rs);
      csv = result_rows_to_csv(cfg, run_analytic_curve(cfg), "fig1 analytic curve");
    } else if (exp_kind == "fig2") {
      cfg.ls = {256};
      cfg.ns = {4};
      cfg.ms = {500, 2000, 8000, 32000};
      cfg.rs = {2};
      cfg.trials = exp_trials ? exp_trials : 5000;
      if (exp_backends.empty())
        cfg.backends = {Backend::Exact, Backend::Gbnn, Backend::Hopfield};
      lists_override(cfg.ls, cfg.ns, cfg.ms, cfg.rs);
      csv = result_rows_to_csv(cfg, run_error_experiment(cfg), "fig2 word-error experiment");
    } else if (exp_kind == "fig3") {
      cfg.ls = {2, 256};
      cfg.ns = {4, 8};
      cfg.ms = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
      lists_override(cfg.ls, cfg.ns, cfg.ms, cfg.rs);
      csv = memory_rows_to_csv(cfg, run_memory_experiment(cfg));
    } else if (exp_kind == "table1") {
      CapacitySearchConfig ccfg;
      ccfg.base_seed = exp_seed;
      ccfg.workers = exp_workers;
      ccfg.options = cfg.options;
      ccfg.p0 = exp_p0;
      if (exp_trials) ccfg.probe_trials = exp_trials;
      if (!exp_l.empty()) ccfg.l = to_u32_list(parse_u64_list(exp_l, "--l"), "--l").at(0);
      if (!exp_n.empty()) ccfg.n = to_u32_list(parse_u64_list(exp_n, "--n"), "--n").at(0);
      if (!exp_r.empty()) ccfg.r = to_u32_list(parse_u64_list(exp_r, "--r"), "--r").at(0);
      if (!exp_backends.empty()) ccfg.backends = cfg.backends;
      csv = capacity_rows_to_csv(ccfg, run_capacity_experiment(ccfg));
    } else if (exp_kind == "table2") {
      cfg.ls = {16};
      cfg.ns = {4, 6, 8, 10, 12};
      cfg.ms = {10, 100, 1000};
      cfg.rs = {2};
      cfg.trials = exp_trials ? exp_trials : 200;
      if (exp_backends.empty()) cfg.backends = {Backend::Exact, Backend::Trie};
      lists_override(cfg.ls, cfg.ns, cfg.ms, cfg.rs);
      csv = complexity_rows_to_csv(cfg, run_complexity_experiment(cfg));
    } else {
      throw CLI::ValidationError("experiment", "unknown kind '" + exp_kind + "'");
    }
    write_output(exp_out, csv);
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
