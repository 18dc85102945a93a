#include "am/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>

#include "am/analytics.hpp"
#include "am/errors.hpp"
#include "am/sampling.hpp"

namespace am {

namespace {

struct Point {
  std::uint32_t l = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t r = 0;

  std::string describe() const {
    return "(l=" + std::to_string(l) + ", n=" + std::to_string(n) + ", m=" + std::to_string(m) +
           ", r=" + std::to_string(r) + ")";
  }
};

std::vector<Point> cross_points(const ExperimentConfig& cfg) {
  std::vector<Point> points;
  for (auto l : cfg.ls)
    for (auto n : cfg.ns)
      for (auto m : cfg.ms)
        for (auto r : cfg.rs) points.push_back({l, n, m, r});
  return points;
}

void check_point(const Point& p, const ExperimentConfig& cfg) {
  if (p.l < 2) throw std::invalid_argument("alphabet size must be >= 2 at " + p.describe());
  if (p.n < 1) throw std::invalid_argument("word length must be >= 1 at " + p.describe());
  if (p.r > p.n) throw std::invalid_argument("r > n at " + p.describe());
  auto total = universe_size(p.l, p.n);
  if (total && p.m > *total)
    throw ResourceError("infeasible point " + p.describe() + ": m exceeds l^n = " +
                        std::to_string(*total));
  if (p.m == 0) throw std::invalid_argument("m must be >= 1 at " + p.describe());
  for (Backend b : cfg.backends) {
    if (b == Backend::Trie) {
      if (p.n > 64)
        throw ResourceError("infeasible point " + p.describe() + ": trie needs n <= 64");
      if (cfg.options.trie_mode == TrieMode::Eager && p.n > cfg.options.trie_eager_cap)
        throw ResourceError("infeasible point " + p.describe() + ": eager trie cap is n <= " +
                            std::to_string(cfg.options.trie_eager_cap));
    }
    if (b == Backend::Gbnn && cfg.options.gbnn_gamma != 0 &&
        cfg.options.gbnn_gamma < std::uint64_t{p.l} * p.n)
      throw std::invalid_argument("gbnn gamma below n*l at " + p.describe());
  }
}

unsigned effective_workers(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Splits [0, trials) into contiguous chunks, one thread each. body(t, worker)
// must only touch worker-local state; results are merged by the caller.
template <typename Body>
void parallel_trials(std::uint64_t trials, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, trials)));
  if (workers == 1) {
    for (std::uint64_t t = 0; t < trials; ++t) body(t, 0);
    return;
  }
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
    threads.emplace_back([&body, begin, end, w] {
      for (std::uint64_t t = begin; t < end; ++t) body(t, w);
    });
  }
  for (auto& th : threads) th.join();
}

struct Accum {
  std::uint64_t failures = 0;
  std::uint64_t op_sum = 0;
  std::uint64_t store_op_sum = 0;
  std::uint64_t memory_bits_sum = 0;

  void merge(const Accum& other) {
    failures += other.failures;
    op_sum += other.op_sum;
    store_op_sum += other.store_op_sum;
    memory_bits_sum += other.memory_bits_sum;
  }
};

struct Memories {
  std::optional<BruteForceMemory> exact;
  std::optional<TrieMemory> trie;
  std::optional<HopfieldNetwork> hopfield;
  std::optional<GBNNetwork> gbnn;

  static Memories build(const WordSet& s, const std::vector<Backend>& backends,
                        const BackendOptions& opt) {
    Memories mem;
    for (Backend b : backends) {
      switch (b) {
        case Backend::Exact:
          if (!mem.exact) mem.exact.emplace(BruteForceMemory::store(s));
          break;
        case Backend::Trie:
          if (!mem.trie) mem.trie.emplace(TrieMemory::build(s, opt.trie_mode, opt.trie_eager_cap));
          break;
        case Backend::Hopfield:
          if (!mem.hopfield) mem.hopfield.emplace(HopfieldNetwork::store(s, opt.hopfield_diag));
          break;
        case Backend::Gbnn:
          if (!mem.gbnn) {
            mem.gbnn.emplace(GBNNetwork::store(s, opt.gbnn_self));
            if (opt.gbnn_gamma) mem.gbnn->set_gamma(opt.gbnn_gamma);
          }
          break;
      }
    }
    return mem;
  }

  RetrievalResult retrieve_with(Backend b, std::span<const Symbol> q, const BackendOptions& opt,
                                std::uint64_t tie_seed) const {
    Rng rng(tie_seed);
    switch (b) {
      case Backend::Exact:
        return am::retrieve(*exact, q, opt.exact_tie, rng);
      case Backend::Trie:
        return am::retrieve(*trie, q, opt.trie_path, rng);
      case Backend::Hopfield:
        return retrieve_word(*hopfield, q, opt.hopfield_max_iters, opt.hopfield_clamp, nullptr);
      case Backend::Gbnn:
        return am::retrieve(*gbnn, q, opt.gbnn_iters, rng, nullptr);
    }
    throw std::logic_error("unknown backend");
  }

  std::uint64_t memory_bits(Backend b) const {
    switch (b) {
      case Backend::Exact: return exact->memory_bits();
      case Backend::Trie: return trie->stats().bits_estimate;
      case Backend::Hopfield: return hopfield->memory_bits();
      case Backend::Gbnn: return gbnn->memory_bits();
    }
    return 0;
  }

  std::uint64_t store_ops(Backend b) const {
    switch (b) {
      case Backend::Exact: return exact->store_op_count();
      case Backend::Trie: return trie->store_op_count();
      case Backend::Hopfield: return hopfield->store_op_count();
      case Backend::Gbnn: return gbnn->store_op_count();
    }
    return 0;
  }
};

// Seed layout: point_seed -> per-trial seed -> purpose streams. Purpose 0
// samples the set, 1 draws the query, 2 seeds tie-breaking (shared across
// backends so their draws are paired).
constexpr std::uint64_t kSetPurpose = 0;
constexpr std::uint64_t kQueryPurpose = 1;
constexpr std::uint64_t kTiePurpose = 2;

std::vector<Accum> run_error_point(const Point& p, const std::vector<Backend>& backends,
                                   const ExperimentConfig& cfg, std::uint64_t point_seed,
                                   const WordSet* shared_set, Memories* shared_memories) {
  const unsigned workers = effective_workers(cfg.workers);
  const bool fixed = shared_set != nullptr;
  std::vector<std::vector<Accum>> partial(
      std::max<unsigned>(1, static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials))),
      std::vector<Accum>(backends.size()));

  parallel_trials(cfg.trials, workers, [&](std::uint64_t t, unsigned worker) {
    const std::uint64_t trial_seed = derive_stream_seed(point_seed, t);
    std::optional<WordSet> local_set;
    const WordSet* s = shared_set;
    if (!fixed) {
      Rng sample_rng(derive_stream_seed(trial_seed, kSetPurpose));
      local_set.emplace(sample_word_set(p.l, p.n, p.m, sample_rng));
      s = &*local_set;
    }
    std::optional<Memories> local_mem;
    if (!fixed) local_mem.emplace(Memories::build(*s, backends, cfg.options));
    const Memories& mem = fixed ? *shared_memories : *local_mem;

    Rng query_rng(derive_stream_seed(trial_seed, kQueryPurpose));
    const std::size_t w_idx = static_cast<std::size_t>(query_rng.below(s->size()));
    const auto original = s->word(w_idx);
    const ErasurePattern pattern = sample_pattern(p.n, p.r, query_rng);
    const PartialWord q = apply_pattern(original, pattern);
    const std::uint64_t tie_seed = derive_stream_seed(trial_seed, kTiePurpose);

    for (std::size_t b = 0; b < backends.size(); ++b) {
      const RetrievalResult res = mem.retrieve_with(backends[b], q, cfg.options, tie_seed);
      const bool success = res.word && res.word->size() == original.size() &&
                           std::equal(res.word->begin(), res.word->end(), original.begin());
      Accum& acc = partial[worker][b];
      if (!success) ++acc.failures;
      acc.op_sum += res.op_count;
      if (!fixed) {
        acc.store_op_sum += mem.store_ops(backends[b]);
        acc.memory_bits_sum += mem.memory_bits(backends[b]);
      }
    }
  });

  std::vector<Accum> totals(backends.size());
  for (const auto& worker_accums : partial)
    for (std::size_t b = 0; b < backends.size(); ++b) totals[b].merge(worker_accums[b]);
  return totals;
}

constexpr const char* kVersion = "0.1.0";

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt_g(*v) : std::string(); }

const char* tie_name(TiePolicy p) {
  switch (p) {
    case TiePolicy::UniformRandom: return "uniform";
    case TiePolicy::FirstStored: return "first";
    case TiePolicy::MaxWeight: return "maxweight";
  }
  return "?";
}

std::string options_comment(const BackendOptions& o) {
  std::string s = "# options: exact_tie=";
  s += tie_name(o.exact_tie);
  s += o.trie_mode == TrieMode::Eager ? " trie_mode=eager" : " trie_mode=lazy";
  s += o.trie_path == PathPolicy::LeafWeighted ? " trie_path=leafweighted" : " trie_path=firstchild";
  s += " hopfield_max_iters=" + std::to_string(o.hopfield_max_iters);
  s += o.hopfield_diag == DiagonalMode::PaperSum ? " hopfield_diag=paper" : " hopfield_diag=zero";
  s += std::string(" hopfield_clamp=") + (o.hopfield_clamp ? "1" : "0");
  s += " gbnn_iters=" + std::to_string(o.gbnn_iters);
  s += " gbnn_gamma=" + (o.gbnn_gamma ? std::to_string(o.gbnn_gamma) : std::string("auto"));
  s += o.gbnn_self == SelfPairs::Included ? " gbnn_self=include" : " gbnn_self=exclude";
  return s;
}

}  // namespace

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Exact: return "exact";
    case Backend::Trie: return "trie";
    case Backend::Hopfield: return "hopfield";
    case Backend::Gbnn: return "gbnn";
  }
  return "?";
}

std::optional<Backend> backend_from_string(const std::string& name) {
  if (name == "exact") return Backend::Exact;
  if (name == "trie") return Backend::Trie;
  if (name == "hopfield") return Backend::Hopfield;
  if (name == "gbnn") return Backend::Gbnn;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (ls.empty() || ns.empty() || ms.empty() || rs.empty())
    throw std::invalid_argument("parameter sweep must be nonempty");
  if (backends.empty()) throw std::invalid_argument("at least one backend required");
  if (options.hopfield_max_iters < 1)
    throw std::invalid_argument("hopfield max_iters must be >= 1");
  if (options.gbnn_iters < 1) throw std::invalid_argument("gbnn iterations must be >= 1");
  for (const Point& p : cross_points(*this)) check_point(p, *this);
}

std::vector<ResultRow> run_error_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<Point> points = cross_points(cfg);
  std::vector<ResultRow> rows;
  rows.reserve(points.size() * cfg.backends.size());

  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const Point& p = points[pi];
    const std::uint64_t point_seed = derive_stream_seed(cfg.base_seed, pi);

    std::optional<WordSet> shared_set;
    std::optional<Memories> shared_memories;
    std::optional<double> fixed_reference;
    if (cfg.fixed_set) {
      Rng rng(derive_stream_seed(point_seed, std::uint64_t{1} << 63));
      shared_set.emplace(sample_word_set(p.l, p.n, p.m, rng));
      shared_memories.emplace(Memories::build(*shared_set, cfg.backends, cfg.options));
      try {
        fixed_reference =
            1.0 - exact_success_probability(*shared_set, p.r, cfg.oracle_budget)
                      .convert_to<double>();
      } catch (const ResourceError&) {
        // per-set oracle beyond budget; the column stays empty
      }
    }

    const std::vector<Accum> totals =
        run_error_point(p, cfg.backends, cfg, point_seed,
                        cfg.fixed_set ? &*shared_set : nullptr,
                        cfg.fixed_set ? &*shared_memories : nullptr);

    for (std::size_t b = 0; b < cfg.backends.size(); ++b) {
      ResultRow row;
      row.backend = to_string(cfg.backends[b]);
      row.l = p.l;
      row.n = p.n;
      row.m = p.m;
      row.r = p.r;
      row.trials = cfg.trials;
      const double err = static_cast<double>(totals[b].failures) / cfg.trials;
      row.word_error_rate = err;
      row.std_error = std::sqrt(err * (1.0 - err) / static_cast<double>(cfg.trials));
      row.analytic_error =
          cfg.fixed_set ? fixed_reference : std::optional<double>(residual_error(p.l, p.n, p.m, p.r));
      row.mean_op_count = static_cast<double>(totals[b].op_sum) / cfg.trials;
      if (cfg.fixed_set) {
        row.memory_bits = static_cast<double>(shared_memories->memory_bits(cfg.backends[b]));
      } else {
        row.memory_bits = static_cast<double>(totals[b].memory_bits_sum) / cfg.trials;
      }
      row.seed = cfg.base_seed;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ResultRow> run_analytic_curve(const ExperimentConfig& cfg) {
  if (cfg.ls.empty() || cfg.ns.empty() || cfg.ms.empty() || cfg.rs.empty())
    throw std::invalid_argument("parameter sweep must be nonempty");
  std::vector<ResultRow> rows;
  for (const Point& p : cross_points(cfg)) {
    if (p.r > p.n) throw std::invalid_argument("r > n at " + p.describe());
    ResultRow row;
    row.backend = "analytic";
    row.l = p.l;
    row.n = p.n;
    row.m = p.m;
    row.r = p.r;
    row.trials = 0;
    row.analytic_error = residual_error(p.l, p.n, p.m, p.r);
    row.seed = cfg.base_seed;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string result_rows_to_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows,
                               const std::string& title) {
  std::string out = "# amlab " + title + "\n";
  out += "# version=" + std::string(kVersion) + " seed=" + std::to_string(cfg.base_seed) +
         " trials=" + std::to_string(cfg.trials) + " fixed_set=" +
         (cfg.fixed_set ? "1" : "0") + "\n";
  out += "# backends=";
  for (std::size_t i = 0; i < cfg.backends.size(); ++i) {
    if (i) out += ',';
    out += to_string(cfg.backends[i]);
  }
  out += "\n";
  out += options_comment(cfg.options) + "\n";
  out +=
      "# op_count units: exact=symbol-comparisons trie=nodes-visited "
      "hopfield=multiply-accumulates gbnn=dense-score-accumulations\n";
  out += "# analytic_error: ML residual-error prediction for the point\n";
  out += "backend,l,n,m,r,trials,word_error_rate,stderr,analytic_error,mean_op_count,memory_bits,seed\n";
  for (const auto& row : rows) {
    out += row.backend;
    out += ',' + std::to_string(row.l) + ',' + std::to_string(row.n) + ',' + std::to_string(row.m) +
           ',' + std::to_string(row.r) + ',' + std::to_string(row.trials);
    out += ',' + fmt_opt(row.word_error_rate);
    out += ',' + fmt_opt(row.std_error);
    out += ',' + fmt_opt(row.analytic_error);
    out += ',' + fmt_opt(row.mean_op_count);
    out += ',' + fmt_opt(row.memory_bits);
    out += ',' + std::to_string(row.seed) + '\n';
  }
  return out;
}

std::vector<MemoryRow> run_memory_experiment(const ExperimentConfig& cfg) {
  if (cfg.ls.empty() || cfg.ns.empty() || cfg.ms.empty())
    throw std::invalid_argument("parameter sweep must be nonempty");
  std::vector<MemoryRow> rows;
  for (auto l : cfg.ls) {
    for (auto n : cfg.ns) {
      for (auto m : cfg.ms) {
        auto total = universe_size(l, n);
        if (total && m > *total) continue;  // sweep point beyond this universe
        MemoryRow row;
        row.l = l;
        row.n = n;
        row.m = m;
        row.entropy_bits = set_entropy_bits(l, n, m);
        row.ordered_list_bits = ordered_list_bits(l, n, m);
        row.hnn_bits = hnn_memory_bits(l, n, m);
        row.gbnn_bits = gbnn_memory_bits(l, n);
        // Kraft/entropy counting bound; violating it means a model bug.
        if (row.entropy_bits > static_cast<double>(row.ordered_list_bits) + 1e-6)
          throw std::logic_error("entropy exceeded the ordered-list bound at (l=" +
                                 std::to_string(l) + ", n=" + std::to_string(n) + ", m=" +
                                 std::to_string(m) + ")");
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string memory_rows_to_csv(const ExperimentConfig& cfg, const std::vector<MemoryRow>& rows) {
  std::string out = "# amlab memory experiment\n";
  out += "# version=" + std::string(kVersion) + " seed=" + std::to_string(cfg.base_seed) + "\n";
  out += "# entropy_bits=log2 C(l^n, m); ordered_list_bits=m*n*ceil(log2 l); ";
  out += "hnn_bits=C(n',2)*ceil(log2(2m+1)); gbnn_bits=C(n,2)*l^2\n";
  out += "l,n,m,entropy_bits,ordered_list_bits,hnn_bits,gbnn_bits\n";
  for (const auto& row : rows) {
    out += std::to_string(row.l) + ',' + std::to_string(row.n) + ',' + std::to_string(row.m) + ',' +
           fmt_g(row.entropy_bits) + ',' + std::to_string(row.ordered_list_bits) + ',' +
           std::to_string(row.hnn_bits) + ',' + std::to_string(row.gbnn_bits) + '\n';
  }
  return out;
}

std::vector<CapacityRow> run_capacity_experiment(const CapacitySearchConfig& cfg) {
  if (cfg.backends.empty()) throw std::invalid_argument("at least one backend required");
  if (cfg.probe_trials < 1) throw std::invalid_argument("probe_trials must be >= 1");
  if (!(cfg.p0 > 0.0 && cfg.p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0, 1)");

  std::vector<CapacityRow> rows;
  for (std::size_t bi = 0; bi < cfg.backends.size(); ++bi) {
    const Backend backend = cfg.backends[bi];
    std::uint64_t probe_id = 0;
    auto probe = [&](std::uint64_t m) {
      ExperimentConfig probe_cfg;
      probe_cfg.ls = {cfg.l};
      probe_cfg.ns = {cfg.n};
      probe_cfg.ms = {m};
      probe_cfg.rs = {cfg.r};
      probe_cfg.backends = {backend};
      probe_cfg.trials = cfg.probe_trials;
      probe_cfg.base_seed = derive_stream_seed(cfg.base_seed, bi * 100000 + probe_id++);
      probe_cfg.workers = cfg.workers;
      probe_cfg.options = cfg.options;
      return *run_error_experiment(probe_cfg)[0].word_error_rate;
    };

    auto total = universe_size(cfg.l, cfg.n);
    const std::uint64_t cap = total ? std::min(cfg.m_cap, *total) : cfg.m_cap;

    CapacityRow row;
    row.backend = to_string(backend);
    row.l = cfg.l;
    row.n = cfg.n;
    row.r = cfg.r;
    row.p0 = cfg.p0;
    row.probe_trials = cfg.probe_trials;

    std::uint64_t good = 0;   // largest m seen with error <= p0
    std::uint64_t bad = 0;    // smallest m seen with error > p0
    for (std::uint64_t m = 1; m <= cap; m *= 2) {
      if (probe(m) <= cfg.p0) {
        good = m;
      } else {
        bad = m;
        break;
      }
      if (m > cap / 2) break;  // next doubling would pass the cap
    }
    if (bad == 0) {
      // never failed below the cap; report the last good m, unbracketed
      row.max_m = good;
      row.bracketed = false;
    } else if (good == 0) {
      row.max_m = 0;
      row.bracketed = false;
    } else {
      // bisect to a +-20% window
      while (bad > good + 1 && static_cast<double>(bad) > 1.2 * static_cast<double>(good)) {
        const std::uint64_t mid = good + (bad - good) / 2;
        if (probe(mid) <= cfg.p0)
          good = mid;
        else
          bad = mid;
      }
      row.max_m = good;
      row.bracketed = true;
    }

    if (row.max_m > 0) {
      row.memory_bits = backend == Backend::Hopfield ? hnn_memory_bits(cfg.l, cfg.n, row.max_m)
                        : backend == Backend::Gbnn
                            ? gbnn_memory_bits(cfg.l, cfg.n)
                            : ordered_list_bits(cfg.l, cfg.n, row.max_m);
      row.entropy_bits = set_entropy_bits(cfg.l, cfg.n, row.max_m);
      row.ratio = row.entropy_bits > 0 ? static_cast<double>(row.memory_bits) / row.entropy_bits
                                       : 0.0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string capacity_rows_to_csv(const CapacitySearchConfig& cfg,
                                 const std::vector<CapacityRow>& rows) {
  std::string out = "# amlab capacity experiment (max m with empirical error <= p0)\n";
  out += "# version=" + std::string(kVersion) + " seed=" + std::to_string(cfg.base_seed) +
         " probe_trials=" + std::to_string(cfg.probe_trials) + " window=+-20%\n";
  out += options_comment(cfg.options) + "\n";
  out += "backend,l,n,r,p0,probe_trials,max_m,bracketed,memory_bits,entropy_bits,ratio\n";
  for (const auto& row : rows) {
    out += row.backend + ',' + std::to_string(row.l) + ',' + std::to_string(row.n) + ',' +
           std::to_string(row.r) + ',' + fmt_g(row.p0) + ',' + std::to_string(row.probe_trials) +
           ',' + std::to_string(row.max_m) + ',' + (row.bracketed ? "1" : "0") + ',' +
           std::to_string(row.memory_bits) + ',' + fmt_g(row.entropy_bits) + ',' +
           fmt_g(row.ratio) + '\n';
  }
  return out;
}

std::vector<ComplexityRow> run_complexity_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.ls.size() != 1 || cfg.rs.size() != 1)
    throw std::invalid_argument("complexity experiment expects a single l and r");
  const std::uint32_t l = cfg.ls[0];
  const std::uint32_t r = cfg.rs[0];

  std::vector<ComplexityRow> rows;
  std::uint64_t sub = 0;
  for (Backend backend : cfg.backends) {
    for (std::uint64_t m : cfg.ms) {
      double prev_ops = 0.0;
      bool have_prev = false;
      for (std::uint32_t n : cfg.ns) {
        const Point p{l, n, m, r};
        const std::uint64_t point_seed = derive_stream_seed(cfg.base_seed, 0x10000 + sub++);
        const std::vector<Backend> single{backend};
        const std::vector<Accum> totals =
            run_error_point(p, single, cfg, point_seed, nullptr, nullptr);

        ComplexityRow row;
        row.backend = to_string(backend);
        row.l = l;
        row.n = n;
        row.m = m;
        row.r = r;
        row.trials = cfg.trials;
        row.mean_retrieve_ops = static_cast<double>(totals[0].op_sum) / cfg.trials;
        row.mean_store_ops = static_cast<double>(totals[0].store_op_sum) / cfg.trials;
        if (have_prev && prev_ops > 0.0)
          row.retrieve_ratio_vs_prev_n = row.mean_retrieve_ops / prev_ops;
        prev_ops = row.mean_retrieve_ops;
        have_prev = true;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string complexity_rows_to_csv(const ExperimentConfig& cfg,
                                   const std::vector<ComplexityRow>& rows) {
  std::string out = "# amlab complexity experiment\n";
  out += "# version=" + std::string(kVersion) + " seed=" + std::to_string(cfg.base_seed) +
         " trials=" + std::to_string(cfg.trials) + "\n";
  out += options_comment(cfg.options) + "\n";
  out +=
      "# op units: exact=symbol-comparisons trie=nodes-visited "
      "hopfield=multiply-accumulates gbnn=dense-score-accumulations\n";
  out += "backend,l,n,m,r,trials,mean_retrieve_ops,mean_store_ops,retrieve_ratio_vs_prev_n\n";
  for (const auto& row : rows) {
    out += row.backend + ',' + std::to_string(row.l) + ',' + std::to_string(row.n) + ',' +
           std::to_string(row.m) + ',' + std::to_string(row.r) + ',' + std::to_string(row.trials) +
           ',' + fmt_g(row.mean_retrieve_ops) + ',' + fmt_g(row.mean_store_ops) + ',' +
           fmt_opt(row.retrieve_ratio_vs_prev_n) + '\n';
  }
  return out;
}

WordSet adversarial_set(std::uint32_t l, std::uint32_t n) {
  if (l < 2) throw std::invalid_argument("adversarial_set: alphabet size must be >= 2");
  if (n < 2) throw std::invalid_argument("adversarial_set: word length must be >= 2");
  std::vector<Word> words;
  std::set<Word> seen;
  for (std::uint32_t k = 0; k < n; ++k) {
    for (Symbol a = 0; a < l; ++a) {
      for (Symbol b = 0; b < l; ++b) {
        if (a == b) continue;
        Word w(n, a);
        w[k] = b;
        if (seen.insert(w).second) words.push_back(std::move(w));
      }
    }
  }
  return WordSet(l, n, std::move(words));
}

}  // namespace am
