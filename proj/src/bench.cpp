#include "grasp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grasp/rng.hpp"

namespace grasp {

namespace {

using Clock = std::chrono::steady_clock;

void validate(const BenchConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("bench_harness: trials must be >= 1");
    if (cfg.variants.empty()) throw std::invalid_argument("bench_harness: need at least one variant");
    if (!(cfg.source_noise >= 0.0 && cfg.source_noise <= 1.0))
        throw std::invalid_argument("bench_harness: source noise must lie in [0, 1]");
    for (double p : cfg.noise_levels)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("bench_harness: noise levels must lie in [0, 1]");
    cfg.params.validate();
}

std::uint64_t noise_salt(double noise) {
    return static_cast<std::uint64_t>(std::llround(noise * 1000.0));
}

struct TrialInputs {
    Graph source;             // G1
    Graph permuted;           // G permuted by the planted truth
    NodePermutation truth;
};

TrialInputs make_trial_inputs(const Graph& g, const BenchConfig& cfg, int trial) {
    TrialInputs t;
    t.source = delete_edges(g, cfg.source_noise, derive_seed(cfg.seed, trial, "source"));
    t.truth = random_permutation(g.num_nodes(), derive_seed(cfg.seed, trial, "perm"));
    // The permuted copy is a fresh graph whose nodes are plain indices;
    // carrying the source labels over would leak the planted truth.
    t.permuted = Graph(g.num_nodes(), permute(g, t.truth).edges());
    return t;
}

// Work for one (trial, noise) pair: all variants on one graph pair.
void run_cell(const TrialInputs& inputs, const BenchConfig& cfg, int trial, double noise,
              SpectralCache& cache, std::vector<BenchRow>& out) {
    const std::uint64_t target_seed = derive_seed(cfg.seed, noise_salt(noise), "target-" + std::to_string(trial));
    const Graph g2 = delete_edges(inputs.permuted, noise, target_seed);

    out.clear();
    for (const Variant& variant : cfg.variants) {
        GraspParams params = cfg.params;
        params.matcher = variant.matcher;
        params.base_align = variant.base_align;

        const auto start = Clock::now();
        GraspResult result = grasp_align_detailed(inputs.source, g2, params, &cache);
        const double runtime_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();

        out.push_back({noise, trial, variant.matcher, variant.base_align, result.k_used, params.q,
                       params.mu, target_seed, accuracy(result.alignment, inputs.truth), runtime_ms,
                       result.match_ms});
    }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt, const std::string& tag) {
    std::uint64_t h = combine_seed(base, salt);
    for (unsigned char c : tag) h = combine_seed(h, c);
    return h;
}

double BenchResult::mean_accuracy(double noise, const Variant& variant) const {
    double sum = 0.0;
    int count = 0;
    for (const BenchRow& row : rows) {
        if (std::abs(row.noise - noise) < 1e-12 && row.matcher == variant.matcher &&
            row.base_align == variant.base_align) {
            sum += row.accuracy;
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("bench_harness: no rows for requested cell");
    return sum / count;
}

BenchResult run_benchmark_on(const Graph& g, const BenchConfig& cfg) {
    validate(cfg);

    const int cells_per_trial = static_cast<int>(cfg.noise_levels.size());
    std::vector<std::vector<BenchRow>> cells(static_cast<std::size_t>(cfg.trials) * cells_per_trial);

    int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, cfg.trials));

    // One worker per trial slice; each trial shares one cache so the source
    // graph's spectrum is computed once across its noise levels and variants.
    auto run_trial = [&](int trial) {
        const TrialInputs inputs = make_trial_inputs(g, cfg, trial);
        SpectralCache cache;
        for (int ni = 0; ni < cells_per_trial; ++ni)
            run_cell(inputs, cfg, trial, cfg.noise_levels[ni], cache,
                     cells[static_cast<std::size_t>(trial) * cells_per_trial + ni]);
    };

    if (jobs == 1) {
        for (int trial = 0; trial < cfg.trials; ++trial) run_trial(trial);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&]() {
                for (int trial = next.fetch_add(1); trial < cfg.trials; trial = next.fetch_add(1))
                    run_trial(trial);
            });
        for (auto& worker : pool) worker.join();
    }

    BenchResult result;
    for (auto& cell : cells)
        result.rows.insert(result.rows.end(), cell.begin(), cell.end());
    std::stable_sort(result.rows.begin(), result.rows.end(), [](const BenchRow& a, const BenchRow& b) {
        if (a.noise != b.noise) return a.noise < b.noise;
        return a.trial < b.trial;
    });
    return result;
}

BenchResult run_benchmark(const BenchConfig& cfg) {
    return run_benchmark_on(load_edge_list(cfg.graph_path), cfg);
}

BenchResult run_param_sweep_on(const Graph& g, const BenchConfig& cfg, SweepParam which,
                               const std::vector<int>& values) {
    if (values.empty()) throw std::invalid_argument("bench_harness: sweep needs at least one value");
    BenchResult combined;
    for (int value : values) {
        BenchConfig swept = cfg;
        (which == SweepParam::K ? swept.params.k : swept.params.q) = value;
        BenchResult one = run_benchmark_on(g, swept);
        combined.rows.insert(combined.rows.end(), one.rows.begin(), one.rows.end());
    }
    return combined;
}

BenchResult run_param_sweep(const BenchConfig& cfg, SweepParam which, const std::vector<int>& values) {
    return run_param_sweep_on(load_edge_list(cfg.graph_path), cfg, which, values);
}

void write_bench_csv(std::ostream& out, const BenchResult& result) {
    out << "noise,trial,matcher,base_align,k,q,mu,seed,accuracy,runtime_ms,online_ms\n";
    for (const BenchRow& row : result.rows) {
        out << row.noise << ',' << row.trial << ',' << to_string(row.matcher) << ','
            << (row.base_align ? "on" : "off") << ',' << row.k << ',' << row.q << ','
            << row.mu << ',' << row.seed << ',' << std::setprecision(17) << row.accuracy
            << std::setprecision(6) << ',' << row.runtime_ms << ',' << row.online_ms << '\n';
    }
}

void write_accuracy_table(std::ostream& out, const BenchResult& result) {
    std::vector<double> noises;
    std::vector<std::pair<Matcher, bool>> variants;
    for (const BenchRow& row : result.rows) {
        if (std::find_if(noises.begin(), noises.end(),
                         [&](double p) { return std::abs(p - row.noise) < 1e-12; }) == noises.end())
            noises.push_back(row.noise);
        if (std::find(variants.begin(), variants.end(), std::make_pair(row.matcher, row.base_align)) ==
            variants.end())
            variants.emplace_back(row.matcher, row.base_align);
    }
    std::sort(noises.begin(), noises.end());

    out << std::left << std::setw(16) << "variant";
    for (double p : noises) {
        std::ostringstream head;
        head << "p=" << p;
        out << std::setw(10) << head.str();
    }
    out << '\n';
    for (auto [matcher, base_align] : variants) {
        out << std::left << std::setw(16) << (to_string(matcher) + std::string("/") + (base_align ? "on" : "off"));
        for (double p : noises)
            out << std::setw(10) << std::fixed << std::setprecision(4)
                << result.mean_accuracy(p, {matcher, base_align});
        out << '\n';
        out.unsetf(std::ios::fixed);
    }
}

void write_truth_csvs(const std::string& prefix, const Graph& g, const BenchConfig& cfg) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const NodePermutation truth = random_permutation(g.num_nodes(), derive_seed(cfg.seed, trial, "perm"));
        for (double noise : cfg.noise_levels) {
            std::ostringstream name;
            name << prefix << "_p" << noise << "_t" << trial << ".csv";
            std::ofstream out(name.str());
            if (!out) throw std::runtime_error("bench_harness: cannot write '" + name.str() + "'");
            out << "g1_node,g2_node\n";
            // Target-graph nodes are plain indices (see make_trial_inputs).
            for (int i = 0; i < g.num_nodes(); ++i)
                out << g.label(i) << ',' << truth.mapping[i] << '\n';
        }
    }
}

}  // namespace grasp
