#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grasp/pipeline.hpp"

namespace grasp {

struct Variant {
    Matcher matcher = Matcher::Jv;
    bool base_align = true;
};

/// Noise-injection benchmark protocol: a lightly perturbed source graph is
/// aligned against permuted copies perturbed at each noise level, and the
/// recovered mapping is scored against the planted permutation.
struct BenchConfig {
    std::string graph_path;
    std::vector<double> noise_levels{0.05, 0.10, 0.15, 0.20, 0.25};
    double source_noise = 0.01;
    int trials = 5;
    std::uint64_t seed = 0;
    GraspParams params;
    std::vector<Variant> variants{{Matcher::Jv, true}};
    int jobs = 0;  // 0: number of available processors
};

struct BenchRow {
    double noise = 0.0;
    int trial = 0;
    Matcher matcher = Matcher::Jv;
    bool base_align = true;
    int k = 0;
    int q = 0;
    double mu = 0.0;
    std::uint64_t seed = 0;   // target-perturbation seed of this row
    double accuracy = 0.0;
    double runtime_ms = 0.0;  // full pipeline wall time
    double online_ms = 0.0;   // steps 4-5 only (precomputation excluded)
};

struct BenchResult {
    std::vector<BenchRow> rows;

    // Mean accuracy of one (noise, variant) cell across trials.
    double mean_accuracy(double noise, const Variant& variant) const;
};

// Named sub-streams drawn deterministically from the base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt, const std::string& tag);

// Runs |noise_levels| x trials x |variants| alignments. Per (trial, noise):
// G1 deletes edges of G at source_noise, G2 permutes G and deletes at the
// noise level; both graphs are shared across variants. Trials may run in
// parallel; rows come back sorted by (noise, trial, variant).
BenchResult run_benchmark_on(const Graph& g, const BenchConfig& cfg);

// Same, loading the graph from cfg.graph_path.
BenchResult run_benchmark(const BenchConfig& cfg);

enum class SweepParam { K, Q };

// One benchmark per swept value with everything else (seeds included) fixed.
BenchResult run_param_sweep_on(const Graph& g, const BenchConfig& cfg, SweepParam which,
                               const std::vector<int>& values);
BenchResult run_param_sweep(const BenchConfig& cfg, SweepParam which, const std::vector<int>& values);

// CSV with header noise,trial,matcher,base_align,k,q,mu,seed,accuracy,runtime_ms,online_ms.
void write_bench_csv(std::ostream& out, const BenchResult& result);

// Per-noise mean accuracy, one line per variant.
void write_accuracy_table(std::ostream& out, const BenchResult& result);

// Ground-truth permutations of a benchmark run, one CSV per (noise, trial),
// written as <prefix>_p<noise>_t<trial>.csv with header g1_node,g2_node.
void write_truth_csvs(const std::string& prefix, const Graph& g, const BenchConfig& cfg);

}  // namespace grasp
