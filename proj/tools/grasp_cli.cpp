#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "grasp/bench.hpp"
#include "grasp/pipeline.hpp"

namespace {

using namespace grasp;

struct ParamFlags {
    int k = 20;
    int q = 100;
    double t_min = 0.1;
    double t_max = 50.0;
    double mu = 0.132;
    std::string matcher = "jv";
    std::string base_align = "on";

    void attach(CLI::App& app) {
        app.add_option("--k", k, "Eigenpairs per graph")->check(CLI::PositiveNumber);
        app.add_option("--q", q, "Diffusion-time samples")->check(CLI::PositiveNumber);
        app.add_option("--t-min", t_min, "Smallest diffusion time");
        app.add_option("--t-max", t_max, "Largest diffusion time");
        app.add_option("--mu", mu, "Base-alignment coupling weight");
        app.add_option("--matcher", matcher, "Node matcher")->check(CLI::IsMember({"jv", "nn"}));
        app.add_option("--base-align", base_align, "Optimize the base rotation")
            ->check(CLI::IsMember({"on", "off"}));
    }

    GraspParams to_params() const {
        GraspParams p;
        p.k = k;
        p.q = q;
        p.t_min = t_min;
        p.t_max = t_max;
        p.mu = mu;
        p.matcher = matcher_from_string(matcher);
        p.base_align = base_align == "on";
        try {
            p.validate();
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError(e.what());  // bad flag values exit with 2
        }
        return p;
    }
};

std::vector<Variant> parse_variants(const std::vector<std::string>& specs) {
    std::vector<Variant> variants;
    for (const std::string& spec : specs) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--variants", "expected matcher:on|off, got '" + spec + "'");
        const std::string matcher = spec.substr(0, colon);
        const std::string toggle = spec.substr(colon + 1);
        if ((matcher != "jv" && matcher != "nn") || (toggle != "on" && toggle != "off"))
            throw CLI::ValidationError("--variants", "expected matcher:on|off, got '" + spec + "'");
        variants.push_back({matcher_from_string(matcher), toggle == "on"});
    }
    return variants;
}

int cmd_align(const std::string& source, const std::string& target, const ParamFlags& flags,
              const std::string& out_path) {
    const Graph g1 = load_edge_list(source);
    const Graph g2 = load_edge_list(target);
    const GraspResult result = grasp_align_detailed(g1, g2, flags.to_params());

    const auto& trace = result.rotation.objective_trace;
    std::cerr << "n=" << g1.num_nodes() << " k=" << result.k_used
              << " objective: " << (trace.empty() ? 0.0 : trace.front()) << " -> "
              << (trace.empty() ? 0.0 : trace.back()) << " in " << result.rotation.iterations
              << " steps (" << (result.rotation.converged ? "converged" : "not converged") << ")"
              << "\ntotal cost: " << result.alignment.total_cost << "\n";
    if (!result.rotation.converged)
        std::cerr << "warning: base alignment hit its iteration cap\n";

    if (out_path.empty()) {
        write_alignment_csv(std::cout, result.alignment, g1, g2);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cli: cannot write '" + out_path + "'");
        write_alignment_csv(out, result.alignment, g1, g2);
    }
    return 0;
}

std::map<std::string, std::string> read_pair_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cli: cannot open '" + path + "'");
    std::map<std::string, std::string> pairs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "g1_node,g2_node") continue;  // header optional
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("cli: '" + path + "': expected two comma-separated fields");
        pairs[line.substr(0, comma)] = line.substr(comma + 1);
    }
    if (pairs.empty()) throw std::runtime_error("cli: '" + path + "' holds no rows");
    return pairs;
}

int cmd_eval(const std::string& alignment_path, const std::string& truth_path) {
    const auto alignment = read_pair_csv(alignment_path);
    const auto truth = read_pair_csv(truth_path);

    int matches = 0;
    for (const auto& [g1_node, g2_node] : truth) {
        auto it = alignment.find(g1_node);
        if (it == alignment.end())
            throw std::runtime_error("cli: truth node '" + g1_node + "' missing from alignment");
        if (it->second == g2_node) ++matches;
    }
    std::cout << std::fixed << std::setprecision(4)
              << static_cast<double>(matches) / static_cast<double>(truth.size()) << "\n";
    return 0;
}

int cmd_bench(const BenchConfig& cfg, const std::string& out_path, const std::string& truth_prefix,
              SweepParam sweep_param, const std::vector<int>& sweep_values) {
    const Graph g = load_edge_list(cfg.graph_path);

    BenchResult result = sweep_values.empty()
                             ? run_benchmark_on(g, cfg)
                             : run_param_sweep_on(g, cfg, sweep_param, sweep_values);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cli: cannot write '" + out_path + "'");
        write_bench_csv(out, result);
    } else {
        write_bench_csv(std::cout, result);
    }
    write_accuracy_table(std::cout, result);
    if (!truth_prefix.empty()) write_truth_csvs(truth_prefix, g, cfg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral graph alignment via heat-kernel functional maps"};
    app.require_subcommand(1);

    // align
    auto* align = app.add_subcommand("align", "Align two edge-list graphs");
    std::string source, target, align_out;
    ParamFlags align_flags;
    align->add_option("--source", source, "Edge list of the first graph")->required();
    align->add_option("--target", target, "Edge list of the second graph")->required();
    align->add_option("--out", align_out, "Alignment CSV path (default: stdout)");
    align_flags.attach(*align);

    // eval
    auto* eval = app.add_subcommand("eval", "Score an alignment CSV against a ground-truth CSV");
    std::string alignment_path, truth_path;
    eval->add_option("--alignment", alignment_path, "Alignment CSV")->required();
    eval->add_option("--truth", truth_path, "Ground-truth CSV")->required();

    // bench / sweep
    BenchConfig cfg;
    std::string bench_out, truth_prefix;
    std::vector<std::string> variant_specs{"jv:on"};
    std::vector<int> sweep_k, sweep_q;
    ParamFlags bench_flags;

    auto add_bench_flags = [&](CLI::App* cmd) {
        cmd->add_option("--graph", cfg.graph_path, "Edge-list graph")->required();
        cmd->add_option("--noise", cfg.noise_levels, "Comma-separated deletion probabilities")
            ->delimiter(',');
        cmd->add_option("--source-noise", cfg.source_noise, "Deletion probability of the source copy");
        cmd->add_option("--trials", cfg.trials, "Trials per noise level")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", cfg.seed, "Base seed");
        cmd->add_option("--jobs", cfg.jobs, "Parallel trial workers (0: all processors)");
        cmd->add_option("--out", bench_out, "Results CSV path (default: stdout)");
        cmd->add_option("--truth-out", truth_prefix, "Prefix for ground-truth CSVs");
        cmd->add_option("--variants", variant_specs, "Comma-separated matcher:on|off pairs")
            ->delimiter(',');
        bench_flags.attach(*cmd);
    };

    auto* bench = app.add_subcommand("bench", "Noise-injection accuracy benchmark");
    add_bench_flags(bench);

    auto* sweep = app.add_subcommand("sweep", "Benchmark across k or q values");
    add_bench_flags(sweep);
    sweep->add_option("--sweep-k", sweep_k, "k values to sweep")->delimiter(',');
    sweep->add_option("--sweep-q", sweep_q, "q values to sweep")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*align) return cmd_align(source, target, align_flags, align_out);
        if (*eval) return cmd_eval(alignment_path, truth_path);

        cfg.params = bench_flags.to_params();
        cfg.variants = parse_variants(variant_specs);
        if (*bench) return cmd_bench(cfg, bench_out, truth_prefix, SweepParam::K, {});
        // sweep
        if (sweep_k.empty() == sweep_q.empty()) {
            std::cerr << "error: sweep needs exactly one of --sweep-k / --sweep-q\n";
            return 2;
        }
        return cmd_bench(cfg, bench_out, truth_prefix, sweep_k.empty() ? SweepParam::Q : SweepParam::K,
                         sweep_k.empty() ? sweep_q : sweep_k);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
