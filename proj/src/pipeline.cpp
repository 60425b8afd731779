#include "grasp/pipeline.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace grasp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string cache_key(const Graph& g, const GraspParams& params) {
    std::ostringstream key;
    key << graph_hash(g) << ':' << params.k << ':' << params.q << ':' << params.t_min << ':'
        << params.t_max << ':' << static_cast<int>(params.eigs);
    return key.str();
}

}  // namespace

void GraspParams::validate() const {
    if (k < 1) throw std::invalid_argument("pipeline: k must be >= 1");
    if (q < 1) throw std::invalid_argument("pipeline: q must be >= 1");
    if (!(t_min > 0.0 && t_min < t_max))
        throw std::invalid_argument("pipeline: require 0 < t_min < t_max");
    if (mu < 0.0) throw std::invalid_argument("pipeline: mu must be nonnegative");
}

SpectralFeatures compute_spectral_features(const Graph& g, const GraspParams& params) {
    SpectralFeatures features;
    features.spectrum = graph_spectrum(g, params.k, params.eigs);
    features.heat = heat_diagonals(features.spectrum, TimeGrid::linear(params.q, params.t_min, params.t_max));
    features.coupling = features.heat.transpose() * features.spectrum.eigenvectors;
    return features;
}

std::shared_ptr<const SpectralFeatures> SpectralCache::get(const Graph& g, const GraspParams& params) {
    const std::string key = cache_key(g, params);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    auto features = std::make_shared<const SpectralFeatures>(compute_spectral_features(g, params));
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.try_emplace(key, std::move(features)).first->second;
}

std::size_t SpectralCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

GraspResult grasp_align_detailed(const Graph& g1, const Graph& g2, const GraspParams& params,
                                 SpectralCache* cache) {
    params.validate();
    if (g1.num_nodes() != g2.num_nodes())
        throw std::invalid_argument("pipeline: graphs must have the same node count");

    const auto t_start = Clock::now();

    // Steps 1-2: spectra and heat-kernel descriptors of both graphs.
    std::shared_ptr<const SpectralFeatures> f1, f2;
    if (cache) {
        f1 = cache->get(g1, params);
        f2 = cache->get(g2, params);
    } else {
        f1 = std::make_shared<const SpectralFeatures>(compute_spectral_features(g1, params));
        f2 = std::make_shared<const SpectralFeatures>(compute_spectral_features(g2, params));
    }

    // Step 3: align the second eigenbasis to the first.
    AlignObjectiveInputs inputs{f2->spectrum.eigenvalues, f1->coupling, f2->coupling, params.mu};
    GraspResult result;
    result.k_used = f1->spectrum.k();
    if (params.base_align) {
        result.rotation = optimize_rotation(inputs);
    } else {
        result.rotation.M = sign_initialize(inputs);
        result.rotation.objective_trace = {objective(inputs, result.rotation.M)};
        result.rotation.converged = true;
    }
    const Eigen::MatrixXd psi_hat = f2->spectrum.eigenvectors * result.rotation.M;
    result.precompute_ms = ms_since(t_start);

    // Steps 4-5: diagonal mapping matrix, then one-to-one node matching on
    // the indicator-function coefficients.
    const auto t_match = Clock::now();
    result.cmap = solve_diagonal_map(f1->heat, f2->heat, f1->spectrum.eigenvectors, psi_hat);
    const CostMatrix cost = build_cost(delta_coefficients(f1->spectrum), psi_hat, result.cmap);
    result.alignment = params.matcher == Matcher::Jv ? solve_jv(cost) : solve_nn(cost);
    result.match_ms = ms_since(t_match);
    return result;
}

Alignment grasp_align(const Graph& g1, const Graph& g2, const GraspParams& params,
                      SpectralCache* cache) {
    return grasp_align_detailed(g1, g2, params, cache).alignment;
}

}  // namespace grasp
