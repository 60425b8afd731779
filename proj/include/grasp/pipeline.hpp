#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "grasp/assignment.hpp"
#include "grasp/base_align.hpp"
#include "grasp/descriptors.hpp"
#include "grasp/functional_map.hpp"
#include "grasp/graph.hpp"
#include "grasp/spectral.hpp"

namespace grasp {

/// Hyperparameters of the five-step alignment pipeline.
struct GraspParams {
    int k = 20;             // eigenpairs per graph (clamped to n)
    int q = 100;            // diffusion-time samples
    double t_min = 0.1;
    double t_max = 50.0;
    double mu = 0.132;      // base-alignment coupling weight
    Matcher matcher = Matcher::Jv;
    bool base_align = true; // off: keep the diagonal sign initialization
    EigsMethod eigs = EigsMethod::Auto;

    void validate() const;
};

/// Spectrum and heat descriptors of one graph; steps 1-2 of the pipeline.
struct SpectralFeatures {
    Spectrum spectrum;
    Descriptors heat;       // n x q
    Eigen::MatrixXd coupling;  // q x k, heat^T * eigenvectors
};

/// Memoizes SpectralFeatures per (graph, spectral parameters); safe to share
/// across threads and across pipeline calls.
class SpectralCache {
public:
    std::shared_ptr<const SpectralFeatures> get(const Graph& g, const GraspParams& params);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<const SpectralFeatures>> entries_;
};

SpectralFeatures compute_spectral_features(const Graph& g, const GraspParams& params);

/// Everything the pipeline produced for one graph pair, for callers that
/// report more than the node map.
struct GraspResult {
    Alignment alignment;
    BaseRotation rotation;   // sign initialization when base_align is off
    DiagonalMap cmap;
    int k_used = 0;
    double precompute_ms = 0.0;  // steps 1-3 (spectra, descriptors, rotation)
    double match_ms = 0.0;       // steps 4-5 (mapping matrix, assignment)
};

// Runs the five steps: spectra, heat descriptors, base alignment, diagonal
// functional map, node assignment. Deterministic given inputs and params.
// Throws std::invalid_argument when the node counts differ.
GraspResult grasp_align_detailed(const Graph& g1, const Graph& g2, const GraspParams& params,
                                 SpectralCache* cache = nullptr);

Alignment grasp_align(const Graph& g1, const Graph& g2, const GraspParams& params = {},
                      SpectralCache* cache = nullptr);

}  // namespace grasp
