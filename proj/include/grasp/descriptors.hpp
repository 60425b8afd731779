#pragma once

#include <Eigen/Dense>

#include "grasp/spectral.hpp"

namespace grasp {

/// Diffusion-time sample points; strictly increasing, all positive.
struct TimeGrid {
    Eigen::VectorXd times;

    int q() const { return static_cast<int>(times.size()); }

    // q points evenly spaced on the linear scale over [t_min, t_max]
    // (endpoints included). Defaults follow the benchmark setup.
    static TimeGrid linear(int q = 100, double t_min = 0.1, double t_max = 50.0);
};

/// n x q matrix of heat-kernel diagonals; column i is the node-indexed
/// function at diffusion time t_i, built from the spectrum's k eigenpairs:
/// values(u, i) = sum_j exp(-t_i * lambda_j) * phi(u, j)^2.
using Descriptors = Eigen::MatrixXd;

Descriptors heat_diagonals(const Spectrum& s, const TimeGrid& grid);

// Coefficients of the node indicator functions in the truncated eigenbasis:
// row u expresses delta_u, which is exactly row u of the eigenvector matrix.
Eigen::MatrixXd delta_coefficients(const Spectrum& s);

}  // namespace grasp
