#pragma once

#include <Eigen/Dense>
#include <vector>

#include "grasp/descriptors.hpp"

namespace grasp {

/// Diagonal of the functional mapping matrix C plus the least-squares
/// residual of the stacked system it solves.
struct DiagonalMap {
    Eigen::VectorXd c;                   // length k
    double residual = 0.0;               // squared residual of the stacked system
    std::vector<int> degenerate_columns; // coordinates forced to 0
};

// Solves min_c || [diag(g_i^T Psi_hat)]_i c - [Phi^T f_i]_i ||_2^2. Because
// the stacked system decouples per coordinate, c_j is the ratio
// sum_i a_ij b_ij / sum_i a_ij^2 with A = G^T Psi_hat and B = F^T Phi; a
// coordinate whose denominator falls below 1e-12 is set to 0 and flagged.
DiagonalMap solve_diagonal_map(const Descriptors& f_desc, const Descriptors& g_desc,
                               const Eigen::MatrixXd& phi, const Eigen::MatrixXd& psi_hat);

}  // namespace grasp
