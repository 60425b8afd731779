#pragma once

#include <Eigen/Dense>
#include <vector>

namespace grasp {

/// Inputs of the rotation objective: the second graph's truncated
/// eigenvalues and the two q x k descriptor-coefficient couplings
/// P = F^T Phi and Q = G^T Psi, weighted by mu.
struct AlignObjectiveInputs {
    Eigen::VectorXd lambda2;  // length k
    Eigen::MatrixXd P;        // q x k
    Eigen::MatrixXd Q;        // q x k
    double mu = 0.132;
};

/// Result of the rotation search over the orthogonal group O(k).
struct BaseRotation {
    Eigen::MatrixXd M;                   // k x k, orthogonal to 1e-8
    std::vector<double> objective_trace; // accepted-step values, non-increasing
    bool converged = false;
    int iterations = 0;
};

struct RotationOptions {
    int max_iterations = 300;
    double gradient_tolerance = 1e-6;  // on the projected gradient norm
};

// off(M^T diag(lambda2) M) + mu * ||P - Q M||_F^2, where off(X) is the sum
// of squared off-diagonal entries.
double objective(const AlignObjectiveInputs& inputs, const Eigen::MatrixXd& M);

// Euclidean gradient of the objective at M (valid at any k x k matrix):
// 4 Lambda M (X - Diag(X)) + 2 mu Q^T (Q M - P) with X = M^T Lambda M.
Eigen::MatrixXd gradient(const AlignObjectiveInputs& inputs, const Eigen::MatrixXd& M);

// Projection of a Euclidean gradient onto the tangent space of O(k) at M.
Eigen::MatrixXd tangent_project(const Eigen::MatrixXd& M, const Eigen::MatrixXd& euclidean_grad);

// Diagonal +/-1 initialization: entry i is +1 iff column i of P is at least
// as close to column i of Q as to its negation (ties give +1).
Eigen::MatrixXd sign_initialize(const AlignObjectiveInputs& inputs);

// Riemannian gradient descent on O(k) from the sign initialization, with QR
// retraction and Armijo backtracking. Deterministic; stops on the projected
// gradient tolerance or the iteration cap (non-convergence is reported via
// the flag, never thrown).
BaseRotation optimize_rotation(const AlignObjectiveInputs& inputs, const RotationOptions& opts = {});

}  // namespace grasp
