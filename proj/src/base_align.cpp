#include "grasp/base_align.hpp"

#include <cmath>
#include <stdexcept>

namespace grasp {

namespace {

void check_dims(const AlignObjectiveInputs& inputs, const Eigen::MatrixXd& M) {
    const auto k = inputs.lambda2.size();
    if (M.rows() != k || M.cols() != k)
        throw std::invalid_argument("base_align: M must be k x k");
    if (inputs.P.cols() != k || inputs.Q.cols() != k || inputs.P.rows() != inputs.Q.rows())
        throw std::invalid_argument("base_align: coupling matrices must both be q x k");
    if (inputs.mu < 0.0) throw std::invalid_argument("base_align: mu must be nonnegative");
}

// Orthonormal factor of a QR decomposition with positive diagonal of R;
// deterministic retraction back onto O(k).
Eigen::MatrixXd qr_retract(const Eigen::MatrixXd& A) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), A.cols());
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < Q.cols(); ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    return Q;
}

double orthogonality_drift(const Eigen::MatrixXd& M) {
    return (M.transpose() * M - Eigen::MatrixXd::Identity(M.cols(), M.cols())).norm();
}

}  // namespace

double objective(const AlignObjectiveInputs& inputs, const Eigen::MatrixXd& M) {
    check_dims(inputs, M);
    Eigen::MatrixXd X = M.transpose() * inputs.lambda2.asDiagonal() * M;
    const double off = X.squaredNorm() - X.diagonal().squaredNorm();
    return off + inputs.mu * (inputs.P - inputs.Q * M).squaredNorm();
}

Eigen::MatrixXd gradient(const AlignObjectiveInputs& inputs, const Eigen::MatrixXd& M) {
    check_dims(inputs, M);
    Eigen::MatrixXd X = M.transpose() * inputs.lambda2.asDiagonal() * M;
    X.diagonal().setZero();  // X - Diag(X)
    Eigen::MatrixXd grad = 4.0 * (inputs.lambda2.asDiagonal() * (M * X));
    grad.noalias() += 2.0 * inputs.mu * (inputs.Q.transpose() * (inputs.Q * M - inputs.P));
    return grad;
}

Eigen::MatrixXd tangent_project(const Eigen::MatrixXd& M, const Eigen::MatrixXd& euclidean_grad) {
    Eigen::MatrixXd MtG = M.transpose() * euclidean_grad;
    return euclidean_grad - M * ((MtG + MtG.transpose()) * 0.5);
}

Eigen::MatrixXd sign_initialize(const AlignObjectiveInputs& inputs) {
    const auto k = inputs.lambda2.size();
    if (inputs.P.cols() != k || inputs.Q.cols() != k || inputs.P.rows() != inputs.Q.rows())
        throw std::invalid_argument("base_align: coupling matrices must both be q x k");

    Eigen::VectorXd signs(k);
    for (int i = 0; i < k; ++i) {
        const double minus = (inputs.P.col(i) - inputs.Q.col(i)).norm();
        const double plus = (inputs.P.col(i) + inputs.Q.col(i)).norm();
        signs[i] = minus <= plus ? 1.0 : -1.0;
    }
    return signs.asDiagonal();
}

BaseRotation optimize_rotation(const AlignObjectiveInputs& inputs, const RotationOptions& opts) {
    BaseRotation result;
    result.M = sign_initialize(inputs);

    double value = objective(inputs, result.M);
    result.objective_trace.push_back(value);

    constexpr double armijo_c = 1e-4;
    constexpr double backtrack = 0.5;
    constexpr double min_step = 1e-14;
    double step = 1.0;

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        Eigen::MatrixXd grad = tangent_project(result.M, gradient(inputs, result.M));
        const double grad_norm = grad.norm();
        if (grad_norm <= opts.gradient_tolerance) {
            result.converged = true;
            break;
        }

        bool accepted = false;
        while (step >= min_step) {
            Eigen::MatrixXd trial = qr_retract(result.M - step * grad);
            const double trial_value = objective(inputs, trial);
            if (trial_value <= value - armijo_c * step * grad_norm * grad_norm) {
                result.M = std::move(trial);
                value = trial_value;
                result.objective_trace.push_back(value);
                result.iterations = iter + 1;
                accepted = true;
                break;
            }
            step *= backtrack;
        }
        if (!accepted) break;  // no descent at floating-point resolution
        if (orthogonality_drift(result.M) > 1e-10) result.M = qr_retract(result.M);
        step = std::min(step * 2.0, 1.0e3);
    }

    if (!result.converged)
        result.converged =
            tangent_project(result.M, gradient(inputs, result.M)).norm() <= opts.gradient_tolerance;
    return result;
}

}  // namespace grasp
