#include "grasp/functional_map.hpp"

#include <stdexcept>

namespace grasp {

DiagonalMap solve_diagonal_map(const Descriptors& f_desc, const Descriptors& g_desc,
                               const Eigen::MatrixXd& phi, const Eigen::MatrixXd& psi_hat) {
    if (f_desc.rows() != phi.rows() || g_desc.rows() != psi_hat.rows() ||
        f_desc.cols() != g_desc.cols() || phi.cols() != psi_hat.cols())
        throw std::invalid_argument("functional_map: inconsistent descriptor/basis dimensions");

    const Eigen::MatrixXd A = g_desc.transpose() * psi_hat;  // q x k
    const Eigen::MatrixXd B = f_desc.transpose() * phi;      // q x k
    const auto k = A.cols();

    DiagonalMap map;
    map.c.resize(k);
    for (int j = 0; j < k; ++j) {
        const double denom = A.col(j).squaredNorm();
        if (denom < 1e-12) {
            map.c[j] = 0.0;
            map.degenerate_columns.push_back(j);
        } else {
            map.c[j] = A.col(j).dot(B.col(j)) / denom;
        }
    }
    map.residual = (A * map.c.asDiagonal() - B).squaredNorm();
    return map;
}

}  // namespace grasp
