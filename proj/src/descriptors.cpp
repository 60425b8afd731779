#include "grasp/descriptors.hpp"

#include <stdexcept>

namespace grasp {

TimeGrid TimeGrid::linear(int q, double t_min, double t_max) {
    if (q < 1) throw std::invalid_argument("descriptors: time grid needs at least one step");
    if (!(t_min > 0.0)) throw std::invalid_argument("descriptors: diffusion times must be positive");
    if (q > 1 && !(t_min < t_max)) throw std::invalid_argument("descriptors: require t_min < t_max");

    TimeGrid grid;
    grid.times.resize(q);
    if (q == 1) {
        grid.times[0] = t_min;
    } else {
        const double step = (t_max - t_min) / (q - 1);
        for (int i = 0; i < q; ++i) grid.times[i] = t_min + step * i;
    }
    return grid;
}

Descriptors heat_diagonals(const Spectrum& s, const TimeGrid& grid) {
    // weights(j, i) = exp(-t_i * lambda_j); diagonals are squared eigenvector
    // entries mixed by those weights.
    Eigen::MatrixXd weights(s.k(), grid.q());
    for (int i = 0; i < grid.q(); ++i)
        weights.col(i) = (-grid.times[i] * s.eigenvalues.array()).exp();
    return s.eigenvectors.array().square().matrix() * weights;
}

Eigen::MatrixXd delta_coefficients(const Spectrum& s) { return s.eigenvectors; }

}  // namespace grasp
