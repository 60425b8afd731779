#pragma once

#include <Eigen/Dense>
#include <vector>

#include "grasp/graph.hpp"

namespace grasp {

/// Truncated spectrum of a normalized Laplacian: the k smallest eigenvalues
/// in ascending order and the matching orthonormal eigenvector columns.
/// Columns are sign-canonicalized: the entry of largest magnitude in each
/// column is positive (exact ties resolved by the lowest row index).
struct Spectrum {
    Eigen::VectorXd eigenvalues;   // length k, ascending, in [0, 2]
    Eigen::MatrixXd eigenvectors;  // n x k, orthonormal columns

    int k() const { return static_cast<int>(eigenvalues.size()); }

    // Indices j with eigenvalues[j+1] - eigenvalues[j] < 1e-10; a nonempty
    // list means the leading eigenspace is rotation-ambiguous.
    std::vector<int> degenerate_gaps;
};

enum class EigsMethod {
    Auto,     // dense for n <= 3000, Lanczos above
    Dense,
    Lanczos,
};

// L = I - D^{-1/2} A D^{-1/2}. Rows and columns of isolated nodes are zero
// (the D^{-1/2} entry of a degree-0 node is taken as 0).
Eigen::MatrixXd normalized_laplacian(const Graph& g);

// k smallest eigenpairs of a symmetric matrix. k is clamped to n. Throws
// std::invalid_argument when the input is asymmetric beyond 1e-10 and
// std::runtime_error when the iterative path fails to converge.
Spectrum eigendecompose(const Eigen::MatrixXd& L, int k, EigsMethod method = EigsMethod::Auto);

// Spectrum of g's normalized Laplacian. The Lanczos path works on the
// adjacency structure directly and never forms the dense matrix.
Spectrum graph_spectrum(const Graph& g, int k, EigsMethod method = EigsMethod::Auto);

// Flips eigenvector signs to the canonical convention in place.
void canonicalize_signs(Eigen::MatrixXd& vectors);

}  // namespace grasp
