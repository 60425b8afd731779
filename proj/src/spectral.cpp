#include "grasp/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "grasp/rng.hpp"

namespace grasp {

namespace {

constexpr int kDenseLimit = 3000;          // Auto switches to Lanczos above this
constexpr double kDegenerateGap = 1e-10;

void record_degenerate_gaps(Spectrum& s) {
    for (int j = 0; j + 1 < s.k(); ++j)
        if (s.eigenvalues[j + 1] - s.eigenvalues[j] < kDegenerateGap) s.degenerate_gaps.push_back(j);
}

// Rayleigh-Ritz over a Krylov basis with full reorthogonalization and thick
// restarts. Finds the k smallest eigenpairs of a symmetric operator given
// only matrix-vector products. `locked` may hold exact eigenvectors with
// eigenvalue 0 (orthonormal columns); the search then runs in their
// orthogonal complement, which is how repeated null eigenvalues survive a
// single-vector Krylov process.
template <typename MatVec>
Spectrum lanczos_smallest(int n, const MatVec& apply, int k, double tol, long max_matvecs,
                          const Eigen::MatrixXd& locked = {}) {
    const int n_locked = static_cast<int>(locked.cols());
    const int m_max = std::min(n, std::max(3 * k, k + 40) + n_locked);
    const int l_keep = std::min(k + 15 + n_locked, m_max - 2);

    Eigen::MatrixXd basis(n, m_max + 1);
    Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(m_max, m_max);

    Rng rng(0x5eedu);
    auto random_unit = [&]() {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = rng.normal();
        v.normalize();
        return v;
    };

    int kept = 0;           // retained columns after the last restart / lock
    if (n_locked > 0) {
        basis.leftCols(n_locked) = locked;
        kept = n_locked;
    }
    if (kept < n) {
        Eigen::VectorXd start = random_unit();
        if (kept > 0) {
            auto held = basis.leftCols(kept);
            start -= held * (held.transpose() * start);
            start -= held * (held.transpose() * start);
            start.normalize();
        }
        basis.col(kept) = start;
    }
    long matvecs = 0;
    double beta = 0.0;      // coupling norm of the trailing residual vector

    Eigen::VectorXd ritz_values;
    Eigen::MatrixXd ritz_coeffs;

    while (true) {
        int m = kept;
        bool exhausted = false;  // basis spans the whole space
        for (; m < m_max; ++m) {
            if (matvecs >= max_matvecs)
                throw std::runtime_error("spectral: eigensolver exceeded its iteration cap");
            Eigen::VectorXd w = apply(basis.col(m));
            ++matvecs;

            // Two classical Gram-Schmidt passes; coefficients of the first
            // pass are the projected-matrix column.
            auto seen = basis.leftCols(m + 1);
            Eigen::VectorXd h = seen.transpose() * w;
            w.noalias() -= seen * h;
            Eigen::VectorXd h2 = seen.transpose() * w;
            w.noalias() -= seen * h2;
            h += h2;

            projected.col(m).head(m + 1) = h;
            projected.row(m).head(m + 1) = h.transpose();

            beta = w.norm();
            if (beta < 1e-13) {
                // Invariant subspace reached; continue in a fresh direction.
                if (m + 1 >= n) {
                    exhausted = true;
                    ++m;
                    break;
                }
                Eigen::VectorXd fresh = random_unit();
                fresh -= seen * (seen.transpose() * fresh);
                fresh -= seen * (seen.transpose() * fresh);
                beta = 0.0;
                basis.col(m + 1) = fresh.normalized();
            } else {
                basis.col(m + 1) = w / beta;
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected.topLeftCorner(m, m));
        if (small.info() != Eigen::Success)
            throw std::runtime_error("spectral: projected eigenproblem failed");
        ritz_values = small.eigenvalues();
        ritz_coeffs = small.eigenvectors();

        bool all_small = true;
        for (int i = 0; i < k && !exhausted; ++i)
            all_small = all_small && std::abs(beta * ritz_coeffs(m - 1, i)) <= tol;

        if (all_small || exhausted) {
            Eigen::MatrixXd candidates = basis.leftCols(m) * ritz_coeffs.leftCols(k);
            bool verified = true;
            for (int i = 0; i < k && !exhausted; ++i) {
                Eigen::VectorXd r = apply(candidates.col(i)) - ritz_values[i] * candidates.col(i);
                ++matvecs;
                verified = verified && r.norm() <= std::max(tol, 1e-7);
            }
            if (verified || exhausted) {
                Spectrum s;
                s.eigenvalues = ritz_values.head(k);
                s.eigenvectors = std::move(candidates);
                return s;
            }
        }

        // Thick restart: keep the best Ritz vectors plus the residual direction.
        Eigen::MatrixXd retained = basis.leftCols(m) * ritz_coeffs.leftCols(l_keep);
        basis.leftCols(l_keep) = retained;
        basis.col(l_keep) = basis.col(m);
        projected.setZero();
        projected.topLeftCorner(l_keep, l_keep) = ritz_values.head(l_keep).asDiagonal();
        kept = l_keep;
    }
}

}  // namespace

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
    const int n = g.num_nodes();
    Eigen::VectorXd dinv_sqrt(n);
    for (int u = 0; u < n; ++u)
        dinv_sqrt[u] = g.degrees()[u] > 0 ? 1.0 / std::sqrt(static_cast<double>(g.degrees()[u])) : 0.0;

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        if (g.degrees()[u] > 0) L(u, u) = 1.0;
    for (auto [u, v] : g.edges()) {
        const double w = -dinv_sqrt[u] * dinv_sqrt[v];
        L(u, v) = w;
        L(v, u) = w;
    }
    return L;
}

void canonicalize_signs(Eigen::MatrixXd& vectors) {
    for (int j = 0; j < vectors.cols(); ++j) {
        int best = 0;
        double best_abs = std::abs(vectors(0, j));
        for (int i = 1; i < vectors.rows(); ++i) {
            const double a = std::abs(vectors(i, j));
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        if (vectors(best, j) < 0.0) vectors.col(j) = -vectors.col(j);
    }
}

Spectrum eigendecompose(const Eigen::MatrixXd& L, int k, EigsMethod method) {
    const int n = static_cast<int>(L.rows());
    if (L.cols() != n) throw std::invalid_argument("spectral: matrix is not square");
    if (k < 1) throw std::invalid_argument("spectral: k must be >= 1");
    const double asym = (L - L.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) throw std::invalid_argument("spectral: matrix is not symmetric");
    k = std::min(k, n);

    if (method == EigsMethod::Auto) method = n <= kDenseLimit ? EigsMethod::Dense : EigsMethod::Lanczos;

    Spectrum s;
    if (method == EigsMethod::Dense) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
        if (solver.info() != Eigen::Success) throw std::runtime_error("spectral: eigendecomposition failed");
        s.eigenvalues = solver.eigenvalues().head(k);
        s.eigenvectors = solver.eigenvectors().leftCols(k);
    } else {
        auto apply = [&L](const Eigen::VectorXd& x) -> Eigen::VectorXd { return L.selfadjointView<Eigen::Lower>() * x; };
        s = lanczos_smallest(n, apply, k, 1e-8, 10L * std::max(n, 100));
    }
    canonicalize_signs(s.eigenvectors);
    record_degenerate_gaps(s);
    return s;
}

Spectrum graph_spectrum(const Graph& g, int k, EigsMethod method) {
    const int n = g.num_nodes();
    if (k < 1) throw std::invalid_argument("spectral: k must be >= 1");
    k = std::min(k, n);
    if (method == EigsMethod::Auto) method = n <= kDenseLimit ? EigsMethod::Dense : EigsMethod::Lanczos;

    if (method == EigsMethod::Dense) return eigendecompose(normalized_laplacian(g), k, EigsMethod::Dense);

    // CSR adjacency; the Laplacian is applied without forming it.
    std::vector<int> row_ptr(n + 1, 0), cols(2 * g.edges().size());
    for (auto [u, v] : g.edges()) {
        ++row_ptr[u + 1];
        ++row_ptr[v + 1];
    }
    for (int u = 0; u < n; ++u) row_ptr[u + 1] += row_ptr[u];
    {
        std::vector<int> fill(row_ptr.begin(), row_ptr.end() - 1);
        for (auto [u, v] : g.edges()) {
            cols[fill[u]++] = v;
            cols[fill[v]++] = u;
        }
    }
    Eigen::VectorXd dinv_sqrt(n), support(n);
    for (int u = 0; u < n; ++u) {
        dinv_sqrt[u] = g.degrees()[u] > 0 ? 1.0 / std::sqrt(static_cast<double>(g.degrees()[u])) : 0.0;
        support[u] = g.degrees()[u] > 0 ? 1.0 : 0.0;
    }

    auto apply = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd scaled = dinv_sqrt.cwiseProduct(x);
        Eigen::VectorXd y(n);
        for (int u = 0; u < n; ++u) {
            double acc = 0.0;
            for (int idx = row_ptr[u]; idx < row_ptr[u + 1]; ++idx) acc += scaled[cols[idx]];
            y[u] = support[u] * x[u] - dinv_sqrt[u] * acc;
        }
        return y;
    };

    // The null space is known exactly: one vector per connected component,
    // D^{1/2} * 1 on components with edges and the plain indicator on
    // isolated nodes. Locking it in keeps the zero multiplicity right.
    const std::vector<int> components = component_labels(g);
    const int n_components = count_components(g);
    Eigen::MatrixXd null_basis = Eigen::MatrixXd::Zero(n, std::min(n_components, k));
    for (int u = 0; u < n; ++u) {
        if (components[u] >= null_basis.cols()) continue;
        null_basis(u, components[u]) =
            g.degrees()[u] > 0 ? std::sqrt(static_cast<double>(g.degrees()[u])) : 1.0;
    }
    for (int j = 0; j < null_basis.cols(); ++j) null_basis.col(j).normalize();

    Spectrum s;
    if (n_components >= k) {
        s.eigenvalues = Eigen::VectorXd::Zero(k);
        s.eigenvectors = std::move(null_basis);
    } else {
        s = lanczos_smallest(n, apply, k, 1e-8, 10L * std::max(n, 100), null_basis);
    }
    canonicalize_signs(s.eigenvectors);
    record_degenerate_gaps(s);
    return s;
}

}  // namespace grasp
