#pragma once

#include <Eigen/Dense>
#include <cstdio>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "grasp/graph.hpp"
#include "grasp/rng.hpp"

namespace grasp::testing {

// Erdos-Renyi G(n, p).
inline Graph gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph gnp_connected(int n, double p, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = gnp(n, p, combine_seed(seed, attempt));
        if (count_components(g) == 1) return g;
    }
}

// Preferential attachment: each new node attaches m edges to nodes drawn
// with probability proportional to degree. Heavy-tailed degrees make nodes
// distinguishable, like the social networks the benchmark targets.
inline Graph preferential_attachment(int n, int m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<int> endpoint_pool;  // node id repeated once per degree
    for (int u = 0; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) {
            edges.emplace_back(u, v);
            endpoint_pool.push_back(u);
            endpoint_pool.push_back(v);
        }
    for (int u = m + 1; u < n; ++u) {
        std::vector<int> chosen;
        while (static_cast<int>(chosen.size()) < m) {
            int candidate = endpoint_pool[rng.uniform_below(endpoint_pool.size())];
            bool fresh = true;
            for (int c : chosen) fresh = fresh && c != candidate;
            if (fresh) chosen.push_back(candidate);
        }
        for (int c : chosen) {
            edges.emplace_back(c, u);
            endpoint_pool.push_back(c);
            endpoint_pool.push_back(u);
        }
    }
    return Graph(n, std::move(edges));
}

// Fixed 10-node connected graph with all-distinct Laplacian eigenvalues and
// no nontrivial automorphisms: a path with three chords.
inline Graph asymmetric_ten() {
    std::vector<Edge> edges;
    for (int i = 0; i < 9; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, 2);
    edges.emplace_back(1, 5);
    edges.emplace_back(3, 7);
    return Graph(10, std::move(edges));
}

inline Eigen::MatrixXd random_matrix(int rows, int cols, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
    return m;
}

inline Eigen::MatrixXd random_orthogonal(int k, std::uint64_t seed) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_matrix(k, k, seed));
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(k, k);
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < k; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    return Q;
}

// Self-deleting temporary file.
class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::string("grasp_test_") + std::to_string(++counter) + "_" +
                std::to_string(static_cast<unsigned>(::getpid())) + ".tmp";
        std::ofstream out(path_);
        out << contents;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace grasp::testing
