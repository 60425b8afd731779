#include "grasp/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace grasp {

std::string to_string(Matcher m) { return m == Matcher::Jv ? "jv" : "nn"; }

Matcher matcher_from_string(const std::string& name) {
    if (name == "jv") return Matcher::Jv;
    if (name == "nn") return Matcher::Nn;
    throw std::invalid_argument("assignment: unknown matcher '" + name + "'");
}

CostMatrix build_cost(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& psi_hat,
                      const DiagonalMap& cmap) {
    if (phi.cols() != psi_hat.cols() || cmap.c.size() != phi.cols())
        throw std::invalid_argument("assignment: coefficient dimensions disagree");
    if (phi.rows() != psi_hat.rows())
        throw std::invalid_argument("assignment: node counts disagree");

    const Eigen::MatrixXd scaled = psi_hat * cmap.c.asDiagonal();
    const Eigen::VectorXd phi_sq = phi.rowwise().squaredNorm();
    const Eigen::VectorXd scaled_sq = scaled.rowwise().squaredNorm();
    CostMatrix cost = (-2.0 * phi * scaled.transpose());
    cost.colwise() += phi_sq;
    cost.rowwise() += scaled_sq.transpose();
    return cost.cwiseMax(0.0);
}

namespace {

void validate_cost(const CostMatrix& cost) {
    if (cost.rows() != cost.cols() || cost.rows() == 0)
        throw std::invalid_argument("assignment: cost matrix must be square and nonempty");
    if (!cost.allFinite())
        throw std::invalid_argument("assignment: cost matrix must be finite");
}

double total_along(const CostMatrix& cost, const std::vector<int>& mapping) {
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(mapping.size()); ++i) total += cost(i, mapping[i]);
    return total;
}

}  // namespace

Alignment solve_jv(const CostMatrix& cost) {
    validate_cost(cost);
    const int n = static_cast<int>(cost.rows());
    constexpr double inf = std::numeric_limits<double>::infinity();

    // Shortest augmenting paths over reduced costs. A global shift keeps
    // entries nonnegative, which Dijkstra requires; it cannot change which
    // bijection is optimal.
    const double shift = std::min(0.0, cost.minCoeff());

    std::vector<double> u(n, 0.0), v(n, 0.0), dist(n);
    std::vector<int> col4row(n, -1), row4col(n, -1), path(n, -1);
    std::vector<char> scanned_row(n), scanned_col(n);

    for (int row = 0; row < n; ++row) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(path.begin(), path.end(), -1);
        std::fill(scanned_row.begin(), scanned_row.end(), 0);
        std::fill(scanned_col.begin(), scanned_col.end(), 0);

        int sink = -1;
        int i = row;
        double min_val = 0.0;
        while (sink == -1) {
            scanned_row[i] = 1;
            for (int j = 0; j < n; ++j) {
                if (scanned_col[j]) continue;
                const double reduced = min_val + (cost(i, j) - shift) - u[i] - v[j];
                if (reduced < dist[j]) {
                    dist[j] = reduced;
                    path[j] = i;
                }
            }
            int next = -1;
            double lowest = inf;
            for (int j = 0; j < n; ++j) {
                if (!scanned_col[j]) {
                    if (dist[j] < lowest) {  // strict: ties keep the lowest column
                        lowest = dist[j];
                        next = j;
                    }
                }
            }
            min_val = lowest;
            scanned_col[next] = 1;
            if (row4col[next] == -1)
                sink = next;
            else
                i = row4col[next];
        }

        u[row] += min_val;
        for (int r = 0; r < n; ++r)
            if (scanned_row[r] && r != row) u[r] += min_val - dist[col4row[r]];
        for (int j = 0; j < n; ++j)
            if (scanned_col[j]) v[j] -= min_val - dist[j];

        int j = sink;
        while (true) {
            const int r = path[j];
            row4col[j] = r;
            std::swap(col4row[r], j);
            if (r == row) break;
        }
    }

    Alignment result;
    result.method = Matcher::Jv;
    result.mapping = std::move(col4row);
    result.total_cost = total_along(cost, result.mapping);
    return result;
}

Alignment solve_nn(const CostMatrix& cost) {
    validate_cost(cost);
    const int n = static_cast<int>(cost.rows());

    Alignment result;
    result.method = Matcher::Nn;
    result.mapping.resize(n);
    for (int i = 0; i < n; ++i) {
        int best = 0;
        for (int j = 1; j < n; ++j)
            if (cost(i, j) < cost(i, best)) best = j;
        result.mapping[i] = best;
    }
    result.total_cost = total_along(cost, result.mapping);
    return result;
}

double accuracy(const Alignment& a, const NodePermutation& truth) {
    if (a.mapping.size() != truth.mapping.size())
        throw std::invalid_argument("assignment: alignment and truth lengths differ");
    int correct = 0;
    for (std::size_t i = 0; i < a.mapping.size(); ++i)
        if (a.mapping[i] == truth.mapping[i]) ++correct;
    return static_cast<double>(correct) / static_cast<double>(a.mapping.size());
}

void write_alignment_csv(std::ostream& out, const Alignment& a, const Graph& g1, const Graph& g2) {
    out << "g1_node,g2_node\n";
    for (std::size_t i = 0; i < a.mapping.size(); ++i)
        out << g1.label(static_cast<int>(i)) << ',' << g2.label(a.mapping[i]) << '\n';
}

}  // namespace grasp
