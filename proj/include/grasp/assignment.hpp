#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "grasp/functional_map.hpp"
#include "grasp/graph.hpp"

namespace grasp {

/// Nonnegative matching costs; entry (i, u) is the squared Euclidean
/// distance between node i's coefficients in graph 1 and node u's mapped
/// coefficients in graph 2.
using CostMatrix = Eigen::MatrixXd;

enum class Matcher { Jv, Nn };

std::string to_string(Matcher m);
Matcher matcher_from_string(const std::string& name);

/// Node map from graph 1 to graph 2. For Matcher::Jv the mapping is a
/// bijection; nearest-neighbor mappings may repeat targets.
struct Alignment {
    std::vector<int> mapping;  // mapping[i] = matched node of graph 2
    double total_cost = 0.0;
    Matcher method = Matcher::Jv;
};

// cost(i, u) = || row_i(phi) - c ⊙ row_u(psi_hat) ||^2.
CostMatrix build_cost(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& psi_hat,
                      const DiagonalMap& cmap);

// Minimum-total-cost bijection by shortest augmenting paths (the
// Jonker-Volgenant family). Deterministic: rows are processed in order and
// ties prefer the lowest column index. Throws std::invalid_argument on
// non-square or non-finite input.
Alignment solve_jv(const CostMatrix& cost);

// Row-wise argmin; ties prefer the lowest column. Not injective in general.
Alignment solve_nn(const CostMatrix& cost);

// Fraction of nodes mapped to their ground-truth image.
double accuracy(const Alignment& a, const NodePermutation& truth);

// Writes "g1_node,g2_node" rows using the graphs' original labels.
void write_alignment_csv(std::ostream& out, const Alignment& a, const Graph& g1, const Graph& g2);

}  // namespace grasp
