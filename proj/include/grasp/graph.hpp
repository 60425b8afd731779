#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grasp {

using Edge = std::pair<int, int>;

/// Undirected simple graph over nodes 0..n-1. Edges are stored once as
/// canonical (u < v) pairs, sorted lexicographically, with no duplicates and
/// no self-loops. `labels` keeps the original node labels when the graph was
/// read from a file; it is empty for synthetic graphs.
class Graph {
public:
    Graph() = default;

    // Canonicalizes the edge list: orients pairs, sorts, drops duplicates
    // and self-loops. Throws std::invalid_argument on out-of-range endpoints
    // or n < 1.
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Label for node i: the original token if present, otherwise the index.
    std::string label(int i) const;

    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
};

/// Bijection of 0..n-1; mapping[i] is the image of node i.
struct NodePermutation {
    std::vector<int> mapping;

    int size() const { return static_cast<int>(mapping.size()); }
    NodePermutation inverse() const;
};

// Reads a whitespace-separated edge list. Lines starting with '#' or '%' are
// ignored; node labels are re-indexed densely in first-appearance order.
// Throws std::runtime_error on unreadable files, lines with a token count
// other than two, or an empty graph.
Graph load_edge_list(const std::string& path);

// Relabels nodes: edge (u, v) of g becomes (perm[u], perm[v]).
Graph permute(const Graph& g, const NodePermutation& perm);

// Removes each edge independently with probability p (seeded, deterministic).
// Node count is preserved; deletion may isolate nodes.
Graph delete_edges(const Graph& g, double p, std::uint64_t seed);

// Uniformly random permutation of 0..n-1, deterministic per seed.
NodePermutation random_permutation(int n, std::uint64_t seed);

NodePermutation identity_permutation(int n);

// Component id per node, ids dense in discovery order of the lowest member.
std::vector<int> component_labels(const Graph& g);

// Number of connected components (isolated nodes count as components).
int count_components(const Graph& g);

// Order-independent digest of (n, edge set); cache key material.
std::uint64_t graph_hash(const Graph& g);

}  // namespace grasp
