#include "grasp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "grasp/rng.hpp"

namespace grasp {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1) throw std::invalid_argument("graph_core: node count must be >= 1");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("graph_core: label table size differs from node count");

    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph_core: edge endpoint out of range");
        if (u == v) continue;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    degrees_.assign(n_, 0);
    for (auto [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
}

std::string Graph::label(int i) const {
    if (!labels_.empty()) return labels_[i];
    return std::to_string(i);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

NodePermutation NodePermutation::inverse() const {
    NodePermutation inv;
    inv.mapping.resize(mapping.size());
    for (std::size_t i = 0; i < mapping.size(); ++i) inv.mapping[mapping[i]] = static_cast<int>(i);
    return inv;
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("graph_core: cannot open edge list '" + path + "'");

    std::unordered_map<std::string, int> index_of;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = index_of.try_emplace(token, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra))
            throw std::runtime_error("graph_core: '" + path + "' line " + std::to_string(lineno) +
                                     ": expected exactly two tokens");
        const int ia = intern(a);  // sequenced: first appearance fixes the index
        const int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    if (labels.empty()) throw std::runtime_error("graph_core: '" + path + "' holds no edges");

    const int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

Graph permute(const Graph& g, const NodePermutation& perm) {
    const int n = g.num_nodes();
    if (perm.size() != n) throw std::invalid_argument("graph_core: permutation length differs from node count");

    std::vector<char> seen(n, 0);
    for (int target : perm.mapping) {
        if (target < 0 || target >= n || seen[target])
            throw std::invalid_argument("graph_core: mapping is not a permutation");
        seen[target] = 1;
    }

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm.mapping[u], perm.mapping[v]);

    std::vector<std::string> labels;
    if (!g.labels().empty()) {
        labels.resize(n);
        for (int u = 0; u < n; ++u) labels[perm.mapping[u]] = g.labels()[u];
    }
    return Graph(n, std::move(edges), std::move(labels));
}

Graph delete_edges(const Graph& g, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("graph_core: deletion probability must lie in [0, 1]");

    Rng rng(seed);
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        if (rng.uniform() >= p) kept.push_back(e);

    return Graph(g.num_nodes(), std::move(kept), g.labels());
}

NodePermutation random_permutation(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph_core: permutation size must be >= 1");

    NodePermutation perm = identity_permutation(n);
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm.mapping[i], perm.mapping[j]);
    }
    return perm;
}

NodePermutation identity_permutation(int n) {
    NodePermutation perm;
    perm.mapping.resize(n);
    std::iota(perm.mapping.begin(), perm.mapping.end(), 0);
    return perm;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::vector<int> component_labels(const Graph& g) {
    std::vector<int> parent(g.num_nodes());
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : g.edges()) {
        int ru = find_root(parent, u);
        int rv = find_root(parent, v);
        if (ru != rv) parent[ru] = rv;
    }
    std::vector<int> labels(g.num_nodes(), -1);
    int next = 0;
    for (int u = 0; u < g.num_nodes(); ++u) {
        int root = find_root(parent, u);
        if (labels[root] == -1) labels[root] = next++;
        labels[u] = labels[root];
    }
    return labels;
}

int count_components(const Graph& g) {
    const std::vector<int> labels = component_labels(g);
    int count = 0;
    for (int label : labels) count = std::max(count, label + 1);
    return count;
}

std::uint64_t graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto absorb = [&h](std::uint64_t value) {
        h ^= value;
        h *= 0x100000001b3ULL;
    };
    absorb(static_cast<std::uint64_t>(g.num_nodes()));
    for (auto [u, v] : g.edges()) {
        absorb(static_cast<std::uint64_t>(u));
        absorb(static_cast<std::uint64_t>(v));
    }
    return h;
}

}  // namespace grasp
