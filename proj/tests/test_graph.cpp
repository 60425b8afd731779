#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "grasp/graph.hpp"
#include "test_support.hpp"

using namespace grasp;
using grasp::testing::TempFile;

namespace {

int degree_sum(const Graph& g) {
    return std::accumulate(g.degrees().begin(), g.degrees().end(), 0);
}

}  // namespace

TEST_CASE("load_edge_list parses a plain file") {
    TempFile file("0 1\n1 2\n");
    Graph g = load_edge_list(file.path());
    CHECK(g.num_nodes() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.degrees() == std::vector<int>{1, 2, 1});
}

TEST_CASE("load_edge_list drops duplicate edges and self-loops") {
    TempFile file("0 1\n0 1\n1 0\n2 2\n1 2\n");
    Graph g = load_edge_list(file.path());
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("load_edge_list re-indexes labels in first-appearance order") {
    TempFile file("a b\nb c\nc a\n");
    Graph g = load_edge_list(file.path());
    CHECK(g.num_nodes() == 3);
    CHECK(g.degrees() == std::vector<int>{2, 2, 2});
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
}

TEST_CASE("load_edge_list ignores comment lines and blank lines") {
    TempFile file("# comment\n% another\n\n0 1\n");
    Graph g = load_edge_list(file.path());
    CHECK(g.num_edges() == 1);
}

TEST_CASE("load_edge_list error paths") {
    CHECK_THROWS_AS(load_edge_list("does_not_exist.edges"), std::runtime_error);
    TempFile three_tokens("0 1 2\n");
    CHECK_THROWS_AS(load_edge_list(three_tokens.path()), std::runtime_error);
    TempFile one_token("0\n");
    CHECK_THROWS_AS(load_edge_list(one_token.path()), std::runtime_error);
    TempFile empty("# nothing here\n");
    CHECK_THROWS_AS(load_edge_list(empty.path()), std::runtime_error);
}

TEST_CASE("permute keeps complete graphs fixed") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph p = permute(k3, NodePermutation{{2, 0, 1}});
    CHECK(p == k3);
}

TEST_CASE("permute relabels a path") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(permute(path, NodePermutation{{2, 1, 0}}) == path);

    Graph q = permute(path, NodePermutation{{1, 0, 2}});
    CHECK(q.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(q.degrees() == std::vector<int>{2, 1, 1});
}

TEST_CASE("permute rejects bad permutations") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(permute(path, NodePermutation{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(permute(path, NodePermutation{{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("permute followed by its inverse is the identity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = testing::gnp(25, 0.2, seed);
        NodePermutation perm = random_permutation(25, seed + 100);
        CHECK(permute(permute(g, perm), perm.inverse()) == g);
    }
}

TEST_CASE("delete_edges keeps everything at p=0 and nothing at p=1") {
    Graph g = testing::gnp(30, 0.2, 7);
    CHECK(delete_edges(g, 0.0, 1) == g);
    Graph empty = delete_edges(g, 1.0, 1);
    CHECK(empty.num_edges() == 0);
    CHECK(empty.num_nodes() == 30);
}

TEST_CASE("delete_edges is deterministic and only removes") {
    Graph g = testing::gnp(40, 0.15, 3);
    Graph a = delete_edges(g, 0.3, 42);
    Graph b = delete_edges(g, 0.3, 42);
    CHECK(a == b);
    CHECK(std::includes(g.edges().begin(), g.edges().end(), a.edges().begin(), a.edges().end()));
    CHECK(degree_sum(a) == 2 * a.num_edges());
}

TEST_CASE("delete_edges rejects probabilities outside [0,1]") {
    Graph g(2, {{0, 1}});
    CHECK_THROWS_AS(delete_edges(g, -0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(delete_edges(g, 1.1, 0), std::invalid_argument);
}

TEST_CASE("delete_edges removes the expected fraction on average") {
    Graph g = testing::gnp(60, 0.15, 11);  // a few hundred edges
    const double p = 0.05;
    double total_fraction = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
        total_fraction += static_cast<double>(delete_edges(g, p, seed).num_edges()) / g.num_edges();
    CHECK(std::abs(total_fraction / 1000.0 - 0.95) <= 0.01);
}

TEST_CASE("random_permutation basics") {
    CHECK(random_permutation(1, 5).mapping == std::vector<int>{0});
    CHECK(random_permutation(8, 9).mapping == random_permutation(8, 9).mapping);
    CHECK_THROWS_AS(random_permutation(0, 1), std::invalid_argument);
}

TEST_CASE("random_permutation is close to uniform") {
    std::map<std::vector<int>, int> counts;
    const int samples = 6000;
    for (int s = 0; s < samples; ++s) counts[random_permutation(3, 1000 + s).mapping]++;
    CHECK(counts.size() == 6);
    for (const auto& [perm, count] : counts)
        CHECK(std::abs(static_cast<double>(count) / samples - 1.0 / 6) <= 0.02);
}

TEST_CASE("count_components") {
    CHECK(count_components(Graph(5, {{0, 1}, {1, 2}})) == 3);
    CHECK(count_components(testing::asymmetric_ten()) == 1);
}

TEST_CASE("graph_hash distinguishes graphs and ignores nothing it should not") {
    Graph a(3, {{0, 1}});
    Graph b(3, {{0, 2}});
    CHECK(graph_hash(a) != graph_hash(b));
    CHECK(graph_hash(a) == graph_hash(Graph(3, {{1, 0}})));
}
