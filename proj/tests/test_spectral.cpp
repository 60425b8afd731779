#include <doctest.h>

#include <algorithm>

#include "grasp/spectral.hpp"
#include "test_support.hpp"

using namespace grasp;

namespace {

void check_spectrum_invariants(const Graph& g, const Spectrum& s) {
    const Eigen::MatrixXd L = normalized_laplacian(g);
    const int k = s.k();
    CHECK((s.eigenvectors.transpose() * s.eigenvectors - Eigen::MatrixXd::Identity(k, k)).norm() <=
          1e-8);
    for (int j = 0; j < k; ++j) {
        CHECK((L * s.eigenvectors.col(j) - s.eigenvalues[j] * s.eigenvectors.col(j)).norm() <= 1e-6);
        CHECK(s.eigenvalues[j] >= -1e-8);
        CHECK(s.eigenvalues[j] <= 2.0 + 1e-8);
        // canonical sign: the largest-magnitude entry is positive
        int best = 0;
        for (int i = 1; i < s.eigenvectors.rows(); ++i)
            if (std::abs(s.eigenvectors(i, j)) > std::abs(s.eigenvectors(best, j))) best = i;
        CHECK(s.eigenvectors(best, j) > 0.0);
    }
    CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
}

}  // namespace

TEST_CASE("normalized laplacian of K2") {
    Graph k2(2, {{0, 1}});
    Eigen::MatrixXd L = normalized_laplacian(k2);
    Eigen::MatrixXd expected(2, 2);
    expected << 1, -1, -1, 1;
    CHECK((L - expected).norm() <= 1e-12);
}

TEST_CASE("normalized laplacian of a 3-path") {
    Graph path(3, {{0, 1}, {1, 2}});
    Eigen::MatrixXd L = normalized_laplacian(path);
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, -s, 0, -s, 1, -s, 0, -s, 1;
    CHECK((L - expected).norm() <= 1e-12);
}

TEST_CASE("normalized laplacian zeroes isolated nodes") {
    Graph lonely(1, {});
    CHECK(normalized_laplacian(lonely)(0, 0) == 0.0);

    Graph g(3, {{0, 1}});
    Eigen::MatrixXd L = normalized_laplacian(g);
    CHECK(L.row(2).norm() == 0.0);
    CHECK(L.col(2).norm() == 0.0);
    CHECK(L(0, 0) == 1.0);
}

TEST_CASE("eigendecompose on tiny graphs matches hand results") {
    Graph k2(2, {{0, 1}});
    Spectrum s2 = eigendecompose(normalized_laplacian(k2), 2);
    CHECK(s2.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(s2.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-10));

    Graph path(3, {{0, 1}, {1, 2}});
    Spectrum s3 = eigendecompose(normalized_laplacian(path), 3);
    CHECK(s3.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(s3.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s3.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-10));

    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    Spectrum sk3 = eigendecompose(normalized_laplacian(k3), 3);
    CHECK(sk3.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(sk3.eigenvalues[1] == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(sk3.eigenvalues[2] == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(!sk3.degenerate_gaps.empty());
}

TEST_CASE("eigendecompose clamps k and validates input") {
    Graph k2(2, {{0, 1}});
    CHECK(eigendecompose(normalized_laplacian(k2), 10).k() == 2);
    CHECK_THROWS_AS(eigendecompose(normalized_laplacian(k2), 0), std::invalid_argument);

    Eigen::MatrixXd asym(2, 2);
    asym << 0, 1e-6, 0, 0;
    CHECK_THROWS_AS(eigendecompose(asym, 1), std::invalid_argument);
    CHECK_THROWS_AS(eigendecompose(Eigen::MatrixXd::Zero(2, 3), 1), std::invalid_argument);
}

TEST_CASE("spectrum invariants hold on random graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = testing::gnp(60, 0.1, seed);
        check_spectrum_invariants(g, graph_spectrum(g, 20));
    }
}

TEST_CASE("zero eigenvalue multiplicity equals the component count") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        // sparse enough to often be disconnected
        Graph g = testing::gnp(80, 0.02, seed);
        Spectrum s = graph_spectrum(g, 80);
        int zeros = 0;
        for (int j = 0; j < s.k(); ++j)
            if (std::abs(s.eigenvalues[j]) < 1e-8) ++zeros;
        CHECK(zeros == count_components(g));
    }
}

TEST_CASE("sorted eigenvalues are invariant under node permutation") {
    Graph g = testing::gnp(50, 0.12, 21);
    Graph h = permute(g, random_permutation(50, 5));
    Spectrum sg = graph_spectrum(g, 50);
    Spectrum sh = graph_spectrum(h, 50);
    CHECK((sg.eigenvalues - sh.eigenvalues).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("lanczos path agrees with the dense path") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        Graph g = testing::gnp_connected(250, 0.04, seed);
        Spectrum dense = graph_spectrum(g, 12, EigsMethod::Dense);
        Spectrum lanczos = graph_spectrum(g, 12, EigsMethod::Lanczos);
        CHECK((dense.eigenvalues - lanczos.eigenvalues).cwiseAbs().maxCoeff() <= 1e-7);
        check_spectrum_invariants(g, lanczos);
    }
}

TEST_CASE("lanczos works through the dense-matrix interface too") {
    Graph g = testing::gnp_connected(120, 0.06, 9);
    Spectrum dense = eigendecompose(normalized_laplacian(g), 8, EigsMethod::Dense);
    Spectrum lanczos = eigendecompose(normalized_laplacian(g), 8, EigsMethod::Lanczos);
    CHECK((dense.eigenvalues - lanczos.eigenvalues).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("lanczos resolves repeated eigenvalues on a disconnected graph") {
    // two identical components force multiplicity at zero
    std::vector<Edge> edges;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 59; ++i) edges.emplace_back(c * 60 + i, c * 60 + i + 1);
    Graph g(120, edges);
    Spectrum s = graph_spectrum(g, 6, EigsMethod::Lanczos);
    int zeros = 0;
    for (int j = 0; j < s.k(); ++j)
        if (std::abs(s.eigenvalues[j]) < 1e-8) ++zeros;
    CHECK(zeros == 2);
    check_spectrum_invariants(g, s);
}
