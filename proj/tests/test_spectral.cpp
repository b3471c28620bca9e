#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "alphatough/cubic.hpp"
#include "alphatough/graph.hpp"
#include "alphatough/matrix.hpp"
#include "alphatough/spectral.hpp"

using namespace alphatough;

namespace {

Graph random_connected(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.45);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

// Multiset comparison of two sorted eigenvalue lists.
void check_spectrum(const Spectrum& got, std::vector<double> expected, double tol) {
    std::sort(expected.rbegin(), expected.rend());
    REQUIRE(got.eigenvalues.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(got.eigenvalues[i] == Catch::Approx(expected[i]).margin(tol));
}

}  // namespace

TEST_CASE("a_alpha_matrix assembly") {
    SymMatrix half = a_alpha_matrix(complete(2), 0.5);
    CHECK(half(0, 0) == 0.5);
    CHECK(half(0, 1) == 0.5);
    CHECK(half(1, 1) == 0.5);

    SymMatrix adj = a_alpha_matrix(complete(2), 0.0);
    CHECK(adj(0, 0) == 0.0);
    CHECK(adj(0, 1) == 1.0);

    SymMatrix zero = a_alpha_matrix(edgeless(2), 0.37);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(zero(i, j) == 0.0);

    CHECK_THROWS_AS(a_alpha_matrix(complete(2), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(a_alpha_matrix(complete(2), 1.1), std::invalid_argument);
}

TEST_CASE("full_spectrum on analytic cases") {
    // A_alpha(K_n) has eigenvalues n-1 and alpha*n - 1 (n-1 times).
    for (int n = 2; n <= 10; ++n)
        for (double alpha : {0.0, 0.3, 0.5, 2.0 / 3.0, 1.0}) {
            std::vector<double> expected(n, alpha * n - 1.0);
            expected[0] = n - 1.0;
            check_spectrum(full_spectrum(a_alpha_matrix(complete(n), alpha)), expected, 1e-10);
        }

    // star on 4 vertices, adjacency spectrum {sqrt(3), 0, 0, -sqrt(3)}
    Graph star4 = join(complete(1), edgeless(3));
    check_spectrum(full_spectrum(a_alpha_matrix(star4, 0.0)),
                   {std::sqrt(3.0), 0.0, 0.0, -std::sqrt(3.0)}, 1e-10);

    // paths and cycles: 2cos(k pi/(n+1)) and 2cos(2 pi k/n)
    for (int n : {2, 3, 5, 8}) {
        std::vector<double> expected;
        for (int k = 1; k <= n; ++k) expected.push_back(2.0 * std::cos(k * M_PI / (n + 1)));
        check_spectrum(full_spectrum(a_alpha_matrix(path(n), 0.0)), expected, 1e-10);
    }
    for (int n : {3, 4, 6, 9}) {
        std::vector<double> expected;
        for (int k = 0; k < n; ++k) expected.push_back(2.0 * std::cos(2.0 * M_PI * k / n));
        check_spectrum(full_spectrum(a_alpha_matrix(cycle(n), 0.0)), expected, 1e-10);
    }

    SymMatrix one(1);
    CHECK(full_spectrum(one).rho() == 0.0);
}

TEST_CASE("eigensolver accuracy on a tightly clustered spectrum") {
    // |computed - exact| <= 1e-10 * max(1, ||M||_inf) on a hard case with
    // tight clusters: K_40 at alpha = 0.9 has a 39-fold eigenvalue 35.
    SymMatrix m = a_alpha_matrix(complete(40), 0.9);
    Spectrum s = full_spectrum(m);
    double budget = 1e-10 * std::max(1.0, m.inf_norm());
    CHECK(std::abs(s.eigenvalues[0] - 39.0) <= budget);
    for (int i = 1; i < 40; ++i) CHECK(std::abs(s.eigenvalues[i] - 35.0) <= budget);
}

TEST_CASE("spectral_radius") {
    CHECK(spectral_radius(complete(7), 0.3) == Catch::Approx(6.0).margin(1e-10));
    CHECK(spectral_radius(complete(1), 0.9) == 0.0);

    double via_cubic = largest_root(Cubic{-3.0, -5.0, 3.0});
    CHECK(spectral_radius(family_gs2(6, 1), 0.0) ==
          Catch::Approx(via_cubic).margin(1e-9));
}

TEST_CASE("theorem11_cubic coefficients") {
    Cubic c = theorem11_cubic(6, 0.0);
    CHECK(c.c2 == -3.0);
    CHECK(c.c1 == -5.0);
    CHECK(c.c0 == 3.0);

    // alpha = 0 collapses to x^3 - (n-3)x^2 + (1-n)x + (n-3).
    for (int n = 3; n <= 30; ++n) {
        Cubic a0 = theorem11_cubic(n, 0.0);
        CHECK(a0.c2 == -(n - 3.0));
        CHECK(a0.c1 == 1.0 - n);
        CHECK(a0.c0 == n - 3.0);
    }
    CHECK_THROWS_AS(theorem11_cubic(2, 0.5), std::invalid_argument);
}

TEST_CASE("theorem11_cubic largest root matches dense eigensolve", "[oracle]") {
    for (int n = 6; n <= 20; ++n)
        for (double alpha : {0.0, 0.25, 0.5, 2.0 / 3.0}) {
            double root = largest_root(theorem11_cubic(n, alpha), n - 2.0);
            double rho = spectral_radius(family_gs2(n, 1), alpha);
            CHECK(root == Catch::Approx(rho).margin(1e-8));
        }
    // alpha = 0.8 needs n >= 20
    CHECK(largest_root(theorem11_cubic(20, 0.8), 18.0) ==
          Catch::Approx(spectral_radius(family_gs2(20, 1), 0.8)).margin(1e-8));
}

TEST_CASE("family_gs2_quotient_cubic") {
    // s = 1 coincides with the threshold cubic.
    for (int n = 6; n <= 15; ++n)
        for (double alpha : {0.0, 0.4, 0.75}) {
            Cubic a = family_gs2_quotient_cubic(n, 1, alpha);
            Cubic b = theorem11_cubic(n, alpha);
            CHECK(a.c2 == Catch::Approx(b.c2).margin(1e-12));
            CHECK(a.c1 == Catch::Approx(b.c1).margin(1e-12));
            CHECK(a.c0 == Catch::Approx(b.c0).margin(1e-12));
        }

    // Largest root equals the full-matrix spectral radius (the quotient is
    // equitable, so its spectrum embeds).
    for (int n = 5; n <= 16; ++n)
        for (int s = 1; 2 * s <= n - 1; ++s)
            for (double alpha : {0.0, 0.5, 0.7}) {
                double root = largest_root(family_gs2_quotient_cubic(n, s, alpha), n - 2.0);
                double rho = spectral_radius(family_gs2(n, s), alpha);
                CHECK(root == Catch::Approx(rho).margin(1e-8));
            }

    CHECK_THROWS_AS(family_gs2_quotient_cubic(9, 5, 0.5), std::invalid_argument);
}

TEST_CASE("largest_root") {
    CHECK(largest_root(Cubic{-3.0, 3.0, -1.0}) == Catch::Approx(1.0).margin(1e-9));

    double r = largest_root(Cubic{-3.0, -5.0, 3.0});
    CHECK(r > 3.999);
    CHECK(r < 4.41);
    CHECK(r == Catch::Approx(spectral_radius(family_gs2(6, 1), 0.0)).margin(1e-9));

    CHECK(largest_root(Cubic{0.0, -1.0, 0.0}) == Catch::Approx(1.0).margin(1e-12));

    // double root on top: x(x-2)^2
    CHECK(largest_root(Cubic{-4.0, 4.0, 0.0}) == Catch::Approx(2.0).margin(1e-6));

    CHECK_THROWS_AS(largest_root(Cubic{std::nan(""), 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("real_roots") {
    auto r1 = real_roots(Cubic{0.0, -1.0, 0.0});  // x^3 - x
    REQUIRE(r1.size() == 3);
    CHECK(r1[0] == Catch::Approx(1.0).margin(1e-12));
    CHECK(r1[1] == Catch::Approx(0.0).margin(1e-12));
    CHECK(r1[2] == Catch::Approx(-1.0).margin(1e-12));

    auto r2 = real_roots(Cubic{-3.0, 3.0, -1.0});  // (x-1)^3
    REQUIRE(r2.size() == 3);
    for (double x : r2) CHECK(x == Catch::Approx(1.0).margin(1e-5));

    auto r3 = real_roots(Cubic{0.0, 1.0, 0.0});  // x^3 + x
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == Catch::Approx(0.0).margin(1e-12));

    // random monic cubics with three known roots
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        double a = u(rng), b = u(rng), c = u(rng);
        Cubic cub{-(a + b + c), a * b + a * c + b * c, -a * b * c};
        auto roots = real_roots(cub);
        REQUIRE(roots.size() == 3);
        std::vector<double> want{a, b, c};
        std::sort(want.rbegin(), want.rend());
        for (int i = 0; i < 3; ++i)
            CHECK(roots[i] == Catch::Approx(want[i]).margin(1e-7));
        CHECK(largest_root(cub) == Catch::Approx(want[0]).margin(1e-9));
    }
}

TEST_CASE("Perron and trace properties", "[property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected(2 + trial % 9, rng);
        for (double alpha : {0.0, 0.5, 0.9}) {
            Spectrum s = full_spectrum(a_alpha_matrix(g, alpha));
            for (double lambda : s.eigenvalues) CHECK(s.rho() >= std::abs(lambda) - 1e-10);
            double trace = 0.0;
            for (double lambda : s.eigenvalues) trace += lambda;
            CHECK(trace == Catch::Approx(alpha * 2.0 * g.edge_count()).margin(1e-8));
        }
    }
}

TEST_CASE("proper subgraph strictly decreases the radius", "[property]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected(3 + trial % 8, rng);
        for (double alpha : {0.0, 0.5, 0.9}) {
            double rho = spectral_radius(g, alpha);
            for (auto [u, v] : g.edges())
                CHECK(rho > spectral_radius(g.without_edge(u, v), alpha) + 1e-10);
        }
    }
}

TEST_CASE("size bound on the radius", "[property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected(3 + trial % 8, rng);
        for (double alpha : {0.5, 0.7, 0.9, 1.0}) {
            double bound = spectral_radius_size_bound(g.order(), g.edge_count(), alpha);
            CHECK(spectral_radius(g, alpha) <= bound + 1e-9);
        }
        // equality at complete graphs for interior alpha
        double alpha = 0.7;
        Graph k = complete(g.order());
        CHECK(spectral_radius(k, alpha) ==
              Catch::Approx(spectral_radius_size_bound(k.order(), k.edge_count(), alpha))
                  .margin(1e-9));
        if (!g.is_complete())
            CHECK(spectral_radius(g, alpha) <
                  spectral_radius_size_bound(g.order(), g.edge_count(), alpha) - 1e-9);
    }
}
