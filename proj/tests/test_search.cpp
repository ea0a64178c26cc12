#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdesign/catalog.hpp"
#include "gdesign/search.hpp"
#include "oracles.hpp"

using namespace gdesign;

namespace {
Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
}
}  // namespace

TEST_CASE("brute force on C4 pairs agrees with the analytic oracle") {
    Graph c4 = cycle(4);
    Spectrum s = spectrum_of(c4);
    auto res = brute_force(c4, s, 2);
    // oracle: exhaustively score all six pairs against the analytic basis
    int expect = 0;
    std::vector<std::vector<int>> best_pairs;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            int K = oracles::cycle_strength(4, {a, b});
            if (K > expect) {
                expect = K;
                best_pairs = {{a, b}};
            } else if (K == expect) {
                best_pairs.push_back({a, b});
            }
        }
    CHECK(res.best_K == expect);
    REQUIRE(res.witnesses.size() == best_pairs.size());
    for (size_t i = 0; i < best_pairs.size(); ++i)
        CHECK(res.witnesses[i].members == best_pairs[i]);
    CHECK(res.subsets_examined == 6);
    // the adjacent pairs win on C4; the antipodal pair misses the
    // alternating eigenvector
    CHECK(res.best_K == 3);
    CHECK(res.witnesses.front().members == std::vector<int>{0, 1});
}

TEST_CASE("brute force: frucht has a unique optimal 4-subset") {
    Graph g = catalog_get("frucht");
    Spectrum s = spectrum_of(g);
    auto res = brute_force(g, s, 4);
    CHECK(res.best_K == 11);
    CHECK(res.witnesses.size() == 1);
    CHECK(res.subsets_examined == binomial(12, 4));
}

TEST_CASE("brute force: budget gate") {
    Graph g = catalog_get("gewirtz");
    Spectrum s = spectrum_of(g);
    CHECK_THROWS(brute_force(g, s, 10, kDefaultEpsInt, /*budget=*/1000));
}

TEST_CASE("brute force: deterministic across worker counts") {
    Graph g = catalog_get("pappus");
    Spectrum s = spectrum_of(g);
    auto one = brute_force(g, s, 6, kDefaultEpsInt, kDefaultBudget, 1);
    auto four = brute_force(g, s, 6, kDefaultEpsInt, kDefaultBudget, 4);
    CHECK(one.best_K == four.best_K);
    REQUIRE(one.witnesses.size() == four.witnesses.size());
    for (size_t i = 0; i < one.witnesses.size(); ++i)
        CHECK(one.witnesses[i].members == four.witnesses[i].members);
}

TEST_CASE("distance search: C6 pairs") {
    Graph c6 = cycle(6);
    Spectrum s = spectrum_of(c6);
    auto res = heuristic_distance_search(c6, s, 2, /*seed=*/5, /*max_iters=*/50);
    // the best visited pair integrates five eigenfunctions, like the
    // antipodal pair; the distance objective peaks at the antipodal sum 6
    CHECK(res.best_K == 5);
    bool saw_antipodal = false;
    for (const auto& w : res.witnesses)
        if ((w.members[1] - w.members[0]) % 3 == 0) saw_antipodal = true;
    CHECK(pairwise_distance_sum(c6, VertexSubset::of({0, 3}, 6)) == 6);
    CHECK(saw_antipodal);
}

TEST_CASE("distance search: size = n returns the full set") {
    Graph g = catalog_get("petersen");
    Spectrum s = spectrum_of(g);
    auto res = heuristic_distance_search(g, s, 10, 1, 10);
    CHECK(res.best_K == 10);
    REQUIRE(res.witnesses.size() == 1);
    CHECK(res.witnesses[0].members.size() == 10);
}

TEST_CASE("distance search: identical seeds reproduce identical results") {
    Graph g = catalog_get("nauru");
    Spectrum s = spectrum_of(g);
    auto a = heuristic_distance_search(g, s, 6, 99, 60);
    auto b = heuristic_distance_search(g, s, 6, 99, 60);
    CHECK(a.best_K == b.best_K);
    CHECK(a.subsets_examined == b.subsets_examined);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (size_t i = 0; i < a.witnesses.size(); ++i)
        CHECK(a.witnesses[i].members == b.witnesses[i].members);
}

TEST_CASE("heuristics never beat brute force at the same size") {
    Graph g = catalog_get("truncated-tetrahedral");
    Spectrum s = spectrum_of(g);
    auto exact = brute_force(g, s, 4);
    for (std::uint64_t seed : {1, 2, 3}) {
        CHECK(heuristic_distance_search(g, s, 4, seed, 50).best_K <= exact.best_K);
        CHECK(heat_local_search(g, s, 4, 2, seed, 5).best_K <= exact.best_K);
    }
}

TEST_CASE("diffuse: hand-computed small cases") {
    Graph k2 = from_edge_list(2, std::vector<std::pair<int, int>>{{0, 1}});
    Design d = Design::weighted(VertexSubset::of({0}, 2), {1.0});
    auto h0 = diffuse(k2, d, 0);
    CHECK(h0.measure[0] == doctest::Approx(1.0));
    CHECK(h0.measure[1] == doctest::Approx(0.0));
    auto h1 = diffuse(k2, d, 1);
    CHECK(h1.measure[0] == doctest::Approx(0.0));
    CHECK(h1.measure[1] == doctest::Approx(1.0));
    CHECK_THROWS(diffuse(k2, d, -1));
}

TEST_CASE("diffuse: support vs the BFS ball, mass conserved") {
    Graph g = catalog_get("nauru");
    Design d = Design::equal(VertexSubset::of({6, 9, 13, 16, 20, 23}, 24));
    auto dist = distances_from(g, d.subset);
    std::vector<bool> touched(24, false);
    for (int t = 0; t <= 4; ++t) {
        auto h = diffuse(g, d, t);
        CHECK(h.measure.sum() == doctest::Approx(1.0).epsilon(24 * 1e-10));
        CHECK(h.measure.minCoeff() >= 0.0);
        for (int v = 0; v < 24; ++v) {
            bool in_support = h.measure[v] > 1e-14;
            touched[v] = touched[v] || in_support;
            CHECK((!in_support || dist[v] <= t));      // support within the ball
            CHECK((dist[v] != t || in_support));       // the frontier is always reached
            // walk parity: cumulative support is exactly the ball
            CHECK(touched[v] == (dist[v] <= t));
        }
    }
    // The design is an independent set, so after one step the mass sits
    // exactly on the 18 non-design vertices (each at distance 1); the design
    // vertices themselves are only revisited at even times. The walk without
    // laziness reaches the ball cumulatively, not pointwise.
    auto h1 = diffuse(g, d, 1);
    CHECK((h1.measure.array() > 1e-14).count() == 18);
    for (int v = 0; v < 24; ++v)
        CHECK((h1.measure[v] > 1e-14) == (dist[v] == 1));
}

TEST_CASE("heat objective: closed forms and the spectral identity") {
    Graph g = catalog_get("pappus");
    Design all = Design::equal(VertexSubset::of(
        [] { std::vector<int> v(18); for (int i = 0; i < 18; ++i) v[i] = i; return v; }(),
        18));
    CHECK(heat_objective(g, all, 3) <= 1e-15);

    Graph k2 = from_edge_list(2, std::vector<std::pair<int, int>>{{0, 1}});
    Design one = Design::weighted(VertexSubset::of({0}, 2), {1.0});
    CHECK(heat_objective(k2, one, 1) == doctest::Approx(0.5));

    // Q_t = sum_{i>=2} |lambda_i+1|^{2t} <nu, phi_i>^2 on regular graphs
    Spectrum s = spectrum_of(g);
    Design d = Design::equal(VertexSubset::of({0, 4, 9, 13}, 18));
    Eigen::VectorXd nu = Eigen::VectorXd::Zero(18);
    for (int v : d.subset.members) nu[v] += 1.0 / 4;
    for (int t = 0; t <= 4; ++t) {
        double q = heat_objective(g, d, t);
        double spectral = 0.0;
        for (int i = 0; i < s.n; ++i) {
            if (i == s.constant_index()) continue;
            double c = s.eigenvectors.col(i).dot(nu);
            spectral += std::pow(std::abs(s.eigenvalues[i] + 1.0), 2.0 * t) * c * c;
        }
        CHECK(q == doctest::Approx(spectral).epsilon(1e-9));
    }
    // |lambda+1| <= 1 makes the spectral form non-increasing in t
    CHECK(heat_objective(g, d, 2) <= heat_objective(g, d, 1) + 1e-12);
    CHECK(heat_objective(g, d, 3) <= heat_objective(g, d, 2) + 1e-12);
}

TEST_CASE("heat search: C4 pairs at two steps") {
    Graph c4 = cycle(4);
    Spectrum s = spectrum_of(c4);
    // adjacent pairs diffuse to uniform (Q = 0); the antipodal pair keeps
    // oscillating on the alternating mode (Q = 1/4)
    CHECK(heat_objective(c4, Design::equal(VertexSubset::of({0, 1}, 4)), 2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(heat_objective(c4, Design::equal(VertexSubset::of({0, 2}, 4)), 2) ==
          doctest::Approx(0.25));
    auto res = heat_local_search(c4, s, 2, 2, /*seed=*/3, /*max_iters=*/4);
    CHECK(res.best_K == 3);  // adjacent pairs are also the strength optimum
}

TEST_CASE("heat search: size = n is immediately exact") {
    Graph g = catalog_get("petersen");
    Spectrum s = spectrum_of(g);
    Design all = Design::equal(VertexSubset::of(
        [] { std::vector<int> v(10); for (int i = 0; i < 10; ++i) v[i] = i; return v; }(),
        10));
    CHECK(heat_objective(g, all, 1) <= 1e-15);
    auto res = heat_local_search(g, s, 10, 1, 1, 2);
    CHECK(res.best_K == 10);
}

TEST_CASE("default heat steps is half the diameter") {
    CHECK(default_heat_steps(catalog_get("nauru")) == 2);   // diameter 4
    CHECK(default_heat_steps(catalog_get("dyck")) == 3);    // diameter 5
}

TEST_CASE("brute force: the full vertex set is the exact design") {
    Graph g = catalog_get("petersen");
    Spectrum s = spectrum_of(g);
    auto res = brute_force(g, s, 10);
    CHECK(res.best_K == 10);
    REQUIRE(res.witnesses.size() == 1);
    CHECK(res.witnesses[0].members.size() == 10);
}

TEST_CASE("binomial helper") {
    CHECK(binomial(32, 8) == 10518300);
    CHECK(binomial(56, 4) == 367290);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
}
