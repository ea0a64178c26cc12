#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gdesign/catalog.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/rng.hpp"
#include "oracles.hpp"

using namespace gdesign;

TEST_CASE("edge list construction: triangle and single edge") {
    std::vector<std::pair<int, int>> tri{{0, 1}, {1, 2}, {2, 0}};
    Graph g = from_edge_list(3, tri);
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.regularity() == 2);

    std::vector<std::pair<int, int>> e{{0, 1}};
    Graph k2 = from_edge_list(2, e);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
}

TEST_CASE("edge list construction: rejects bad input") {
    std::vector<std::pair<int, int>> loop{{1, 1}};
    CHECK_THROWS(from_edge_list(3, loop));
    std::vector<std::pair<int, int>> oob{{0, 3}};
    CHECK_THROWS(from_edge_list(3, oob));
    std::vector<std::pair<int, int>> disc{{0, 1}, {2, 3}};
    CHECK_THROWS(from_edge_list(4, disc));
    CHECK_NOTHROW(from_edge_list(4, disc, /*allow_disconnected=*/true));
    // duplicates collapse
    std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}, {0, 1}, {1, 2}};
    CHECK(from_edge_list(3, dup).edge_count() == 2);
}

TEST_CASE("handshake and symmetry invariants") {
    Graph g = catalog_get("frucht");
    long degsum = 0;
    for (int v = 0; v < g.n(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.edge_count());
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) CHECK(g.has_edge(v, u));
}

TEST_CASE("frucht invariants against the independent girth oracle") {
    Graph g = catalog_get("frucht");
    CHECK(g.n() == 12);
    CHECK(g.edge_count() == 18);
    CHECK(g.regularity() == 3);
    CHECK(girth(g) == 3);
    CHECK(oracles::naive_girth(g.adjacency()) == 3);
}

TEST_CASE("graph6: K4 encodes to the reference bytes") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e.emplace_back(i, j);
    Graph k4 = from_edge_list(4, e);
    CHECK(to_graph6(k4) == "C~");  // hand-packed: header 'C', six 1-bits
    Graph back = from_graph6("C~");
    CHECK(back.n() == 4);
    CHECK(back.edge_count() == 6);
}

TEST_CASE("graph6: round trip on 1000 random small graphs") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        int n = 2 + static_cast<int>(rng.below(12));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.coin()) edges.emplace_back(i, j);
        Graph g = from_edge_list(n, edges, true);
        Graph h = from_graph6(to_graph6(g), true);
        CHECK(h.n() == g.n());
        CHECK(h.adjacency() == g.adjacency());
    }
}

TEST_CASE("graph6: malformed input") {
    CHECK_THROWS(from_graph6(""));
    CHECK_THROWS(from_graph6("C"));      // missing data bytes
    CHECK_THROWS(from_graph6("C~~~"));   // too many
    CHECK_THROWS(from_graph6("C\x01"));  // bad byte
}

TEST_CASE("lcf: K_{3,3} from [3]^6 and collision errors") {
    Graph g = from_lcf_string("[3]^6");
    CHECK(g.n() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(g.regularity() == 3);
    CHECK(girth(g) == 4);  // complete bipartite K_{3,3}
    // chord length 1 collides with the cycle
    std::vector<int> bad{1};
    CHECK_THROWS(from_lcf(bad, 6));
    // chord 3 on 4 vertices folds onto the cycle
    std::vector<int> fold{3};
    CHECK_THROWS(from_lcf(fold, 4));
}

TEST_CASE("lcf: catalog cubic graphs have their published girths") {
    CHECK(girth(from_lcf_string("[5,-9,7,-7,9,-5]^4")) == 6);   // nauru
    CHECK(girth(from_lcf_string("[12,7,-7]^8")) == 7);          // mcgee
    CHECK(girth(from_lcf_string("[2,6,-2]^4")) == 3);           // truncated tetrahedron
    Graph nauru = from_lcf_string("[5,-9,7,-7,9,-5]^4");
    CHECK(oracles::naive_girth(nauru.adjacency()) == 6);
}

TEST_CASE("generalized petersen") {
    Graph pet = generalized_petersen(5, 2);
    CHECK(pet.n() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(girth(pet) == 5);
    Graph gp = generalized_petersen(12, 4);
    CHECK(gp.n() == 24);
    CHECK(gp.edge_count() == 36);
    Graph prism = generalized_petersen(3, 1);
    CHECK(prism.n() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK_THROWS(generalized_petersen(2, 1));
    CHECK_THROWS(generalized_petersen(10, 5));  // k >= m/2
}

TEST_CASE("multi-source distances") {
    Graph c6 = from_lcf_string("[3]^6");  // not a cycle; build one explicitly
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    Graph cyc = from_edge_list(6, e);
    auto d = distances_from(cyc, VertexSubset{{0}});
    CHECK(d == std::vector<int>{0, 1, 2, 3, 2, 1});

    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto z = distances_from(cyc, VertexSubset{all});
    CHECK(std::all_of(z.begin(), z.end(), [](int x) { return x == 0; }));

    // this known design dominates its graph at radius 1
    Graph nauru = catalog_get("nauru");
    auto nd = distances_from(nauru, VertexSubset{{6, 9, 13, 16, 20, 23}});
    CHECK(*std::max_element(nd.begin(), nd.end()) == 1);
}

TEST_CASE("distance gradient along edges") {
    Graph g = catalog_get("pappus");
    auto d = distances_from(g, VertexSubset{{0, 7}});
    for (auto [u, v] : g.edges()) CHECK(std::abs(d[u] - d[v]) <= 1);
}

TEST_CASE("pairwise distance sums") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
    Graph cyc = from_edge_list(6, e);
    CHECK(pairwise_distance_sum(cyc, VertexSubset{{2}}) == 0);
    CHECK(pairwise_distance_sum(cyc, VertexSubset{{0, 3}}) == 6);

    Graph pet = generalized_petersen(5, 2);
    int u = 0, v = pet.neighbors(0).front();
    CHECK(pairwise_distance_sum(pet, VertexSubset::of({u, v}, 10)) == 2);
}

TEST_CASE("pairwise distance sum is automorphism invariant") {
    // v -> v+6 (mod 24) preserves the period-6 chord structure
    Graph g = catalog_get("nauru");
    auto pi = [&](int v) { return (v + 6) % 24; };
    for (auto [u, v] : g.edges()) CHECK(g.has_edge(pi(u), pi(v)));

    SplitMix64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::set<int> s;
        while (s.size() < 5) s.insert(static_cast<int>(rng.below(24)));
        std::vector<int> w(s.begin(), s.end()), w2;
        for (int x : w) w2.push_back(pi(x));
        CHECK(pairwise_distance_sum(g, VertexSubset::of(w, 24)) ==
              pairwise_distance_sum(g, VertexSubset::of(w2, 24)));
    }
}

TEST_CASE("edge list text parsing") {
    Graph g = parse_edge_list_text("# comment\n3 3\n0 1\n1 2\n2 0\n");
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK_THROWS(parse_edge_list_text("3 5\n0 1\n"));  // count mismatch
    CHECK_THROWS(parse_edge_list_text(""));
}
