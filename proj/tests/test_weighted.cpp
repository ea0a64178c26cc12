#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdesign/catalog.hpp"
#include "gdesign/design.hpp"
#include "gdesign/weighted.hpp"

using namespace gdesign;

namespace {
Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, e);
}
Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edge_list(n, e);
}
std::vector<int> all_of(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}
}  // namespace

TEST_CASE("solve_weights: full system is exactly solvable") {
    Graph g = catalog_get("petersen");
    Spectrum s = spectrum_of(g);
    auto w = solve_weights(s, VertexSubset::of(all_of(10), 10), all_of(10));
    REQUIRE(w);
    double sum = 0;
    for (double x : *w) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    // orthogonality makes the full eigenvector matrix a rotation
    CHECK(eigenbasis_determinant_magnitude(s) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("solve_weights: K3 two-vertex solve against the analytic basis") {
    Graph k3 = complete(3);
    Spectrum s = spectrum_of(k3);
    std::vector<int> targets{s.ordering[0], s.ordering[1]};  // constant + one nonconstant
    auto w = solve_weights(s, VertexSubset::of({0, 1}, 3), targets);
    REQUIRE(w);
    double sum = 0;
    for (double x : *w) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    // verify the quadrature identity directly
    for (int i : targets) {
        double lhs = (*w)[0] * s.eigenvectors(0, i) + (*w)[1] * s.eigenvectors(1, i);
        CHECK(lhs == doctest::Approx(s.column_mean[i]).epsilon(1e-9));
    }
}

TEST_CASE("solve_weights: zero right-hand side yields the zero weights") {
    // on C4 the two frequency-0 eigenvectors have zero mean; vertices {0,1}
    // give a nonsingular minor, so the unique solution is a = 0
    Graph c4 = cycle(4);
    Spectrum s = spectrum_of(c4);
    const auto& kernel = s.classes.back();
    REQUIRE(kernel.dimension() == 2);
    auto w = solve_weights(s, VertexSubset::of({0, 1}, 4), kernel.members);
    REQUIRE(w);
    for (double x : *w) CHECK(std::abs(x) <= 1e-10);
}

TEST_CASE("solve_weights: singular minors are rejected") {
    Graph c4 = cycle(4);
    Spectrum s = spectrum_of(c4);
    // both kernel eigenvectors vanish on one of {0,2} or alternate in sign;
    // the 2x2 minor on an antipodal pair is singular
    const auto& kernel = s.classes.back();
    auto w = solve_weights(s, VertexSubset::of({0, 2}, 4), kernel.members);
    CHECK_FALSE(w);
    CHECK_THROWS(solve_weights(s, VertexSubset::of({0, 1}, 4), {0}));  // size mismatch
}

TEST_CASE("find_minor_design: endpoints") {
    Graph g = catalog_get("petersen");
    Spectrum s = spectrum_of(g);

    auto one = find_minor_design(s, 1);
    CHECK(one.subset.size() == 1);
    REQUIRE(one.eigen_indices.size() == 1);
    CHECK(one.eigen_indices[0] == s.constant_index());
    REQUIRE(one.weights.size() == 1);
    CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-10));

    auto full = find_minor_design(s, 10);
    CHECK(full.subset.size() == 10);
    CHECK(full.residual <= 1e-9);
}

TEST_CASE("find_minor_design: every k on petersen and frucht") {
    for (const char* name : {"petersen", "frucht"}) {
        Spectrum s = spectrum_of(catalog_get(name));
        for (int k = 1; k <= s.n; ++k) {
            auto sol = find_minor_design(s, k);
            CHECK(sol.subset.size() == k);
            CHECK(sol.residual <= 1e-9);
            // weights sum to 1 whenever the constant is among the targets
            bool has_const = false;
            for (int i : sol.eigen_indices) has_const |= i == s.constant_index();
            if (has_const) {
                double sum = 0;
                for (double w : sol.weights) sum += w;
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("full minor design re-verifies through quadrature_residuals") {
    Graph g = catalog_get("petersen");
    Spectrum s = spectrum_of(g);
    auto sol = find_minor_design(s, 10);
    Design d = Design::weighted(sol.subset, sol.weights);
    for (double r : quadrature_residuals(s, d)) CHECK(r <= 1e-8);
    CHECK(design_strength(s, d).strength_K == 10);
}

TEST_CASE("find_minor_design: solutions re-verify by direct substitution") {
    Spectrum s = spectrum_of(catalog_get("nauru"));
    auto sol = find_minor_design(s, 5);
    // direct substitution per target eigenfunction
    for (size_t t = 0; t < sol.eigen_indices.size(); ++t) {
        int i = sol.eigen_indices[t];
        double lhs = 0;
        for (size_t j = 0; j < sol.weights.size(); ++j)
            lhs += sol.weights[j] * s.eigenvectors(sol.subset.members[j], i);
        CHECK(lhs == doctest::Approx(s.column_mean[i]).epsilon(1e-8));
    }
    CHECK_THROWS(find_minor_design(s, 0));
    CHECK_THROWS(find_minor_design(s, 25));
}
