#pragma once

#include <cstdint>
#include <string>

#include "gdesign/design.hpp"

namespace gdesign {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchResult {
    int best_K = -1;
    std::vector<VertexSubset> witnesses;  // lexicographically sorted, deduplicated
    std::uint64_t subsets_examined = 0;
    std::uint64_t seed = 0;  // heuristics only
    std::string method;
};

// Exact maximum equal-weight strength over all size-subsets, with every
// maximizer. Enumerates combinations in colexicographic order, optionally
// range-partitioned across workers; the merged result is deterministic.
// Throws if C(n, size) exceeds the budget.
SearchResult brute_force(const Graph& g, const Spectrum& s, int size,
                         double eps_int = kDefaultEpsInt,
                         std::uint64_t budget = kDefaultBudget, int workers = 0);

// The distance heuristic: random start, sweeps over members in ascending
// index testing neighbor replacements in ascending index; a replacement that
// strictly increases the total pairwise distance is accepted with probability
// 1/2. A sweep with no improving candidate restarts from a fresh random
// subset (recorded stopping-rule choice); runs for max_iters sweeps total.
// Every subset arising in the process is scored by design_strength.
SearchResult heuristic_distance_search(const Graph& g, const Spectrum& s, int size,
                                       std::uint64_t seed, int max_iters = 200,
                                       double eps_int = kDefaultEpsInt);

struct HeatState {
    Eigen::VectorXd measure;  // (AD^-1)^t sum a_w delta_w
    int steps = 0;
};

// repeated application of AD^-1 via sparse neighbor sums
HeatState diffuse(const Graph& g, const Design& d, int steps);

// Q_t = ||diffuse(g,d,t) - 1/n||_2^2
double heat_objective(const Graph& g, const Design& d, int steps);

// Steepest-descent swap search minimizing Q_steps over equal-weight subsets:
// accepts the best strictly-decreasing (member, non-member) swap until none
// exists, then restarts from a fresh random subset; max_iters restarts.
SearchResult heat_local_search(const Graph& g, const Spectrum& s, int size, int steps,
                               std::uint64_t seed, int max_iters = 20,
                               double eps_int = kDefaultEpsInt);

// default diffusion horizon: half the diameter, rounded up
int default_heat_steps(const Graph& g);

std::uint64_t binomial(int n, int k);  // saturates at uint64 max

}  // namespace gdesign
