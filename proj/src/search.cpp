#include "gdesign/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "gdesign/rng.hpp"

namespace gdesign {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

namespace {

// Flattened per-class eigenvector rows for the hot enumeration loop.
// e_i = (sum_{w in W} phi_i[w]) / k - mean_i; a class fails when
// sum e_i^2 > gate^2.
struct ScanPlan {
    int n = 0;
    std::vector<int> dims;                     // nonconstant classes, frequency order
    std::vector<std::vector<double>> rows;     // rows[j]: dim * n, row-major
    std::vector<std::vector<double>> means;
    std::vector<int> k_before;                 // cumulative dims incl. constant class
    int total_dim = 0;
};

ScanPlan make_plan(const Spectrum& s) {
    ScanPlan p;
    p.n = s.n;
    int cum = s.classes.empty() ? 0 : s.classes[0].dimension();
    for (size_t j = 1; j < s.classes.size(); ++j) {
        const auto& cls = s.classes[j];
        p.dims.push_back(cls.dimension());
        p.k_before.push_back(cum);
        cum += cls.dimension();
        std::vector<double> row(cls.dimension() * s.n);
        std::vector<double> mean(cls.dimension());
        for (int r = 0; r < cls.dimension(); ++r) {
            int idx = cls.members[r];
            for (int v = 0; v < s.n; ++v) row[r * s.n + v] = s.eigenvectors(v, idx);
            mean[r] = s.column_mean[idx];
        }
        p.rows.push_back(std::move(row));
        p.means.push_back(std::move(mean));
    }
    p.total_dim = cum;
    return p;
}

// strength of an equal-weight subset against the plan (same counting rule as
// design_strength, specialized for speed)
int plan_strength(const ScanPlan& p, const int* w, int k, double gate2) {
    for (size_t j = 0; j < p.dims.size(); ++j) {
        const double* rows = p.rows[j].data();
        const double* means = p.means[j].data();
        double r2 = 0.0;
        for (int r = 0; r < p.dims[j]; ++r) {
            const double* phi = rows + r * p.n;
            double sum = 0.0;
            for (int i = 0; i < k; ++i) sum += phi[w[i]];
            double e = sum / k - means[r];
            r2 += e * e;
        }
        if (r2 > gate2) return p.k_before[j] + p.dims[j] - 1;
    }
    return p.total_dim;
}

// combination with colexicographic rank `rank` (c strictly increasing)
void colex_unrank(std::uint64_t rank, int n, int k, int* c) {
    for (int i = k - 1; i >= 0; --i) {
        int v = i;
        for (int x = n - 1; x >= i; --x) {
            if (binomial(x, i + 1) <= rank) {
                v = x;
                break;
            }
        }
        c[i] = v;
        rank -= binomial(v, i + 1);
        n = v;
    }
}

// advance to the colex successor; returns false after the last combination
bool colex_next(int* c, int n, int k) {
    for (int i = 0; i < k; ++i) {
        int limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

}  // namespace

SearchResult brute_force(const Graph& g, const Spectrum& s, int size, double eps_int,
                         std::uint64_t budget, int workers) {
    if (size < 1 || size > g.n()) throw std::invalid_argument("brute_force: bad subset size");
    if (size == g.n()) {  // the uniform design integrates everything
        SearchResult res;
        res.method = "brute";
        res.best_K = g.n();
        res.subsets_examined = 1;
        std::vector<int> all(g.n());
        for (int i = 0; i < g.n(); ++i) all[i] = i;
        res.witnesses.push_back(VertexSubset{std::move(all)});
        return res;
    }
    const std::uint64_t total = binomial(g.n(), size);
    if (total > budget)
        throw std::runtime_error("brute_force: C(n,size) exceeds the budget; raise it or use "
                                 "a heuristic search");
    if (workers <= 0)
        workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::uint64_t>(workers, total));

    const ScanPlan plan = make_plan(s);
    const int n = g.n(), k = size;
    const double mu2 = 1.0 / k - 1.0 / n;
    const double gate2 = eps_int * eps_int * mu2;

    struct Local {
        int best = -1;
        std::vector<std::vector<int>> wit;
    };
    std::vector<Local> locals(workers);
    auto scan_range = [&](int wi, std::uint64_t lo, std::uint64_t hi) {
        std::vector<int> c(k);
        colex_unrank(lo, n, k, c.data());
        Local& L = locals[wi];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            int K = plan_strength(plan, c.data(), k, gate2);
            if (K > L.best) {
                L.best = K;
                L.wit.assign(1, c);
            } else if (K == L.best) {
                L.wit.push_back(c);
            }
            colex_next(c.data(), n, k);
        }
    };

    if (workers == 1) {
        scan_range(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) {
            std::uint64_t lo = total * wi / workers, hi = total * (wi + 1) / workers;
            pool.emplace_back(scan_range, wi, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    SearchResult res;
    res.method = "brute";
    res.subsets_examined = total;
    for (auto& L : locals) res.best_K = std::max(res.best_K, L.best);
    std::vector<std::vector<int>> merged;
    for (auto& L : locals)
        if (L.best == res.best_K)
            merged.insert(merged.end(), L.wit.begin(), L.wit.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (auto& w : merged) res.witnesses.push_back(VertexSubset{std::move(w)});
    return res;
}

namespace {

std::vector<int> sample_subset(SplitMix64& rng, int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        auto j = rng.below(n - i);
        out.push_back(pool[j]);
        pool.erase(pool.begin() + j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// tracks the best strength seen and the witnesses achieving it
struct BestTracker {
    const Spectrum& s;
    double eps_int;
    int best = -1;
    std::set<std::vector<int>> wit;
    std::uint64_t examined = 0;

    void visit(const std::vector<int>& w) {
        ++examined;
        auto rep = design_strength(s, Design::equal(VertexSubset{w}), eps_int);
        if (rep.strength_K > best) {
            best = rep.strength_K;
            wit.clear();
            wit.insert(w);
        } else if (rep.strength_K == best) {
            wit.insert(w);
        }
    }
};

}  // namespace

SearchResult heuristic_distance_search(const Graph& g, const Spectrum& s, int size,
                                       std::uint64_t seed, int max_iters, double eps_int) {
    if (size < 1 || size > g.n())
        throw std::invalid_argument("distance search: bad subset size");
    const int n = g.n();
    // all-pairs distances once
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = distances_from(g, VertexSubset{{v}});
    auto pairdist = [&](const std::vector<int>& w) {
        long t = 0;
        for (int a : w)
            for (int b : w) t += dist[a][b];
        return t;
    };

    SplitMix64 rng(seed);
    BestTracker track{s, eps_int};
    std::vector<int> w = sample_subset(rng, n, size);
    track.visit(w);

    for (int sweep = 0; sweep < max_iters; ++sweep) {
        bool any_improving = false;
        for (int mi = 0; mi < size; ++mi) {
            int v = w[mi];
            long cur = pairdist(w);
            for (int u : g.neighbors(v)) {
                if (std::binary_search(w.begin(), w.end(), u)) continue;
                std::vector<int> w2 = w;
                w2.erase(std::find(w2.begin(), w2.end(), v));
                w2.insert(std::lower_bound(w2.begin(), w2.end(), u), u);
                if (pairdist(w2) <= cur) continue;
                any_improving = true;
                track.visit(w2);
                if (rng.coin()) {
                    w = std::move(w2);
                    break;  // vertex replaced; move on to the next member
                }
            }
        }
        if (!any_improving) {
            // local maximum of the distance sum: restart
            w = sample_subset(rng, n, size);
            track.visit(w);
        }
    }

    SearchResult res;
    res.method = "distance";
    res.seed = seed;
    res.best_K = track.best;
    res.subsets_examined = track.examined;
    for (auto& x : track.wit) res.witnesses.push_back(VertexSubset{x});
    return res;
}

HeatState diffuse(const Graph& g, const Design& d, int steps) {
    if (steps < 0) throw std::invalid_argument("diffuse: steps must be >= 0");
    Eigen::VectorXd x = Eigen::VectorXd::Zero(g.n());
    for (size_t i = 0; i < d.weights.size(); ++i) x[d.subset.members[i]] += d.weights[i];
    Eigen::VectorXd y(g.n());
    for (int t = 0; t < steps; ++t) {
        y.setZero();
        for (int v = 0; v < g.n(); ++v)
            for (int u : g.neighbors(v)) y[v] += x[u] / g.degree(u);
        x.swap(y);
    }
    return HeatState{std::move(x), steps};
}

double heat_objective(const Graph& g, const Design& d, int steps) {
    Eigen::VectorXd x = diffuse(g, d, steps).measure;
    x.array() -= 1.0 / g.n();
    return x.squaredNorm();
}

int default_heat_steps(const Graph& g) { return (diameter(g) + 1) / 2; }

SearchResult heat_local_search(const Graph& g, const Spectrum& s, int size, int steps,
                               std::uint64_t seed, int max_iters, double eps_int) {
    if (size < 1 || size > g.n()) throw std::invalid_argument("heat search: bad subset size");
    const int n = g.n();
    SplitMix64 rng(seed);
    BestTracker track{s, eps_int};
    auto q_of = [&](const std::vector<int>& w) {
        return heat_objective(g, Design::equal(VertexSubset{w}), steps);
    };

    for (int restart = 0; restart < max_iters; ++restart) {
        std::vector<int> w = sample_subset(rng, n, size);
        track.visit(w);
        double q = q_of(w);
        while (true) {
            double best_q = q;
            std::vector<int> best_w;
            for (int v : w) {
                for (int u = 0; u < n; ++u) {
                    if (std::binary_search(w.begin(), w.end(), u)) continue;
                    std::vector<int> w2 = w;
                    w2.erase(std::find(w2.begin(), w2.end(), v));
                    w2.insert(std::lower_bound(w2.begin(), w2.end(), u), u);
                    double q2 = q_of(w2);
                    if (q2 < best_q - 1e-15) {
                        best_q = q2;
                        best_w = std::move(w2);
                    }
                }
            }
            if (best_w.empty()) break;
            w = std::move(best_w);
            q = best_q;
            track.visit(w);
        }
    }

    SearchResult res;
    res.method = "heat";
    res.seed = seed;
    res.best_K = track.best;
    res.subsets_examined = track.examined;
    for (auto& x : track.wit) res.witnesses.push_back(VertexSubset{x});
    return res;
}

}  // namespace gdesign
