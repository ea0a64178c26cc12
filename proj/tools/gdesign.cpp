// gdesign: compute, verify, search and certify graphical designs.
#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gdesign/catalog.hpp"
#include "gdesign/json_io.hpp"
#include "gdesign/reproduce.hpp"

using namespace gdesign;

namespace {

struct GraphSource {
    std::string catalog, edgelist, graph6_path, lcf;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--graph", catalog, "catalog graph name");
        auto* b = cmd->add_option("--edgelist", edgelist, "edge-list file (n m header)");
        auto* c = cmd->add_option("--graph6", graph6_path, "graph6 file, one graph per line");
        auto* d = cmd->add_option("--lcf", lcf, "LCF string, e.g. [5,-9,7,-7,9,-5]^4");
        a->excludes(b)->excludes(c)->excludes(d);
        b->excludes(c)->excludes(d);
        c->excludes(d);
    }

    std::pair<Graph, std::string> load() const {
        if (!catalog.empty()) return {catalog_get(catalog), catalog};
        if (!edgelist.empty()) return {load_edge_list_file(edgelist), edgelist};
        if (!graph6_path.empty()) {
            std::ifstream f(graph6_path);
            if (!f) throw std::runtime_error("cannot open " + graph6_path);
            std::string line;
            std::getline(f, line);
            return {from_graph6(line), graph6_path};
        }
        if (!lcf.empty()) return {from_lcf_string(lcf), "lcf:" + lcf};
        throw CLI::ValidationError("exactly one graph source is required "
                                   "(--graph/--edgelist/--graph6/--lcf)");
    }
};

std::vector<int> parse_subset(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(path);
        f << j.dump(2) << "\n";
    }
}

void maybe_dot(const Graph& g, const VertexSubset* w, const std::string& path) {
    if (path.empty()) return;
    std::ofstream f(path);
    f << graph_to_dot(g, w);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphical designs: quadrature subsets of graph eigenvectors"};
    app.require_subcommand(1);

    double eps_eig = kDefaultEpsEig, eps_deg = kDefaultEpsDeg, eps_int = kDefaultEpsInt;
    app.add_option("--eps-eig", eps_eig, "eigensolver tolerance")->capture_default_str();
    app.add_option("--eps-deg", eps_deg, "eigenvalue-class gap tolerance")
        ->capture_default_str();
    app.add_option("--eps-int", eps_int, "integration (residual) tolerance, relative")
        ->capture_default_str();

    std::string json_path, dot_path;
    app.add_option("--json", json_path, "write the report to this file instead of stdout");
    app.add_option("--dot", dot_path, "also write a DOT drawing with design vertices marked");

    // catalog
    auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in graphs");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "export eigenvalues and classes");
    GraphSource src_spectrum;
    src_spectrum.attach(cmd_spectrum);
    bool with_vecs = false;
    cmd_spectrum->add_flag("--eigenvectors", with_vecs, "include eigenvectors (large)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "strength report for a given design");
    GraphSource src_verify;
    src_verify.attach(cmd_verify);
    std::string subset_csv, weights_csv;
    bool equal_flag = false, allow_nonreg = false;
    cmd_verify->add_option("--subset", subset_csv, "0-based comma-separated vertices")
        ->required();
    cmd_verify->add_flag("--equal-weights", equal_flag, "use weights 1/|W|");
    cmd_verify->add_option("--weights", weights_csv, "comma-separated weights summing to 1");
    cmd_verify->add_flag("--allow-nonregular", allow_nonreg,
                         "evaluate the Theorem on a non-regular graph anyway");

    // search
    auto* cmd_search = app.add_subcommand("search", "find designs of a given size");
    GraphSource src_search;
    src_search.attach(cmd_search);
    std::string method = "brute";
    int size = 0, steps = -1, max_iters = -1, workers = 0;
    std::uint64_t seed = 1, budget = kDefaultBudget;
    cmd_search->add_option("method", method, "brute | distance | heat")->required();
    cmd_search->add_option("--size", size, "subset cardinality")->required();
    cmd_search->add_option("--seed", seed, "RNG seed (heuristics)")->capture_default_str();
    cmd_search->add_option("--steps", steps, "diffusion steps (heat; default ceil(diam/2))");
    cmd_search->add_option("--max-iters", max_iters, "sweeps (distance) or restarts (heat)");
    cmd_search->add_option("--budget", budget, "max subsets for brute force")
        ->capture_default_str();
    cmd_search->add_option("--workers", workers, "brute-force worker threads (0 = auto)");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "growth profile and Theorem certificate");
    GraphSource src_bound;
    src_bound.attach(cmd_bound);
    std::string bsubset_csv, bweights_csv;
    bool ballow_nonreg = false;
    double lambda_override = -1.0;
    cmd_bound->add_option("--subset", bsubset_csv, "0-based comma-separated vertices")
        ->required();
    cmd_bound->add_option("--weights", bweights_csv, "comma-separated weights summing to 1");
    cmd_bound->add_flag("--allow-nonregular", ballow_nonreg, "override the regularity gate");
    cmd_bound->add_option("--lambda", lambda_override,
                          "evaluate bounds at this lambda instead of the verified one");

    // weights
    auto* cmd_weights = app.add_subcommand(
        "weights", "solve quadrature weights / find a weighted minor design");
    GraphSource src_weights;
    src_weights.attach(cmd_weights);
    std::string wsubset_csv, targets_csv;
    int minor_k = 0;
    cmd_weights->add_option("--subset", wsubset_csv, "vertices for an explicit solve");
    cmd_weights->add_option("--targets", targets_csv, "eigen indices for an explicit solve");
    cmd_weights->add_option("--size", minor_k, "find a k-vertex weighted design");

    // reproduce
    auto* cmd_reproduce =
        app.add_subcommand("reproduce", "re-run the reference reproduction suite");
    int rep_workers = 0;
    cmd_reproduce->add_option("--workers", rep_workers, "brute-force worker threads");

    // global options (--json, --dot, tolerances) remain usable after the
    // subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (*cmd_catalog) {
            json rows = json::array();
            for (const auto& e : catalog_entries()) {
                catalog_get(e.name);  // runs the invariant gate
                rows.push_back({{"name", e.name},
                                {"source", e.source},
                                {"n", e.n},
                                {"m", e.m},
                                {"degree", e.degree},
                                {"girth", e.girth}});
            }
            emit(rows, json_path);
        } else if (*cmd_spectrum) {
            auto [g, name] = src_spectrum.load();
            auto s = spectrum_of(g, OperatorKind::kRandomWalk, eps_eig, eps_deg);
            emit(spectrum_to_json(s, with_vecs), json_path);
        } else if (*cmd_verify) {
            auto [g, name] = src_verify.load();
            auto s = spectrum_of(g, OperatorKind::kRandomWalk, eps_eig, eps_deg);
            auto subset = VertexSubset::of(parse_subset(subset_csv), g.n());
            Design d = weights_csv.empty()
                           ? Design::equal(subset)
                           : Design::weighted(subset, [&] {
                                 std::vector<double> w;
                                 std::stringstream ss(weights_csv);
                                 std::string tok;
                                 while (std::getline(ss, tok, ',')) w.push_back(std::stod(tok));
                                 return w;
                             }());
            auto rep = design_strength(s, d, eps_int);
            json j;
            if (d.all_weights_positive() && (g.is_regular() || allow_nonreg)) {
                auto cert = check_theorem(g, s, d, {allow_nonreg, std::nullopt, eps_int});
                j = design_report_to_json(name, d, rep, &cert);
            } else {
                j = design_report_to_json(name, d, rep);
            }
            emit(j, json_path);
            maybe_dot(g, &d.subset, dot_path);
        } else if (*cmd_search) {
            auto [g, name] = src_search.load();
            auto s = spectrum_of(g, OperatorKind::kRandomWalk, eps_eig, eps_deg);
            SearchResult res;
            auto t0 = std::chrono::steady_clock::now();
            if (method == "brute") {
                res = brute_force(g, s, size, eps_int, budget, workers);
            } else if (method == "distance") {
                res = heuristic_distance_search(g, s, size, seed,
                                                max_iters > 0 ? max_iters : 200, eps_int);
            } else if (method == "heat") {
                int st = steps >= 0 ? steps : default_heat_steps(g);
                res = heat_local_search(g, s, size, st, seed,
                                        max_iters > 0 ? max_iters : 20, eps_int);
            } else {
                throw CLI::ValidationError("unknown search method: " + method);
            }
            double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0).count();
            std::cerr << res.subsets_examined << " subsets in " << secs << " s ("
                      << static_cast<long>(res.subsets_examined / std::max(secs, 1e-9))
                      << "/s), best K = " << res.best_K << "\n";
            emit(search_result_to_json(name, res), json_path);
            if (!res.witnesses.empty()) maybe_dot(g, &res.witnesses.front(), dot_path);
        } else if (*cmd_bound) {
            auto [g, name] = src_bound.load();
            auto s = spectrum_of(g, OperatorKind::kRandomWalk, eps_eig, eps_deg);
            auto subset = VertexSubset::of(parse_subset(bsubset_csv), g.n());
            Design d = bweights_csv.empty()
                           ? Design::equal(subset)
                           : Design::weighted(subset, [&] {
                                 std::vector<double> w;
                                 std::stringstream ss(bweights_csv);
                                 std::string tok;
                                 while (std::getline(ss, tok, ',')) w.push_back(std::stod(tok));
                                 return w;
                             }());
            TheoremOptions opts;
            opts.allow_nonregular = ballow_nonreg;
            opts.eps_int = eps_int;
            if (lambda_override >= 0) opts.lambda_override = lambda_override;
            auto cert = check_theorem(g, s, d, opts);
            auto prof = growth_profile(g, d.subset);
            json j = certificate_to_json(cert);
            j["growth_profile"] = prof.size_at_radius;
            j["graph"] = name;
            emit(j, json_path);
            if (!cert.all_pass) return 1;
        } else if (*cmd_weights) {
            auto [g, name] = src_weights.load();
            auto s = spectrum_of(g, OperatorKind::kRandomWalk, eps_eig, eps_deg);
            if (minor_k > 0) {
                auto sol = find_minor_design(s, minor_k);
                emit(weighted_solution_to_json(name, sol), json_path);
            } else if (!wsubset_csv.empty() && !targets_csv.empty()) {
                auto subset = VertexSubset::of(parse_subset(wsubset_csv), g.n());
                auto targets = parse_subset(targets_csv);
                auto w = solve_weights(s, subset, targets);
                if (!w) {
                    std::cerr << "singular minor: no weights for this subset/target pair\n";
                    return 1;
                }
                WeightedSolution sol{subset, targets, *w, 0.0, true};
                for (double x : *w)
                    if (x <= 0) sol.all_weights_positive = false;
                emit(weighted_solution_to_json(name, sol), json_path);
            } else {
                throw CLI::ValidationError(
                    "weights: pass either --size k or --subset plus --targets");
            }
        } else if (*cmd_reproduce) {
            auto results = run_acceptance(std::cerr, rep_workers);
            json j = json::array();
            for (const auto& r : results) {
                std::cout << "criterion " << r.id << ": " << status_name(r.status) << " — "
                          << r.detail << "\n";
                j.push_back({{"criterion", r.id},
                             {"status", status_name(r.status)},
                             {"detail", r.detail},
                             {"data", r.data}});
            }
            if (!json_path.empty()) emit(j, json_path);
            return all_criteria_pass(results) ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
