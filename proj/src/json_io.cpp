#include "gdesign/json_io.hpp"

#include <sstream>

namespace gdesign {

json spectrum_to_json(const Spectrum& s, bool include_eigenvectors) {
    json j;
    j["n"] = s.n;
    j["eigenvalues"] = std::vector<double>(s.eigenvalues.data(), s.eigenvalues.data() + s.n);
    j["frequencies"] = std::vector<double>(s.frequency.data(), s.frequency.data() + s.n);
    j["ordering"] = s.ordering;
    json classes = json::array();
    for (const auto& c : s.classes)
        classes.push_back({{"frequency", c.frequency},
                           {"members", c.members},
                           {"dimension", c.dimension()}});
    j["classes"] = classes;
    j["degree_weighted_basis"] = s.degree_weighted_basis;
    j["clustering_ambiguity"] = s.clustering_ambiguity;
    if (include_eigenvectors) {
        json vecs = json::array();
        for (int i = 0; i < s.n; ++i)
            vecs.push_back(std::vector<double>(s.eigenvectors.col(i).data(),
                                               s.eigenvectors.col(i).data() + s.n));
        j["eigenvectors"] = vecs;
    }
    return j;
}

json certificate_to_json(const BoundCertificate& cert) {
    json checks = json::array();
    for (const auto& rc : cert.checks)
        checks.push_back({{"radius", rc.radius},
                          {"observed", rc.observed},
                          {"bound_general", rc.bounds.general},
                          {"bound_equal", rc.bounds.equal},
                          {"bound_sharp", rc.bounds.sharp},
                          {"pass_general", rc.pass_general},
                          {"pass_equal", rc.pass_equal},
                          {"pass_sharp", rc.pass_sharp}});
    return json{{"lambda", cert.lambda},
                {"all_pass", cert.all_pass},
                {"vacuous", cert.vacuous},
                {"checks", checks}};
}

json design_report_to_json(const std::string& graph_name, const Design& d,
                           const DesignReport& rep, const BoundCertificate* cert) {
    json j;
    j["graph"] = graph_name;
    j["subset"] = d.subset.members;
    j["weights"] = d.weights;
    j["equal_weights"] = d.equal_weights;
    j["K"] = rep.strength_K;
    j["lambda_star"] = rep.lambda_star;
    j["class_residuals"] = rep.class_residuals;
    j["integrated_boundary"] = rep.integrated_boundary;
    j["failing_dimension"] = rep.failing_dimension;
    if (rep.failing_class)
        j["failing_class"] = *rep.failing_class;
    else
        j["failing_class"] = nullptr;
    j["all_weights_positive"] = rep.all_weights_positive;
    j["degree_weighted_basis"] = rep.degree_weighted_basis;
    if (cert) j["certificate"] = certificate_to_json(*cert);
    return j;
}

json search_result_to_json(const std::string& graph_name, const SearchResult& res) {
    json wit = json::array();
    for (const auto& w : res.witnesses) wit.push_back(w.members);
    return json{{"graph", graph_name},
                {"method", res.method},
                {"best_K", res.best_K},
                {"witnesses", wit},
                {"subsets_examined", res.subsets_examined},
                {"seed", res.seed}};
}

json weighted_solution_to_json(const std::string& graph_name, const WeightedSolution& sol) {
    return json{{"graph", graph_name},
                {"subset", sol.subset.members},
                {"eigen_indices", sol.eigen_indices},
                {"weights", sol.weights},
                {"residual", sol.residual},
                {"all_weights_positive", sol.all_weights_positive}};
}

std::string graph_to_dot(const Graph& g, const VertexSubset* design) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    if (design)
        for (int v : design->members)
            out << "  " << v << " [peripheries=2, style=bold];\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace gdesign
