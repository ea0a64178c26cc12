#pragma once

#include <string>

#include "gdesign/growth.hpp"
#include "gdesign/search.hpp"
#include "gdesign/weighted.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace gdesign {

using json = nlohmann::json;

json spectrum_to_json(const Spectrum& s, bool include_eigenvectors = false);

json design_report_to_json(const std::string& graph_name, const Design& d,
                           const DesignReport& rep,
                           const BoundCertificate* cert = nullptr);

json certificate_to_json(const BoundCertificate& cert);

json search_result_to_json(const std::string& graph_name, const SearchResult& res);

json weighted_solution_to_json(const std::string& graph_name, const WeightedSolution& sol);

// DOT export with design vertices doubly circled
std::string graph_to_dot(const Graph& g, const VertexSubset* design = nullptr);

}  // namespace gdesign
