#include "gdesign/catalog.hpp"

#include <cstdlib>
#include <stdexcept>

#ifndef GDESIGN_DATA_DIR
#define GDESIGN_DATA_DIR "data"
#endif

namespace gdesign {

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"nauru", "lcf:[5,-9,7,-7,9,-5]^4", 24, 36, 3, 6},
        {"mcgee", "lcf:[12,7,-7]^8", 24, 36, 3, 7},
        {"frucht", "lcf:[-5,-2,-4,2,5,-2,2,5,-2,-5,4,2]^1", 12, 18, 3, 3},
        {"pappus", "lcf:[5,7,-7,7,-7,-5]^3", 18, 27, 3, 6},
        {"dyck", "lcf:[5,-5,13,-13]^8", 32, 48, 3, 6},
        {"truncated-tetrahedral", "lcf:[2,6,-2]^4", 12, 18, 3, 3},
        {"gp-12-4", "gp:12,4", 24, 36, 3, 3},
        {"petersen", "gp:5,2", 10, 15, 3, 5},
        {"sylvester", "file:sylvester.edges", 36, 90, 5, 5},
        {"wong", "file:wong.edges", 30, 75, 5, 5},
        {"meringer", "file:meringer.edges", 30, 75, 5, 5},
        {"robertson", "file:robertson.edges", 19, 38, 4, 5},
        {"gewirtz", "file:gewirtz.edges", 56, 280, 10, 4},
        {"gosset", "file:gosset.edges", 56, 756, 27, 3},
        {"icosidodecahedral", "file:icosidodecahedral.edges", 30, 60, 4, 3},
        {"24-cell", "file:24-cell.edges", 24, 96, 8, 3},
    };
    return entries;
}

std::string data_dir() {
    if (const char* env = std::getenv("GDESIGN_DATA_DIR")) return env;
    return GDESIGN_DATA_DIR;
}

Graph catalog_get(const std::string& name) {
    for (const auto& e : catalog_entries()) {
        if (e.name != name) continue;
        Graph g;
        if (e.source.starts_with("lcf:")) {
            g = from_lcf_string(e.source.substr(4));
        } else if (e.source.starts_with("gp:")) {
            auto comma = e.source.find(',');
            int m = std::stoi(e.source.substr(3, comma - 3));
            int k = std::stoi(e.source.substr(comma + 1));
            g = generalized_petersen(m, k);
        } else {
            g = load_edge_list_file(data_dir() + "/catalog/" + e.source.substr(5));
        }
        if (g.n() != e.n || g.edge_count() != e.m || g.regularity() != e.degree ||
            girth(g) != e.girth)
            throw std::runtime_error("catalog graph '" + name +
                                     "' failed its invariant gate (order/size/regularity/girth)");
        return g;
    }
    throw std::invalid_argument("unknown catalog graph: " + name);
}

}  // namespace gdesign
