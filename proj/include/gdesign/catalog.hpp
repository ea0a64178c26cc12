#pragma once

#include <string>
#include <vector>

#include "gdesign/graph.hpp"

namespace gdesign {

struct CatalogEntry {
    std::string name;
    std::string source;  // "lcf:[...]^r", "gp:m,k" or "file:<name>.edges"
    int n;
    long m;
    int degree;   // regular degree
    int girth;
};

const std::vector<CatalogEntry>& catalog_entries();

// Builds the named graph and validates it against the recorded invariants
// (order, size, regularity, girth). Throws on unknown name or invariant
// mismatch.
Graph catalog_get(const std::string& name);

// Directory holding the shipped edge-list files. Defaults to the compiled-in
// source path; override with the GDESIGN_DATA_DIR environment variable.
std::string data_dir();

}  // namespace gdesign
