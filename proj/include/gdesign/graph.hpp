#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdesign {

// Immutable simple undirected graph. Vertices are 0-based. Adjacency lists
// are sorted; construction enforces simplicity, symmetry and (by default)
// connectivity. Safe to share across threads once built.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    long edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool has_edge(int u, int v) const;
    bool is_regular() const;
    // degree if regular, -1 otherwise
    int regularity() const;

    // edges as (u,v) with u < v, lexicographically sorted
    std::vector<std::pair<int, int>> edges() const;

    friend Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                                bool allow_disconnected);

private:
    int n_ = 0;
    long edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

struct VertexSubset {
    std::vector<int> members;  // strictly increasing

    static VertexSubset of(std::vector<int> vs, int n);
    int size() const { return static_cast<int>(members.size()); }
    bool contains(int v) const;
};

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                     bool allow_disconnected = false);

// UTF-8 text: first line "n m", then m lines "u v"; '#' starts a comment.
Graph parse_edge_list_text(std::string_view text, bool allow_disconnected = false);
Graph load_edge_list_file(const std::string& path, bool allow_disconnected = false);

// Standard graph6 (6-bit packed upper triangle, offset-63 bytes).
Graph from_graph6(std::string_view text, bool allow_disconnected = false);
std::string to_graph6(const Graph& g);

// Hamiltonian cycle 0-1-...-(n-1)-0 plus chords i -> i + code[i mod len].
Graph from_lcf(std::span<const int> code, int repeats);
// accepts "[5,-9,7,-7,9,-5]^4"
Graph from_lcf_string(std::string_view s);

Graph generalized_petersen(int m, int k);

// exact hop distance to the nearest source (multi-source BFS)
std::vector<int> distances_from(const Graph& g, const VertexSubset& sources);

// sum of d(v_i, v_j) over ordered member pairs
long pairwise_distance_sum(const Graph& g, const VertexSubset& s);

int girth(const Graph& g);       // large sentinel (INT_MAX) for forests
int diameter(const Graph& g);
int eccentricity(const Graph& g, const VertexSubset& s);
bool is_connected(const Graph& g);

}  // namespace gdesign
