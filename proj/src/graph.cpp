#include "gdesign/graph.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gdesign {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_regular() const { return regularity() >= 0; }

int Graph::regularity() const {
    if (n_ == 0) return -1;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return -1;
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSubset VertexSubset::of(std::vector<int> vs, int n) {
    if (vs.empty()) throw std::invalid_argument("vertex subset must be non-empty");
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("vertex subset has duplicates");
    if (vs.front() < 0 || vs.back() >= n)
        throw std::invalid_argument("vertex index out of range");
    return VertexSubset{std::move(vs)};
}

bool VertexSubset::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                     bool allow_disconnected) {
    if (n <= 0) throw std::invalid_argument("vertex count must be positive");
    std::vector<std::set<int>> nb(n);
    long m = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge index out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (nb[u].insert(v).second) {
            nb[v].insert(u);
            ++m;
        }
    }
    Graph g;
    g.n_ = n;
    g.edge_count_ = m;
    g.adj_.resize(n);
    for (int v = 0; v < n; ++v) g.adj_[v].assign(nb[v].begin(), nb[v].end());
    if (!allow_disconnected && !is_connected(g))
        throw std::invalid_argument("graph is disconnected (pass the override to allow)");
    return g;
}

Graph parse_edge_list_text(std::string_view text, bool allow_disconnected) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) throw std::invalid_argument("edge list: expected two integers per line");
        if (n < 0) {
            n = static_cast<int>(a);
            m = b;
        } else {
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header line");
    if (m >= 0 && m != static_cast<long>(edges.size()))
        throw std::invalid_argument("edge list: header edge count does not match body");
    return from_edge_list(n, edges, allow_disconnected);
}

Graph load_edge_list_file(const std::string& path, bool allow_disconnected) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open edge list file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_edge_list_text(ss.str(), allow_disconnected);
}

namespace {
constexpr int kG6Off = 63;
}

Graph from_graph6(std::string_view text, bool allow_disconnected) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    size_t pos = 0;
    long n;
    if (text[0] == 126) {  // '~' extension
        if (text.size() >= 4 && text[1] != 126) {
            n = 0;
            for (int i = 1; i <= 3; ++i) {
                int c = text[i] - kG6Off;
                if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad size byte");
                n = (n << 6) | c;
            }
            pos = 4;
        } else {
            throw std::invalid_argument("graph6: unsupported size encoding");
        }
    } else {
        n = text[0] - kG6Off;
        if (n < 1 || n > 62) throw std::invalid_argument("graph6: malformed header");
        pos = 1;
    }
    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != nbytes)
        throw std::invalid_argument("graph6: length mismatch");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = text[pos + bit / 6] - kG6Off;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad data byte");
            if (c >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    return from_edge_list(static_cast<int>(n), edges, allow_disconnected);
}

std::string to_graph6(const Graph& g) {
    long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Off));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Off));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Off));
        out.push_back(static_cast<char>((n & 63) + kG6Off));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + kG6Off));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + kG6Off));
    return out;
}

Graph from_lcf(std::span<const int> code, int repeats) {
    if (code.empty() || repeats <= 0) throw std::invalid_argument("lcf: empty code");
    long n = static_cast<long>(code.size()) * repeats;
    if (n % 2 != 0 || n < 4) throw std::invalid_argument("lcf: vertex count must be even and >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        long off = code[i % code.size()] % n;
        long j = ((i + off) % n + n) % n;
        if (j == i || j == (i + 1) % n || j == (i + n - 1) % n)
            throw std::invalid_argument("lcf: chord collides with cycle edge");
        edges.emplace_back(i, static_cast<int>(j));
    }
    Graph g = from_edge_list(static_cast<int>(n), edges, false);
    if (g.regularity() != 3)
        throw std::invalid_argument("lcf: duplicate chord (graph not cubic)");
    return g;
}

Graph from_lcf_string(std::string_view s) {
    auto fail = [] { throw std::invalid_argument("lcf: expected \"[a,b,...]^r\""); };
    size_t lb = s.find('['), rb = s.find(']');
    if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb) fail();
    std::vector<int> code;
    std::istringstream in{std::string(s.substr(lb + 1, rb - lb - 1))};
    std::string tok;
    while (std::getline(in, tok, ',')) code.push_back(std::stoi(tok));
    int repeats = 1;
    size_t caret = s.find('^', rb);
    if (caret != std::string_view::npos) repeats = std::stoi(std::string(s.substr(caret + 1)));
    return from_lcf(code, repeats);
}

Graph generalized_petersen(int m, int k) {
    if (m < 3 || k < 1 || 2 * k >= m)
        throw std::invalid_argument("generalized petersen: need m >= 3 and 1 <= k < m/2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, (i + 1) % m);       // outer cycle
        edges.emplace_back(i, m + i);             // spoke
        edges.emplace_back(m + i, m + (i + k) % m);  // inner star polygon
    }
    return from_edge_list(2 * m, edges, false);
}

std::vector<int> distances_from(const Graph& g, const VertexSubset& sources) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int s : sources.members) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

long pairwise_distance_sum(const Graph& g, const VertexSubset& s) {
    long total = 0;
    for (int src : s.members) {
        auto d = distances_from(g, VertexSubset{{src}});
        for (int t : s.members) total += d[t];
    }
    return total;
}

int girth(const Graph& g) {
    int best = INT_MAX;
    std::vector<int> dist(g.n()), par(g.n());
    for (int r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        dist[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    q.push(v);
                } else if (v != par[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

int diameter(const Graph& g) {
    int d = 0;
    for (int r = 0; r < g.n(); ++r) {
        auto dist = distances_from(g, VertexSubset{{r}});
        d = std::max(d, *std::max_element(dist.begin(), dist.end()));
    }
    return d;
}

int eccentricity(const Graph& g, const VertexSubset& s) {
    auto dist = distances_from(g, s);
    return *std::max_element(dist.begin(), dist.end());
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    auto dist = distances_from(g, VertexSubset{{0}});
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

}  // namespace gdesign
