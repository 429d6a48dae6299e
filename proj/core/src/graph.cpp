#include "dynamo/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>

namespace dynamo {

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edge_list) : n_(node_count) {
    if (n_ <= 0) throw GraphError("graph needs at least one node");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw GraphError("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    const auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
    if (dup != edge_list.end())
        throw GraphError("duplicate edge " + std::to_string(dup->first) + " " +
                         std::to_string(dup->second));
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    rows_.assign(n_, NodeSet(n_));
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        rows_[u].add(v);
        rows_[v].add(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    min_degree_ = n_ > 0 ? n_ : 0;
    max_degree_ = 0;
    for (int v = 0; v < n_; ++v) {
        min_degree_ = std::min(min_degree_, degree(v));
        max_degree_ = std::max(max_degree_, degree(v));
    }

    // Connectivity is required by everything downstream; check it once here.
    std::vector<char> seen(n_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    if (reached != n_) throw GraphError("graph is disconnected");
}

std::string Graph::serialize() const {
    std::string out = std::to_string(n_) + " " + std::to_string(edge_count()) + "\n";
    for (const auto& [u, v] : edges_)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load(in);
}

Graph Graph::load(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0)
                throw ParseError("line " + std::to_string(line_no) + ": expected '<n> <m>'");
            edges.reserve(m);
            continue;
        }
        int u, v;
        if (!(fields >> u >> v))
            throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v>'");
        std::string extra;
        if (fields >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": trailing tokens");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("empty edge-list document");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

Graph Graph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load(in);
}

int edge_boundary(const Graph& g, const NodeSet& a) {
    // Each boundary edge is counted once, from its endpoint inside a.
    int boundary = 0;
    for (int v : a.to_vector())
        boundary += g.degree(v) - intersection_size(g.adjacency_row(v), a);
    return boundary;
}

namespace {

// BFS 2-coloring. Returns colors (0/1 per node) and, when non-bipartite,
// the first conflicting edge in edge-list order plus the BFS parents.
struct TwoColoring {
    std::vector<int> color;
    std::vector<int> parent;
    std::vector<int> depth;
    std::optional<std::pair<int, int>> conflict;
};

TwoColoring two_color(const Graph& g) {
    const int n = g.node_count();
    TwoColoring tc{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0), {}};
    std::queue<int> frontier;
    tc.color[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int w : g.neighbors(u)) {
            if (tc.color[w] < 0) {
                tc.color[w] = 1 - tc.color[u];
                tc.parent[w] = u;
                tc.depth[w] = tc.depth[u] + 1;
                frontier.push(w);
            }
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (tc.color[u] == tc.color[v]) {
            tc.conflict = {u, v};
            break;
        }
    }
    return tc;
}

}  // namespace

std::optional<std::pair<NodeSet, NodeSet>> bipartition(const Graph& g) {
    const auto tc = two_color(g);
    if (tc.conflict) return std::nullopt;
    NodeSet u(g.node_count()), w(g.node_count());
    for (int v = 0; v < g.node_count(); ++v)
        (tc.color[v] == 0 ? u : w).add(v);
    return std::make_pair(std::move(u), std::move(w));
}

std::vector<int> find_odd_cycle(const Graph& g) {
    const auto tc = two_color(g);
    if (!tc.conflict) throw GraphError("graph is bipartite, no odd cycle");
    const auto [a, b] = *tc.conflict;

    // Walk both endpoints up the BFS tree to their lowest common ancestor;
    // the two tree paths plus the conflicting edge form a simple odd cycle.
    std::vector<int> up_a, up_b;
    int x = a, y = b;
    while (tc.depth[x] > tc.depth[y]) {
        up_a.push_back(x);
        x = tc.parent[x];
    }
    while (tc.depth[y] > tc.depth[x]) {
        up_b.push_back(y);
        y = tc.parent[y];
    }
    while (x != y) {
        up_a.push_back(x);
        x = tc.parent[x];
        up_b.push_back(y);
        y = tc.parent[y];
    }
    std::vector<int> cycle = up_a;  // a .. child of lca
    cycle.push_back(x);             // lca
    for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) cycle.push_back(*it);  // .. b
    return cycle;
}

}  // namespace dynamo
