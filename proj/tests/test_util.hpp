#pragma once

#include <algorithm>
#include <vector>

#include "dynamo/certify.hpp"
#include "dynamo/generators.hpp"
#include "dynamo/graph.hpp"

namespace testutil {

using namespace dynamo;

// Boundary size straight from the definition, independent of the library's
// adjacency-row counting.
inline int brute_edge_boundary(const Graph& g, const NodeSet& a) {
    int count = 0;
    for (const auto& [u, v] : g.edges())
        if (a.test(u) != a.test(v)) ++count;
    return count;
}

inline int edges_inside(const Graph& g, const NodeSet& a) {
    int count = 0;
    for (const auto& [u, v] : g.edges())
        if (a.test(u) && a.test(v)) ++count;
    return count;
}

// Closed node sequence: all distinct, consecutive pairs adjacent, last
// adjacent to first, length >= 3.
inline bool is_simple_cycle(const Graph& g, const std::vector<int>& nodes) {
    if (nodes.size() < 3) return false;
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (!g.has_edge(nodes[i], nodes[(i + 1) % nodes.size()])) return false;
    return true;
}

// Exhaustive Hamiltonian-cycle test, for small graphs only.
inline bool hamiltonian_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& used) {
    const int n = g.node_count();
    if (static_cast<int>(path.size()) == n) return g.has_edge(path.back(), path.front());
    for (int v : g.neighbors(path.back())) {
        if (used[v]) continue;
        used[v] = 1;
        path.push_back(v);
        if (hamiltonian_dfs(g, path, used)) return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

inline bool has_hamiltonian_cycle(const Graph& g) {
    std::vector<int> path{0};
    std::vector<char> used(g.node_count(), 0);
    used[0] = 1;
    return hamiltonian_dfs(g, path, used);
}

// Small mixed corpus for property tests.
inline std::vector<Graph> small_corpus() {
    std::vector<Graph> graphs;
    for (int n : {3, 4, 5, 6, 8}) graphs.push_back(gen_cycle(n));
    for (int n : {4, 5, 6}) graphs.push_back(gen_complete(n));
    graphs.push_back(gen_star(5));
    graphs.push_back(gen_path(6));
    graphs.push_back(gen_clique_with_leaves(3, 9));
    graphs.push_back(gen_petersen());
    SplitMix64 rng(0x517E);
    for (int i = 0; i < 6; ++i) graphs.push_back(gen_random_connected(5 + i, 0.4, rng));
    return graphs;
}

inline NodeSet random_subset(int n, SplitMix64& rng, bool allow_empty = false) {
    NodeSet s(n);
    do {
        s = NodeSet(n);
        for (int v = 0; v < n; ++v)
            if (rng.next() & 1) s.add(v);
    } while (!allow_empty && s.empty());
    return s;
}

}  // namespace testutil
