#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynamo/bits.hpp"

namespace dynamo {

/// Structural problem with a graph: loop, duplicate edge, out-of-range
/// endpoint, disconnected input, infeasible generator parameters.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list text.
class ParseError : public GraphError {
public:
    using GraphError::GraphError;
};

/// Simple undirected connected graph over nodes 0..n-1. Immutable after
/// construction, so instances can be shared freely between threads.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and one
/// bit row per node for the counting done inside the simulation loop.
class Graph {
public:
    Graph(int node_count, std::vector<std::pair<int, int>> edge_list);

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    const NodeSet& adjacency_row(int v) const { return rows_[v]; }
    bool has_edge(int u, int v) const { return u != v && rows_[u].test(v); }

    /// Normalized edge list: u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int min_degree() const { return min_degree_; }
    int max_degree() const { return max_degree_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    /// Edge-list document: "<n> <m>" then one "<u> <v>" line per edge.
    std::string serialize() const;

    /// Parses the edge-list format; '#' lines are comments. Validates
    /// simplicity, ranges and connectivity.
    static Graph parse(std::string_view text);
    static Graph load(std::istream& in);
    static Graph load_file(const std::string& path);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<NodeSet> rows_;
    int min_degree_ = 0;
    int max_degree_ = 0;
};

/// |∂(a)|: number of edges with exactly one endpoint in a.
int edge_boundary(const Graph& g, const NodeSet& a);

/// Two-coloring (U, W) with node 0 in U, or nullopt if g is not bipartite.
std::optional<std::pair<NodeSet, NodeSet>> bipartition(const Graph& g);

/// A simple odd cycle, as the closed node sequence without the repeated
/// endpoint. Throws GraphError if g is bipartite.
std::vector<int> find_odd_cycle(const Graph& g);

}  // namespace dynamo
