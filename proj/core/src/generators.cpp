#include "dynamo/generators.hpp"

#include <algorithm>
#include <string>

namespace dynamo {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(what);
}

}  // namespace

Graph gen_complete(int n) {
    require(n >= 2, "complete graph needs n >= 2");
    EdgeList edges;
    edges.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    EdgeList edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph gen_path(int n) {
    require(n >= 2, "path needs n >= 2");
    EdgeList edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph gen_star(int leaves) {
    require(leaves >= 2, "star needs at least 2 leaves");
    EdgeList edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph gen_clique_with_leaves(int k, int n) {
    require(k >= 2, "clique size must be at least 2");
    require(n >= k && n % k == 0, "clique size must divide the node count");
    const int leaves_each = n / k - 1;
    EdgeList edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    int next = k;
    for (int u = 0; u < k; ++u)
        for (int j = 0; j < leaves_each; ++j) edges.emplace_back(u, next++);
    return Graph(n, std::move(edges));
}

namespace {

// r-regular circulant on nodes base..base+len-1: offsets 1..floor(r/2) on
// both sides, plus the antipodal node when r is odd (len must then be even).
void add_circulant(EdgeList& edges, int base, int len, int r) {
    require(len >= r + 1, "circulant tail too small");
    require(r % 2 == 0 || len % 2 == 0, "odd-degree circulant needs an even tail");
    for (int t = 0; t < len; ++t) {
        for (int s = 1; s <= r / 2; ++s) {
            const int u = base + t, v = base + (t + s) % len;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (r % 2 == 1 && t < len / 2) edges.emplace_back(base + t, base + t + len / 2);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph regular_chain_even(int r, int n) {
    const int block = r + 1;
    const int chain_count = n / block - 1;
    require(chain_count >= 1, "need n >= 2(r+1)");
    const int tail_len = n - chain_count * block;  // always >= r+1
    const int tail_base = chain_count * block;

    EdgeList edges;
    for (int c = 0; c < chain_count; ++c) {
        const int base = c * block;
        for (int i = 0; i < block; ++i)
            for (int j = i + 1; j < block; ++j)
                if (!(i == 0 && j == 1)) edges.emplace_back(base + i, base + j);
        if (c + 1 < chain_count) edges.emplace_back(base + 1, base + block);
    }

    EdgeList tail;
    add_circulant(tail, tail_base, tail_len, r);
    // Reroute one tail edge to close the chain: drop {tail0, tail1} and
    // attach those nodes to the two open chain ends.
    const std::pair<int, int> removed{tail_base, tail_base + 1};
    tail.erase(std::find(tail.begin(), tail.end(), removed));
    edges.insert(edges.end(), tail.begin(), tail.end());
    edges.emplace_back(0, tail_base);                                // v' - v_1^(1)
    edges.emplace_back((chain_count - 1) * block + 1, tail_base + 1);  // u' - v_K^(2)
    return Graph(n, std::move(edges));
}

}  // namespace

Graph gen_regular_chain(int r, int n) {
    require(r >= 3, "construction needs r >= 3");
    if (n % 2 == 0) return regular_chain_even(r, n);

    // Odd n: even construction on n-1 nodes plus one node adjacent to the
    // second gap endpoint of the first r cliques.
    require(n - 1 >= 2 * (r + 1), "need n - 1 >= 2(r+1)");
    const int chain_count = (n - 1) / (r + 1) - 1;
    require(chain_count >= r, "odd variant needs at least r cliques");
    Graph even = regular_chain_even(r, n - 1);
    EdgeList edges = even.edges();
    const int w = n - 1;
    for (int i = 0; i < r; ++i) edges.emplace_back(i * (r + 1) + 1, w);
    return Graph(n, std::move(edges));
}

Graph gen_stable_tight(const Rational& alpha, int n) {
    require(Rational(0) < alpha && alpha < Rational(1), "alpha must be in (0,1)");
    const int clique_size = static_cast<int>((Rational(1) / (Rational(1) - alpha)).ceil());
    require(clique_size + 1 <= n, "need ceil(1/(1-alpha)) + 1 <= n");
    const int path_len = n - clique_size;
    EdgeList edges;
    for (int v = 0; v + 1 < path_len; ++v) edges.emplace_back(v, v + 1);
    for (int u = path_len; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    edges.emplace_back(0, path_len);  // bridge
    return Graph(n, std::move(edges));
}

Graph gen_petersen() {
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph gen_complete_minus_matching(int n) {
    require(n >= 4 && n % 2 == 0, "needs even n >= 4");
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_random_connected(int n, double p, SplitMix64& rng) {
    require(n >= 1, "need n >= 1");
    require(p > 0.0 && p <= 1.0, "edge probability must be in (0,1]");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        EdgeList edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < p) edges.emplace_back(u, v);
        try {
            return Graph(n, std::move(edges));
        } catch (const GraphError&) {
            // disconnected sample; draw again
        }
    }
    throw GraphError("no connected sample found; edge probability too small");
}

Graph gen_random_tree(int n, SplitMix64& rng) {
    require(n >= 1, "need n >= 1");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(rng.below(n));
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    EdgeList edges;
    std::vector<char> used(n, 0);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, x);
                used[leaf] = 1;
                --degree[x];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

}  // namespace dynamo
