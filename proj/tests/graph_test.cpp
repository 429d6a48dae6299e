#include <doctest.h>

#include "dynamo/generators.hpp"
#include "dynamo/graph.hpp"
#include "test_util.hpp"

using namespace dynamo;
using namespace testutil;

TEST_SUITE_BEGIN("graph");

TEST_CASE("edge-list parsing") {
    const Graph g = Graph::parse("3 2\n0 1\n1 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));

    SUBCASE("comments and blank lines are ignored") {
        const Graph h = Graph::parse("# path\n3 2\n\n0 1\n# middle\n1 2\n");
        CHECK(h == g);
    }
}

TEST_CASE("parse and structural errors") {
    CHECK_THROWS_AS(Graph::parse("2 1\n0 0\n"), GraphError);           // self-loop
    CHECK_THROWS_AS(Graph::parse("4 2\n0 1\n2 3\n"), GraphError);      // disconnected
    CHECK_THROWS_AS(Graph::parse("2 2\n0 1\n0 1\n"), GraphError);      // duplicate
    CHECK_THROWS_AS(Graph::parse("2 1\n0 5\n"), GraphError);           // out of range
    CHECK_THROWS_AS(Graph::parse("2 1\n0\n"), ParseError);             // short line
    CHECK_THROWS_AS(Graph::parse("2 1\n0 1 9\n"), ParseError);         // trailing token
    CHECK_THROWS_AS(Graph::parse("garbage\n"), ParseError);
    CHECK_THROWS_AS(Graph::parse(""), ParseError);
    CHECK_THROWS_AS(Graph::parse("3 2\n0 1\n"), ParseError);           // edge count off
}

TEST_CASE("edge boundary") {
    const Graph k4 = gen_complete(4);
    const NodeSet pair = NodeSet::of(4, {0, 1});
    CHECK(edge_boundary(k4, pair) == 4);
    CHECK(edge_boundary(k4, pair) == brute_edge_boundary(k4, pair));

    const Graph c5 = gen_cycle(5);
    CHECK(edge_boundary(c5, NodeSet::of(5, {0})) == 2);
    CHECK(edge_boundary(c5, NodeSet::full(5)) == 0);
    CHECK(edge_boundary(k4, NodeSet::full(4)) == 0);
}

TEST_CASE("boundary identity over random subsets") {
    SplitMix64 rng(0xB0A7);
    for (const Graph& g : small_corpus()) {
        for (int i = 0; i < 20; ++i) {
            const NodeSet a = random_subset(g.node_count(), rng, true);
            NodeSet rest = NodeSet::full(g.node_count()).minus(a);
            CHECK(edge_boundary(g, a) == brute_edge_boundary(g, a));
            CHECK(edge_boundary(g, a) + edges_inside(g, a) + edges_inside(g, rest) ==
                  g.edge_count());
        }
    }
}

TEST_CASE("bipartition") {
    const auto c4 = bipartition(gen_cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->first == NodeSet::of(4, {0, 2}));
    CHECK(c4->second == NodeSet::of(4, {1, 3}));

    CHECK(!bipartition(gen_cycle(5)).has_value());

    const auto star = bipartition(gen_star(5));
    REQUIRE(star.has_value());
    CHECK(star->first == NodeSet::of(6, {0}));
    CHECK(star->second.count() == 5);
}

TEST_CASE("odd cycle extraction") {
    const Graph c5 = gen_cycle(5);
    const auto cycle5 = find_odd_cycle(c5);
    CHECK(cycle5.size() == 5);
    CHECK(is_simple_cycle(c5, cycle5));

    const Graph k4 = gen_complete(4);
    const auto tri = find_odd_cycle(k4);
    CHECK(tri.size() == 3);
    CHECK(is_simple_cycle(k4, tri));  // mutually adjacent triple

    CHECK_THROWS_AS(find_odd_cycle(gen_cycle(6)), GraphError);
}

TEST_CASE("bipartition exists iff no odd cycle") {
    for (const Graph& g : small_corpus()) {
        const bool bip = bipartition(g).has_value();
        if (bip) {
            CHECK_THROWS_AS(find_odd_cycle(g), GraphError);
        } else {
            CHECK(is_simple_cycle(g, find_odd_cycle(g)));
            CHECK(find_odd_cycle(g).size() % 2 == 1);
        }
    }
}

TEST_CASE("basic generators") {
    CHECK(gen_complete(4).edge_count() == 6);

    const Graph c5 = gen_cycle(5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.min_degree() == 2);
    CHECK(c5.max_degree() == 2);

    const Graph s4 = gen_star(4);
    CHECK(s4.node_count() == 5);
    CHECK(s4.degree(0) == 4);
    CHECK(s4.max_degree() == 4);

    CHECK_THROWS_AS(gen_cycle(2), GraphError);
    CHECK_THROWS_AS(gen_complete(1), GraphError);
    CHECK_THROWS_AS(gen_star(1), GraphError);
}

TEST_CASE("clique with leaves") {
    const Graph g = gen_clique_with_leaves(4, 16);
    CHECK(g.node_count() == 16);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 6);  // (k-1) + n/k - 1
    int leaves = 0;
    for (int v = 0; v < 16; ++v)
        if (g.degree(v) == 1) ++leaves;
    CHECK(leaves == 12);  // k * (n/k - 1)

    CHECK(gen_clique_with_leaves(4, 4) == gen_complete(4));
    CHECK_THROWS_AS(gen_clique_with_leaves(3, 7), GraphError);
}

TEST_CASE("regular chain") {
    const Graph g = gen_regular_chain(3, 18);
    CHECK(g.node_count() == 18);
    CHECK(g.edge_count() == 27);
    CHECK(g.min_degree() == 3);
    CHECK(g.max_degree() == 3);

    const Graph odd = gen_regular_chain(3, 17);
    CHECK(odd.node_count() == 17);
    int deg4 = 0, deg3 = 0;
    for (int v = 0; v < 17; ++v) {
        if (odd.degree(v) == 4) ++deg4;
        if (odd.degree(v) == 3) ++deg3;
    }
    CHECK(deg4 == 3);
    CHECK(deg3 == 14);

    // n = 8 is feasible: one clique block plus a tail of 4 nodes.
    const Graph small = gen_regular_chain(3, 8);
    CHECK(small.min_degree() == 3);
    CHECK(small.max_degree() == 3);

    CHECK_THROWS_AS(gen_regular_chain(2, 10), GraphError);  // r < 3
    CHECK_THROWS_AS(gen_regular_chain(3, 6), GraphError);   // too few blocks
    CHECK_THROWS_AS(gen_regular_chain(3, 13), GraphError);  // odd variant needs r blocks

    for (const int r : {3, 4}) {
        for (int n = 2 * (r + 1); n <= 2 * (r + 1) + 8; n += 2) {
            const Graph h = gen_regular_chain(r, n);
            CHECK(h.min_degree() == r);
            CHECK(h.max_degree() == r);
        }
    }
}

TEST_CASE("stable tightness gadget") {
    CHECK(gen_stable_tight(Rational(1, 2), 10).node_count() == 10);

    // clique sizes ceil(1/(1-alpha))
    const Graph a = gen_stable_tight(Rational(1, 2), 10);
    int clique_nodes = 0;
    for (int v = 0; v < 10; ++v)
        if (a.degree(v) >= 1 && v >= 8) ++clique_nodes;
    CHECK(clique_nodes == 2);

    const Graph b = gen_stable_tight(Rational(3, 4), 10);
    for (int v = 6; v < 10; ++v) CHECK(b.degree(v) >= 3);  // K_4 corner

    const Graph c = gen_stable_tight(Rational(2, 3), 4);
    CHECK(c.node_count() == 4);
    CHECK(c.degree(0) == 1);  // single path node holding the bridge

    CHECK_THROWS_AS(gen_stable_tight(Rational(2, 3), 3), GraphError);
}

TEST_CASE("petersen and matching complement") {
    const Graph p = gen_petersen();
    CHECK(p.node_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 3);
    CHECK(!bipartition(p).has_value());

    const Graph m = gen_complete_minus_matching(8);
    CHECK(m.edge_count() == 28 - 4);
    CHECK(m.min_degree() == 6);
    CHECK(!m.has_edge(0, 1));
    CHECK(m.has_edge(0, 2));
}

TEST_CASE("random families") {
    SplitMix64 rng(0xFEED);
    const Graph g = gen_random_connected(9, 0.35, rng);
    CHECK(g.node_count() == 9);

    SplitMix64 rng2(0xFEED);
    CHECK(gen_random_connected(9, 0.35, rng2) == g);  // seed-deterministic

    const Graph t = gen_random_tree(10, rng);
    CHECK(t.node_count() == 10);
    CHECK(t.edge_count() == 9);
}

TEST_CASE("serialization round trip") {
    std::vector<Graph> graphs = small_corpus();
    graphs.push_back(gen_regular_chain(3, 18));
    graphs.push_back(gen_stable_tight(Rational(2, 3), 9));
    graphs.push_back(gen_complete_minus_matching(10));
    for (const Graph& g : graphs) {
        CHECK(Graph::parse(g.serialize()) == g);
    }
}

TEST_SUITE_END();
