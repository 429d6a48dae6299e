#include <doctest.h>

#include "dynamo/json_out.hpp"
#include "dynamo/search.hpp"
#include "test_util.hpp"

using namespace dynamo;
using namespace testutil;

TEST_SUITE_BEGIN("search");

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(40, 3) == 9880);
    CHECK(binomial(18, 9) == 48620);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
}

TEST_CASE("minimum dynamo on the complete graph") {
    const auto res = min_set(gen_complete(8), ThresholdModel::two_way_r_bootstrap(3),
                             Property::Dynamo);
    CHECK(res.found);
    CHECK(res.min_size == 3);
    CHECK(res.witness == NodeSet::of(8, {0, 1, 2}));  // lexicographic first
    CHECK(res.exhaustive_up_to == 2);
    CHECK(res.tally.indeterminate == 0);
}

TEST_CASE("minimum immortal set on cycles") {
    const auto r2 = ThresholdModel::two_way_r_bootstrap(2);
    const auto odd = min_set(gen_cycle(7), r2, Property::Immortal);
    CHECK(odd.min_size == 7);
    const auto even = min_set(gen_cycle(8), r2, Property::Immortal);
    CHECK(even.min_size == 4);
}

TEST_CASE("all certified sets of a size") {
    const auto r2 = ThresholdModel::two_way_r_bootstrap(2);

    const auto pairs = all_min_sets(gen_complete(6), r2, Property::Dynamo, 2);
    CHECK(pairs.sets.size() == 15);

    const auto none = all_min_sets(gen_cycle(6), r2, Property::Dynamo, 5);
    CHECK(none.sets.empty());
    CHECK(none.tally.examined == 6);

    const auto triples = all_min_sets(gen_cycle(6), r2, Property::Immortal, 3);
    const NodeSet evens = NodeSet::of(6, {0, 2, 4});
    const NodeSet odds = NodeSet::of(6, {1, 3, 5});
    bool saw_evens = false, saw_odds = false;
    for (const auto& s : triples.sets) {
        saw_evens = saw_evens || s == evens;
        saw_odds = saw_odds || s == odds;
    }
    CHECK(saw_evens);
    CHECK(saw_odds);
}

TEST_CASE("result is independent of the worker count") {
    const Graph g = gen_clique_with_leaves(3, 9);
    const auto m = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
    SearchOptions one;
    SearchOptions four;
    four.workers = 4;
    const auto a = min_set(g, m, Property::Dynamo, one);
    const auto b = min_set(g, m, Property::Dynamo, four);
    CHECK(a.found == b.found);
    CHECK(a.min_size == b.min_size);
    CHECK(a.witness == b.witness);

    const Graph p = gen_petersen();
    const auto mr = ThresholdModel::two_way_r_bootstrap(2);
    const auto c = min_set(p, mr, Property::Stable, one);
    const auto d = min_set(p, mr, Property::Stable, four);
    CHECK(c.min_size == d.min_size);
    CHECK(c.witness == d.witness);
}

TEST_CASE("size-capped search reports exhaustiveness") {
    SearchOptions opts;
    opts.max_size = 2;
    const auto res = min_set(gen_cycle(6), ThresholdModel::two_way_r_bootstrap(2),
                             Property::Dynamo, opts);
    CHECK(!res.found);
    CHECK(res.exhaustive_up_to == 2);
    CHECK(res.tally.examined == 6 + 15);
}

TEST_CASE("node cap is enforced") {
    SearchOptions opts;       // default cap 16
    CHECK_THROWS_AS(min_set(gen_regular_chain(3, 18), ThresholdModel::two_way_r_bootstrap(3),
                            Property::Dynamo, opts),
                    std::invalid_argument);
    opts.node_cap = 18;
    opts.max_size = 1;
    CHECK_NOTHROW(min_set(gen_regular_chain(3, 18), ThresholdModel::two_way_r_bootstrap(3),
                          Property::Dynamo, opts));
}

TEST_CASE("oracle minimum never beats the closed-form bracket") {
    // Spot checks against constructions: construction size >= oracle minimum.
    const Graph g = gen_clique_with_leaves(4, 16);
    const auto m = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
    const auto res = min_set(g, m, Property::Dynamo);
    CHECK(res.found);
    CHECK(res.min_size <= 4);  // the clique certifies, so the minimum is at most k
}

TEST_CASE("search result JSON") {
    const auto res =
        min_set(gen_complete(6), ThresholdModel::two_way_r_bootstrap(2), Property::Dynamo);
    const std::string json = to_json(res);
    CHECK(json.find("\"min_size\":2") != std::string::npos);
    CHECK(json.find("\"witness\":[0,1]") != std::string::npos);
    CHECK(json.find("\"found\":true") != std::string::npos);
}

TEST_SUITE_END();
