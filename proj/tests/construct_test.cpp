#include <doctest.h>

#include "dynamo/construct.hpp"
#include "dynamo/search.hpp"
#include "test_util.hpp"

using namespace dynamo;
using namespace testutil;

TEST_SUITE_BEGIN("construct");

TEST_CASE("labeling set for a fixed labeling") {
    // Star with the internal node labeled first: only the center qualifies.
    const Graph star = gen_star(5);
    const auto m = ThresholdModel::alpha_bootstrap(Rational(1, 2));
    std::vector<int> label(6);
    label[0] = 1;
    for (int v = 1; v <= 5; ++v) label[v] = v + 1;
    CHECK(labeling_dynamo_set(star, m, label) == NodeSet::of(6, {0}));

    // On K_5 exactly the first ceil(alpha*(n-1)) labels qualify.
    const Graph k5 = gen_complete(5);
    SplitMix64 rng(0x1AB);
    for (int i = 0; i < 10; ++i) {
        const auto perm = rng.permutation(5);
        std::vector<int> l(5);
        for (int v = 0; v < 5; ++v) l[v] = perm[v] + 1;
        CHECK(labeling_dynamo_set(k5, m, l).count() == 2);
    }

    CHECK_THROWS(labeling_dynamo_set(k5, m, std::vector<int>{1, 1, 2, 3, 4}));
}

TEST_CASE("labeling expectation") {
    // Star S_4: center ceil(4a)/5, each leaf ceil(a)/2.
    const auto m = ThresholdModel::alpha_bootstrap(Rational(1, 3));
    CHECK(labeling_expected_size(gen_star(4), m) == Rational(2, 5) + Rational(4, 2));

    const auto mr = ThresholdModel::r_bootstrap(2);
    CHECK(labeling_expected_size(gen_cycle(5), mr) == Rational(10, 3));  // 5 * 2/3
}

TEST_CASE("sampled labeling dynamos certify and shrink with more samples") {
    const Graph g = gen_clique_with_leaves(3, 9);
    const auto m = ThresholdModel::alpha_bootstrap(Rational(1, 2));
    const auto few = dynamo_by_labeling(g, m, 42, 5);
    const auto many = dynamo_by_labeling(g, m, 42, 50);
    CHECK(few.certified);
    CHECK(many.certified);
    CHECK(many.size <= few.size);  // same seed stream, more draws
    CHECK(few.details.at("samples_certified") == "5");
    CHECK(Rational::parse(many.details.at("mean_size")) > Rational(0));

    CHECK_THROWS(dynamo_by_labeling(g, ThresholdModel::two_way_r_bootstrap(1), 1, 1));
}

TEST_CASE("two-way threshold-1 dynamos") {
    const auto even = dynamo_twoway_r1(gen_cycle(6));
    CHECK(even.certified);
    CHECK(even.size == 2);

    const auto odd = dynamo_twoway_r1(gen_cycle(5));
    CHECK(odd.certified);
    CHECK(odd.size == 1);

    const auto k4 = dynamo_twoway_r1(gen_complete(4));
    CHECK(k4.certified);
    CHECK(k4.size == 1);
}

TEST_CASE("dense small dynamo") {
    const Graph k12 = gen_complete(12);
    const auto on_complete = dense_small_dynamo(k12, 2, 7);
    CHECK(on_complete.certified);
    CHECK(on_complete.size == 2);

    const Graph dense = gen_complete_minus_matching(20);
    const auto rep = dense_small_dynamo(dense, 2, 99);
    CHECK(rep.certified);
    CHECK(rep.size == 2);
    CHECK(rep.details.at("covered") != "0");

    // Once n reaches (2r)^(2r) the pigeonhole floor on the covered count
    // becomes non-vacuous; check it holds with room to spare.
    const auto big = dense_small_dynamo(gen_complete(258), 2, 3);
    CHECK(big.certified);
    const Rational floor_value = Rational::parse(big.details.at("covered_floor"));
    CHECK(floor_value >= Rational(1));
    CHECK(Rational(std::stoll(big.details.at("covered"))) >= Rational(floor_value.ceil()));

    CHECK_THROWS_AS(dense_small_dynamo(gen_path(10), 2, 1), std::invalid_argument);
}

TEST_CASE("counting small dynamos") {
    const auto k6 = count_small_dynamos(gen_complete(6), 2);
    CHECK(k6.count == 15);
    CHECK(k6.complete);

    const auto c6 = count_small_dynamos(gen_cycle(6), 2);
    CHECK(c6.count == 0);
    CHECK(c6.tally.examined == 15);

    const auto capped = count_small_dynamos(gen_complete(6), 2, 7);
    CHECK(!capped.complete);
    CHECK(capped.tally.examined == 7);

    CHECK_THROWS(count_small_dynamos(gen_complete(6), 0));
}

TEST_CASE("stable set by partition") {
    const auto k4 = stable_by_partition(gen_complete(4), Rational(1, 2));
    CHECK(k4.certified);
    CHECK(k4.size >= 3);  // a bare half of K_4 is not stable
    CHECK(k4.details.at("all_meet_threshold") == "true");

    const auto c8 = stable_by_partition(gen_cycle(8), Rational(1, 2));
    CHECK(c8.certified);
    CHECK(Rational(c8.size) <= Rational(8, 2) + Rational(4));

    CHECK_THROWS_AS(stable_by_partition(gen_cycle(8), Rational(3, 4)), std::invalid_argument);

    for (const Graph& g : small_corpus()) {
        for (const Rational alpha : {Rational(1, 3), Rational(1, 2)}) {
            const auto rep = stable_by_partition(g, alpha);
            CHECK(rep.certified);
            CHECK(rep.details.at("all_meet_threshold") == "true");
            CHECK(Rational(rep.size) <= rep.guarantee);
        }
    }
}

TEST_CASE("exact longest cycle") {
    CHECK(longest_cycle(gen_cycle(7)).size() == 7);
    CHECK(longest_cycle(gen_complete(6)).size() == 6);
    CHECK(longest_cycle(gen_path(5)).empty());
    CHECK(longest_cycle(gen_star(4)).empty());

    // The Petersen graph is famously non-Hamiltonian; its longest cycle has 9
    // nodes. Confirm non-Hamiltonicity with an independent exhaustive check.
    const Graph p = gen_petersen();
    CHECK(!has_hamiltonian_cycle(p));
    const auto cycle = longest_cycle(p);
    CHECK(cycle.size() == 9);
    CHECK(is_simple_cycle(p, cycle));

    const auto chain = longest_cycle(gen_regular_chain(3, 18));
    CHECK(is_simple_cycle(gen_regular_chain(3, 18), chain));

    CHECK_THROWS(longest_cycle(gen_complete_minus_matching(30)));
}

TEST_CASE("immortal sets for threshold 2") {
    const auto c6 = immortal_r2(gen_cycle(6));
    CHECK(c6.certified);
    CHECK(c6.set == NodeSet::of(6, {1, 3, 5}));

    const auto c5 = immortal_r2(gen_cycle(5));
    CHECK(c5.certified);
    CHECK(c5.size == 5);

    const auto p = immortal_r2(gen_petersen());
    CHECK(p.certified);
    CHECK(p.size <= 5);

    CHECK_THROWS(immortal_r2(gen_path(6)));                       // min degree 1
    CHECK_THROWS(immortal_r2(gen_complete_minus_matching(30)));   // over the guard
}

TEST_CASE("immortal construction across the corpus") {
    for (const Graph& g : small_corpus()) {
        if (g.min_degree() < 2) continue;
        const auto rep = immortal_r2(g);
        CHECK(rep.certified);
        CHECK(Rational(rep.size) <= rep.guarantee);
        // With an even or short cycle available the set fits in n/2.
        const auto cycle = longest_cycle(g);
        if (cycle.size() % 2 == 0 || 2 * static_cast<int>(cycle.size()) <= g.node_count())
            CHECK(2 * rep.size <= g.node_count());
    }
}

TEST_CASE("construction sizes never beat the exhaustive minimum") {
    for (const Graph& g : small_corpus()) {
        if (g.node_count() > 10) continue;
        const auto half = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
        const auto rep = stable_by_partition(g, Rational(1, 2));
        const auto oracle = min_set(g, half, Property::Stable);
        CHECK(oracle.found);
        CHECK(rep.size >= oracle.min_size);

        if (g.min_degree() >= 2) {
            const auto imm = immortal_r2(g);
            const auto oracle_imm =
                min_set(g, ThresholdModel::two_way_r_bootstrap(2), Property::Immortal);
            CHECK(oracle_imm.found);
            CHECK(imm.size >= oracle_imm.min_size);
        }

        const auto r1 = dynamo_twoway_r1(g);
        const auto oracle_r1 = min_set(g, ThresholdModel::two_way_r_bootstrap(1), Property::Dynamo);
        CHECK(r1.size == oracle_r1.min_size);  // exact by the bipartite split
    }
}

TEST_SUITE_END();
