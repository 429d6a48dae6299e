#include <doctest.h>

#include "dynamo/bounds.hpp"
#include "dynamo/rng.hpp"

using namespace dynamo;

TEST_SUITE_BEGIN("bounds");

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, -2) < Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("x/y"));
}

TEST_CASE("sqrt-form values compare exactly") {
    // 2*(4/5)*sqrt(100) - 1 = 15 exactly: the radicand folds.
    const auto b = BoundValue::with_sqrt(Rational(-1), Rational(8, 5), Rational(100));
    CHECK(b.is_rational());
    CHECK(b.rational() == Rational(15));

    // sqrt(12) stays irrational; bracket it between rationals.
    const auto s = BoundValue::with_sqrt(Rational(0), Rational(1), Rational(12));
    CHECK(!s.is_rational());
    CHECK(s.compare(Rational(3)) > 0);
    CHECK(s.compare(Rational(4)) < 0);
    CHECK(s.compare(Rational(7, 2)) < 0);  // sqrt(12) = 3.464...
    CHECK(s.at_least(Rational(17, 5)));
    CHECK(s.at_most(Rational(18, 5)));

    // Negative coefficient: 5 - 2*sqrt(2) = 2.17157...
    const auto neg = BoundValue::with_sqrt(Rational(5), Rational(-2), Rational(2));
    CHECK(neg.compare(Rational(217, 100)) > 0);
    CHECK(neg.compare(Rational(218, 100)) < 0);
    CHECK(neg.compare(Rational(2)) > 0);
}

TEST_CASE("dynamo bound table rows") {
    const auto one_way_alpha = ThresholdModel::alpha_bootstrap(Rational(1, 2));
    const auto row1 = dynamo_bounds(one_way_alpha, 100, 4);
    CHECK(row1.lower.rational() == Rational(1));
    CHECK(row1.upper.rational() == Rational(60));  // (4 + 2)/5 * 50

    const auto two_way_45 = ThresholdModel::two_way_alpha_bootstrap(Rational(4, 5));
    const auto row2 = dynamo_bounds(two_way_45, 100, 4);
    CHECK(row2.lower.rational() == Rational(15));  // 2*(4/5)*10 - 1
    CHECK(row2.upper.rational() == Rational(100));

    const auto two_way_small = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
    const auto row3 = dynamo_bounds(two_way_small, 100, 4);
    CHECK(row3.lower.rational() == Rational(1));
    CHECK(row3.lower_status == "tight");

    const auto two_way_mid = ThresholdModel::two_way_alpha_bootstrap(Rational(3, 5));
    CHECK(dynamo_bounds(two_way_mid, 100, 4).lower_status == "open");

    const auto r_bp = ThresholdModel::r_bootstrap(2);
    const auto row4 = dynamo_bounds(r_bp, 100, 4);
    CHECK(row4.lower.rational() == Rational(2));
    CHECK(row4.upper.rational() == Rational(40));  // 2/5 * 100

    const auto tw2 = dynamo_bounds(ThresholdModel::two_way_r_bootstrap(2), 100, 4);
    CHECK(tw2.lower.rational() == Rational(2));
    CHECK(tw2.upper.rational() == Rational(100));

    const auto tw1 = ThresholdModel::two_way_r_bootstrap(1);
    const auto bip = dynamo_bounds(tw1, 100, 4, true);
    CHECK(bip.lower.rational() == Rational(2));
    CHECK(bip.upper.rational() == Rational(2));
    const auto nonbip = dynamo_bounds(tw1, 100, 4, false);
    CHECK(nonbip.lower.rational() == Rational(1));
    CHECK(nonbip.upper.rational() == Rational(1));
    const auto unknown = dynamo_bounds(tw1, 100, 4);
    CHECK(unknown.lower.rational() == Rational(1));
    CHECK(unknown.upper.rational() == Rational(2));

    CHECK_THROWS(dynamo_bounds(ThresholdModel::r_bootstrap(5), 100, 4));  // r > delta
}

TEST_CASE("monotone lower bounds") {
    const auto a34 = ThresholdModel::two_way_alpha_bootstrap(Rational(3, 4));
    const auto general = monotone_dynamo_lower(a34, 48, false);
    CHECK(general.value.rational() == Rational(11));  // sqrt(3*48) - 1
    CHECK(general.basis == "sqrt-ratio");

    const auto tree = monotone_dynamo_lower(a34, 14, true);
    CHECK(tree.value.rational() == Rational(42, 5));  // 8.4
    CHECK(tree.basis == "tree-fraction");

    const auto r2 = monotone_dynamo_lower(ThresholdModel::two_way_r_bootstrap(2), 30, false);
    CHECK(r2.value.rational() == Rational(3));

    const auto trivial =
        monotone_dynamo_lower(ThresholdModel::two_way_alpha_bootstrap(Rational(1, 3)), 30, false);
    CHECK(trivial.value.rational() == Rational(2));
    CHECK(trivial.basis == "two-adjacent-trivial");

    const auto one_way = monotone_dynamo_lower(ThresholdModel::r_bootstrap(3), 30, false);
    CHECK(one_way.value.rational() == Rational(3));
}

TEST_CASE("stable and immortal bound rows") {
    const auto a23 = ThresholdModel::two_way_alpha_bootstrap(Rational(2, 3));
    const auto hi = stable_immortal_bounds(a23, 100, Parity::Even);
    CHECK(hi.stable.lower.rational() == Rational(3));  // ceil(1/(1-2/3))
    CHECK(hi.stable.upper.rational() == Rational(100));
    CHECK(hi.immortal.lower.rational() == Rational(1));

    const auto a13 = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 3));
    const auto lo = stable_immortal_bounds(a13, 99, Parity::Odd);
    CHECK(lo.stable.lower.rational() == Rational(2));
    CHECK(lo.stable.upper.rational() == Rational(99, 3) + Rational(6));  // n/c + 2c, c = 3
    CHECK(lo.immortal.upper.rational() == Rational(39));

    const auto r1 = stable_immortal_bounds(ThresholdModel::two_way_r_bootstrap(1), 10, Parity::Even);
    CHECK(r1.stable.lower.rational() == Rational(2));
    CHECK(r1.stable.upper.rational() == Rational(2));
    CHECK(r1.immortal.lower.rational() == Rational(1));
    CHECK(r1.immortal.upper.rational() == Rational(1));

    const auto r2even = stable_immortal_bounds(ThresholdModel::two_way_r_bootstrap(2), 10, Parity::Even);
    CHECK(r2even.stable.lower.rational() == Rational(3));
    CHECK(r2even.immortal.upper.rational() == Rational(5));  // n/2
    const auto r2odd = stable_immortal_bounds(ThresholdModel::two_way_r_bootstrap(2), 9, Parity::Odd);
    CHECK(r2odd.immortal.upper.rational() == Rational(9));

    const auto r3 = stable_immortal_bounds(ThresholdModel::two_way_r_bootstrap(3), 10, Parity::Even);
    CHECK(r3.stable.lower.rational() == Rational(4));
    CHECK(r3.immortal.lower.rational() == Rational(3));
    CHECK(r3.immortal.upper.rational() == Rational(10));

    const auto one_way = stable_immortal_bounds(ThresholdModel::r_bootstrap(2), 10, Parity::Even);
    CHECK(one_way.stable.lower.rational() == Rational(1));
    CHECK(one_way.stable.upper.rational() == Rational(1));

    CHECK_THROWS(stable_immortal_bounds(a23, 10, Parity::Odd));  // parity mismatch
}

TEST_CASE("density condition") {
    CHECK(gunderson_condition(20, 12, 2));
    CHECK(!gunderson_condition(20, 11, 2));
    CHECK(gunderson_condition(21, 13, 2));  // 13 >= 10.5 + 2
}

TEST_CASE("lower never exceeds upper (fuzzed)") {
    SplitMix64 rng(0xB0B0);
    for (int i = 0; i < 400; ++i) {
        const int n = 2 + static_cast<int>(rng.below(200));
        const int delta = 1 + static_cast<int>(rng.below(n - 1));
        std::vector<ThresholdModel> models;
        const int r = 1 + static_cast<int>(rng.below(std::min(delta, 5)));
        models.push_back(ThresholdModel::r_bootstrap(r));
        models.push_back(ThresholdModel::two_way_r_bootstrap(r));
        const std::int64_t q = 2 + static_cast<std::int64_t>(rng.below(11));
        const std::int64_t p = 1 + static_cast<std::int64_t>(rng.below(q - 1));
        models.push_back(ThresholdModel::alpha_bootstrap(Rational(p, q)));
        models.push_back(ThresholdModel::two_way_alpha_bootstrap(Rational(p, q)));
        for (const auto& m : models) {
            const auto d = dynamo_bounds(m, n, delta);
            CHECK(d.lower.to_double() <= d.upper.to_double() + 1e-9);
            const auto si = stable_immortal_bounds(m, n, parity_of(n));
            CHECK(si.stable.lower.to_double() <= si.stable.upper.to_double() + 1e-9);
            CHECK(si.immortal.lower.to_double() <= si.immortal.upper.to_double() + 1e-9);
        }
    }
}

TEST_SUITE_END();
