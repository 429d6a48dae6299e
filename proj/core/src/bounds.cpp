#include "dynamo/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynamo {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void validate(const ThresholdModel& m, int n, int delta) {
    require(n >= 1, "need n >= 1");
    require(delta >= 0 && delta < n, "minimum degree must satisfy 0 <= delta < n");
    if (!m.fractional()) require(m.r() <= delta, "need r <= delta");
}

const Rational kHalf{1, 2};
const Rational kThreeQuarters{3, 4};

}  // namespace

BoundPair dynamo_bounds(const ThresholdModel& m, int n, int delta, std::optional<bool> bipartite) {
    validate(m, n, delta);
    const Rational rn(n);
    BoundPair b{BoundValue(0), BoundValue(0), "", "", {"n", "delta"}};

    switch (m.process()) {
        case Process::BootstrapAlpha: {
            // 1 <= min <= (delta + 1/alpha)/(delta + 1) * alpha * n
            const Rational a = m.alpha();
            b.lower = BoundValue(1);
            b.upper = BoundValue((Rational(delta) + Rational(1) / a) / Rational(delta + 1) * a * rn);
            b.lower_status = "tight";
            b.upper_status = "tight-additive";
            b.assumptions.push_back("alpha");
            return b;
        }
        case Process::TwoWayBootstrapAlpha: {
            const Rational a = m.alpha();
            if (a > kThreeQuarters) {
                b.lower = BoundValue::with_sqrt(Rational(-1), Rational(2) * a, rn);
                b.lower_status = "asymptotically-tight";
            } else {
                b.lower = BoundValue(1);
                b.lower_status = a <= kHalf ? "tight" : "open";
            }
            b.upper = BoundValue(rn);
            b.upper_status = a > kHalf ? "tight" : "open";
            b.assumptions.push_back("alpha");
            return b;
        }
        case Process::BootstrapR: {
            // r <= min <= r/(1+delta) * n
            b.lower = BoundValue(m.r());
            b.upper = BoundValue(Rational(m.r(), delta + 1) * rn);
            b.lower_status = "tight";
            b.upper_status = "tight";
            b.assumptions.push_back("r");
            return b;
        }
        case Process::TwoWayBootstrapR: {
            b.assumptions.push_back("r");
            if (m.r() >= 2) {
                b.lower = BoundValue(m.r());
                b.upper = BoundValue(rn);
                b.lower_status = "tight";
                b.upper_status = "tight";
                return b;
            }
            // r = 1: exactly 2 on bipartite graphs, exactly 1 otherwise.
            if (bipartite.has_value()) {
                const int exact = *bipartite ? 2 : 1;
                b.lower = BoundValue(exact);
                b.upper = BoundValue(exact);
                b.assumptions.push_back("bipartite");
            } else {
                b.lower = BoundValue(1);
                b.upper = BoundValue(2);
            }
            b.lower_status = "tight";
            b.upper_status = "tight";
            return b;
        }
    }
    throw std::logic_error("unreachable");
}

MonotoneLowerBound monotone_dynamo_lower(const ThresholdModel& m, int n, bool is_tree) {
    require(n >= 1, "need n >= 1");
    const Rational rn(n);
    // The full set is always a monotone dynamo, so no lower bound can
    // meaningfully exceed n.
    const auto clamp = [&](MonotoneLowerBound b) {
        if (b.value.compare(rn) > 0) return MonotoneLowerBound{BoundValue(rn), b.basis};
        return b;
    };
    switch (m.process()) {
        case Process::BootstrapR:
            return {BoundValue(m.r()), "one-way-dynamo"};
        case Process::BootstrapAlpha:
            return {BoundValue(1), "one-way-dynamo"};
        case Process::TwoWayBootstrapR:
            // A black set of size <= r goes all white in one round.
            return clamp({BoundValue(m.r() + 1), "r-plus-one"});
        case Process::TwoWayBootstrapAlpha: {
            const Rational a = m.alpha();
            if (a <= kHalf) return clamp({BoundValue(2), "two-adjacent-trivial"});
            if (is_tree) return clamp({BoundValue(a / (Rational(2) - a) * rn), "tree-fraction"});
            return clamp(
                {BoundValue::with_sqrt(Rational(-1), Rational(1), a / (Rational(1) - a) * rn),
                 "sqrt-ratio"});
        }
    }
    throw std::logic_error("unreachable");
}

StableImmortalBounds stable_immortal_bounds(const ThresholdModel& m, int n, Parity parity) {
    require(n >= 1, "need n >= 1");
    require(parity == parity_of(n), "parity flag does not match n");
    const Rational rn(n);
    StableImmortalBounds out{
        BoundPair{BoundValue(1), BoundValue(1), "tight", "tight", {"n"}},
        BoundPair{BoundValue(1), BoundValue(1), "tight", "tight", {"n"}},
    };

    switch (m.process()) {
        case Process::BootstrapR:
        case Process::BootstrapAlpha:
            // A black node never flips, so any single node is both.
            return out;
        case Process::TwoWayBootstrapAlpha: {
            const Rational a = m.alpha();
            out.stable.assumptions.push_back("alpha");
            out.immortal.assumptions.push_back("alpha");
            // The separation argument behind ceil(1/(1-alpha)) needs a proper
            // subset; the full set is always stable, so the bound caps at n.
            out.stable.lower =
                BoundValue(std::min<std::int64_t>((Rational(1) / (Rational(1) - a)).ceil(), n));
            out.stable.lower_status = "tight-additive";
            out.immortal.lower = BoundValue(1);
            out.immortal.lower_status = "tight";
            if (a <= kHalf) {
                // alpha*n + O(1), materialized with the constants of the
                // partition argument: n/c + 2c for c = floor(1/alpha).
                const std::int64_t c = (Rational(1) / a).floor();
                const BoundValue upper(rn / Rational(c) + Rational(2 * c));
                out.stable.upper = upper;
                out.immortal.upper = upper;
                out.stable.upper_status = "tight-additive";
                out.immortal.upper_status = "tight-additive";
            } else {
                out.stable.upper = BoundValue(rn);
                out.immortal.upper = BoundValue(rn);
                out.stable.upper_status = "tight";
                out.immortal.upper_status = "tight";
            }
            return out;
        }
        case Process::TwoWayBootstrapR: {
            const int r = m.r();
            out.stable.assumptions.push_back("r");
            out.immortal.assumptions.push_back("r");
            if (r == 1) {
                out.stable.lower = out.stable.upper = BoundValue(2);
                out.immortal.lower = out.immortal.upper = BoundValue(1);
                return out;
            }
            out.stable.lower = BoundValue(r + 1);
            out.stable.upper = BoundValue(rn);
            out.stable.lower_status = "tight";
            out.stable.upper_status = "tight";
            if (r == 2) {
                const int x = parity == Parity::Even ? 1 : 0;
                out.immortal.lower = BoundValue(2);
                out.immortal.upper = BoundValue(rn / Rational(1 + x));
                out.immortal.assumptions.push_back("parity");
            } else {
                out.immortal.lower = BoundValue(r);
                out.immortal.upper = BoundValue(rn);
            }
            out.immortal.lower_status = "tight";
            out.immortal.upper_status = "tight";
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

bool gunderson_condition(int n, int delta, int r) {
    // delta >= n/2 + r, compared exactly.
    return Rational(delta) >= Rational(n, 2) + Rational(r);
}

}  // namespace dynamo
