#pragma once

#include <cstdint>
#include <string>

#include "dynamo/graph.hpp"
#include "dynamo/rational.hpp"

namespace dynamo {

enum class Process {
    BootstrapR,          // black permanent, absolute threshold r
    TwoWayBootstrapR,    // recomputed every round, absolute threshold r
    BootstrapAlpha,      // black permanent, fractional threshold alpha
    TwoWayBootstrapAlpha // recomputed every round, fractional threshold alpha
};

/// One of the four update rules with its exact parameter. Fractional
/// thresholds are kept as reduced rationals; the comparison
/// |black neighbors| >= alpha * degree is evaluated as an integer
/// cross-multiplication so that equality cases are bit-exact.
class ThresholdModel {
public:
    static ThresholdModel r_bootstrap(int r) { return {Process::BootstrapR, r, Rational(0)}; }
    static ThresholdModel two_way_r_bootstrap(int r) {
        return {Process::TwoWayBootstrapR, r, Rational(0)};
    }
    static ThresholdModel alpha_bootstrap(Rational alpha) {
        return {Process::BootstrapAlpha, 0, check_alpha(alpha)};
    }
    static ThresholdModel two_way_alpha_bootstrap(Rational alpha) {
        return {Process::TwoWayBootstrapAlpha, 0, check_alpha(alpha)};
    }

    /// Builds from the short names used on the wire: "r", "twoway-r",
    /// "alpha", "twoway-alpha".
    static ThresholdModel from_name(const std::string& name, int r, const Rational& alpha);

    Process process() const { return process_; }

    bool two_way() const {
        return process_ == Process::TwoWayBootstrapR || process_ == Process::TwoWayBootstrapAlpha;
    }

    bool fractional() const {
        return process_ == Process::BootstrapAlpha || process_ == Process::TwoWayBootstrapAlpha;
    }

    int r() const { return r_; }
    const Rational& alpha() const { return alpha_; }

    bool meets_threshold(int black_neighbors, int degree) const {
        if (fractional())
            return static_cast<std::int64_t>(black_neighbors) * alpha_.den() >=
                   alpha_.num() * static_cast<std::int64_t>(degree);
        return black_neighbors >= r_;
    }

    /// Enforces the standing assumption r <= min degree for the absolute
    /// variants. Throws GraphError.
    void validate_for(const Graph& g) const;

    std::string name() const;
    std::string parameter_string() const;  // "r=2" or "alpha=1/2"

    bool operator==(const ThresholdModel&) const = default;

private:
    ThresholdModel(Process p, int r, Rational alpha) : process_(p), r_(r), alpha_(alpha) {
        if (!fractional() && r_ < 1) throw std::invalid_argument("threshold r must be >= 1");
    }

    static Rational check_alpha(const Rational& a) {
        if (!(Rational(0) < a && a < Rational(1)))
            throw std::invalid_argument("alpha must satisfy 0 < alpha < 1");
        return a;
    }

    Process process_;
    int r_;
    Rational alpha_;
};

}  // namespace dynamo
