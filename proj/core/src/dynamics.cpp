#include "dynamo/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace dynamo {

void ThresholdModel::validate_for(const Graph& g) const {
    if (!fractional() && r_ > g.min_degree())
        throw GraphError("threshold r=" + std::to_string(r_) + " exceeds minimum degree " +
                         std::to_string(g.min_degree()));
}

ThresholdModel ThresholdModel::from_name(const std::string& name, int r, const Rational& alpha) {
    if (name == "r") return r_bootstrap(r);
    if (name == "twoway-r") return two_way_r_bootstrap(r);
    if (name == "alpha") return alpha_bootstrap(alpha);
    if (name == "twoway-alpha") return two_way_alpha_bootstrap(alpha);
    throw std::invalid_argument("unknown model '" + name + "'");
}

std::string ThresholdModel::name() const {
    switch (process_) {
        case Process::BootstrapR: return "r";
        case Process::TwoWayBootstrapR: return "twoway-r";
        case Process::BootstrapAlpha: return "alpha";
        case Process::TwoWayBootstrapAlpha: return "twoway-alpha";
    }
    return {};
}

std::string ThresholdModel::parameter_string() const {
    return fractional() ? "alpha=" + alpha_.str() : "r=" + std::to_string(r_);
}

Configuration step(const Graph& g, const ThresholdModel& m, const Configuration& c) {
    const int n = g.node_count();
    Configuration next(n);
    for (int v = 0; v < n; ++v) {
        const int black = intersection_size(g.adjacency_row(v), c);
        if (m.meets_threshold(black, g.degree(v)) || (!m.two_way() && c.test(v))) next.add(v);
    }
    return next;
}

RunTrace run(const Graph& g, const ThresholdModel& m, Configuration initial, int limit) {
    if (limit < 0) limit = default_round_limit(g.node_count());
    if (limit < 1) throw std::invalid_argument("round limit must be >= 1");

    RunTrace trace;
    trace.configs.push_back(std::move(initial));
    std::vector<std::uint64_t> hashes{trace.configs[0].hash()};

    for (int t = 1; t <= limit; ++t) {
        Configuration next = step(g, m, trace.configs.back());
        const std::uint64_t h = next.hash();
        for (int s = 0; s < t; ++s) {
            if (hashes[s] == h && trace.configs[s] == next) {
                trace.configs.push_back(std::move(next));
                trace.rounds = t;
                trace.cycle_start = s;
                trace.period = t - s;
                trace.outcome = trace.period == 1 ? Outcome::FixedPoint : Outcome::Cycle;
                return trace;
            }
        }
        hashes.push_back(h);
        trace.configs.push_back(std::move(next));
    }
    trace.rounds = limit;
    trace.outcome = Outcome::LimitReached;
    return trace;
}

NodeSet two_round_core(const RunTrace& trace, int t) {
    if (t < 1 || t > trace.rounds)
        throw std::out_of_range("round " + std::to_string(t) + " outside trace of length " +
                                std::to_string(trace.rounds));
    NodeSet core(trace.configs[0].universe());
    for (int s = 1; s <= t; ++s) core |= trace.at(s - 1) & trace.at(s);
    return core;
}

int core_potential(const Graph& g, const RunTrace& trace, int t) {
    const NodeSet core = two_round_core(trace, t);
    return core.count() + edge_boundary(g, core);
}

int boundary_potential(const Graph& g, const NodeSet& black) { return edge_boundary(g, black); }

Diagnostics compute_diagnostics(const Graph& g, const RunTrace& trace) {
    Diagnostics d;
    NodeSet core(trace.configs[0].universe());
    for (int t = 1; t <= trace.rounds; ++t) {
        core |= trace.at(t - 1) & trace.at(t);
        d.cores.push_back(core);
        d.core_potential.push_back(core.count() + edge_boundary(g, core));
    }
    for (int t = 0; t <= trace.rounds; ++t)
        d.boundary_potential.push_back(edge_boundary(g, trace.at(t)));
    return d;
}

}  // namespace dynamo
