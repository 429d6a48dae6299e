#pragma once

#include <vector>

#include "dynamo/bits.hpp"
#include "dynamo/graph.hpp"
#include "dynamo/model.hpp"

namespace dynamo {

/// Set of black nodes; everything else is white.
using Configuration = NodeSet;

enum class Outcome { FixedPoint, Cycle, LimitReached };

/// Configurations C_0..C_T of a synchronous run. On FixedPoint/Cycle, C_T is
/// the first configuration equal to an earlier one (C_{cycle_start}), so the
/// period T - cycle_start is minimal; period 1 is reported as FixedPoint.
struct RunTrace {
    std::vector<Configuration> configs;
    Outcome outcome = Outcome::LimitReached;
    int period = 0;
    int cycle_start = 0;
    int rounds = 0;  // T

    const Configuration& at(int t) const { return configs.at(static_cast<std::size_t>(t)); }
    const Configuration& last() const { return configs.back(); }
};

/// Round budget used when the caller does not pass one: one-way processes
/// finish within n rounds, two-way transients observed at this scale are
/// well under 4n.
inline int default_round_limit(int node_count) { return 4 * node_count + 16; }

/// One synchronous update of every node.
Configuration step(const Graph& g, const ThresholdModel& m, const Configuration& c);

/// Iterates step, hashing each configuration and confirming repeats by exact
/// equality. limit < 0 selects the default budget.
RunTrace run(const Graph& g, const ThresholdModel& m, Configuration initial, int limit = -1);

/// Nodes that were black in two consecutive rounds t'-1, t' for some t' <= t.
/// Requires 1 <= t <= trace.rounds.
NodeSet two_round_core(const RunTrace& trace, int t);

/// |B_t| + |edge boundary of B_t| for the two-round core B_t.
int core_potential(const Graph& g, const RunTrace& trace, int t);

/// |edge boundary of the given black set|.
int boundary_potential(const Graph& g, const NodeSet& black);

/// All per-round diagnostics of a trace: cores[i] is the two-round core of
/// round i+1, core_potential aligned with cores, boundary_potential[t] is
/// the boundary size of round t's black set.
struct Diagnostics {
    std::vector<NodeSet> cores;
    std::vector<int> core_potential;
    std::vector<int> boundary_potential;
};

Diagnostics compute_diagnostics(const Graph& g, const RunTrace& trace);

}  // namespace dynamo
