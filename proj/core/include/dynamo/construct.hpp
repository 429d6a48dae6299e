#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dynamo/certify.hpp"
#include "dynamo/rational.hpp"
#include "dynamo/search.hpp"

namespace dynamo {

/// Output of a constructive algorithm: the produced set, the closed-form
/// size guarantee it comes with, and the certificate obtained by re-checking
/// the claimed property through the certifier (never assumed).
struct ConstructionReport {
    std::string method;
    NodeSet set;
    int size = 0;
    Rational guarantee;
    bool certified = false;
    Certificate certificate;
    RunTally tally;  // every certification the construction performed
    std::map<std::string, std::string> details;
};

/// The greedy set of a fixed labeling: nodes whose count of lower-labeled
/// neighbors is below the threshold (alpha*d(v) or r). `label` maps node ->
/// unique label in 1..n. Always a dynamo for the one-way processes.
NodeSet labeling_dynamo_set(const Graph& g, const ThresholdModel& m,
                            const std::vector<int>& label);

/// Expected size of the labeling set under a uniformly random labeling:
/// sum over nodes of ceil(alpha*d(v))/(d(v)+1), or r/(d(v)+1).
Rational labeling_expected_size(const Graph& g, const ThresholdModel& m);

/// Samples `samples` random labelings and returns the smallest set found
/// (ties broken towards the lexicographically least). Every sampled set is
/// certified; one-way models only.
ConstructionReport dynamo_by_labeling(const Graph& g, const ThresholdModel& m, std::uint64_t seed,
                                      int samples);

/// Minimum dynamo for the two-way process with threshold 1: two adjacent
/// nodes when the graph is bipartite, one node of an odd cycle otherwise.
ConstructionReport dynamo_twoway_r1(const Graph& g);

/// For dense graphs (min degree >= n/2 + r): picks a seeded random set of
/// size 2r-1 and returns its r-subset covering the most nodes with >= r
/// neighbors inside, certified as a two-way dynamo.
ConstructionReport dense_small_dynamo(const Graph& g, int r, std::uint64_t seed);

struct CountResult {
    std::uint64_t count = 0;
    bool complete = true;  // false when the budget capped the enumeration
    RunTally tally;
};

/// Exact number of r-subsets that are two-way dynamos, enumerating all
/// C(n, r) subsets (up to `budget` certifications).
CountResult count_small_dynamos(const Graph& g, int r,
                                std::uint64_t budget = ~std::uint64_t{0});

/// Local-search partition into floor(1/alpha) parts minimizing cross edges
/// under a per-part size floor; returns the largest part, certified stable
/// in the two-way fractional process. Requires alpha <= 1/2.
ConstructionReport stable_by_partition(const Graph& g, const Rational& alpha);

/// Immortal set for the two-way process with threshold 2, via an exact
/// longest cycle plus the even/short/traversal case split. Requires min
/// degree >= 2 and n <= node_guard.
ConstructionReport immortal_r2(const Graph& g, int node_guard = 24);

/// Exact longest simple cycle by depth-first search over canonical paths.
/// Returns the node sequence (closed implicitly), or empty for a forest.
/// Throws when n exceeds node_guard.
std::vector<int> longest_cycle(const Graph& g, int node_guard = 24);

}  // namespace dynamo
