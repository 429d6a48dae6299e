#pragma once

#include <cstdint>
#include <vector>

#include "dynamo/certify.hpp"

namespace dynamo {

/// Saturating binomial coefficient.
std::uint64_t binomial(int n, int k);

/// Outcome statistics of a batch of certifications. limit_reached counts
/// traces that hit the round budget (whether or not a verdict was still
/// possible); indeterminate counts unresolved verdicts.
struct RunTally {
    std::uint64_t examined = 0;
    std::uint64_t indeterminate = 0;
    std::uint64_t limit_reached = 0;
    int max_period = 0;

    void absorb(const Certificate& c);
    void merge(const RunTally& other);
};

struct SearchOptions {
    int node_cap = 16;   // refuse graphs larger than this
    int max_size = -1;   // largest cardinality to try; -1 means n
    int workers = 1;
    int round_limit = -1;
};

/// Result of an exhaustive minimum search. When found, witness is the
/// lexicographically least certified set of the minimum cardinality and
/// every smaller cardinality was fully enumerated; when not found, all
/// cardinalities up to exhaustive_up_to were enumerated.
struct SearchResult {
    Property property = Property::Dynamo;
    bool found = false;
    int min_size = -1;
    NodeSet witness;
    int exhaustive_up_to = 0;
    RunTally tally;
};

/// Enumerates subsets by increasing cardinality, lexicographically within a
/// cardinality, certifying each until the first success. Deterministic for
/// any worker count.
SearchResult min_set(const Graph& g, const ThresholdModel& m, Property property,
                     const SearchOptions& options = {});

struct SetListResult {
    std::vector<NodeSet> sets;  // lexicographic order
    RunTally tally;
};

/// All certified subsets of exactly the given cardinality.
SetListResult all_min_sets(const Graph& g, const ThresholdModel& m, Property property, int size,
                           const SearchOptions& options = {});

}  // namespace dynamo
