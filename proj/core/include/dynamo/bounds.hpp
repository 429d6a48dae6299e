#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynamo/model.hpp"
#include "dynamo/rational.hpp"

namespace dynamo {

/// Closed-form bracket for a minimum-size question, with the provenance
/// status of each side ("tight", "tight-additive", "asymptotically-tight",
/// "open") and the structural flags the row depended on.
struct BoundPair {
    BoundValue lower;
    BoundValue upper;
    std::string lower_status;
    std::string upper_status;
    std::vector<std::string> assumptions;
};

/// Minimum dynamo size bracket for the model on an n-node graph with minimum
/// degree delta. For two-way r=1 the bracket collapses to an exact value when
/// bipartiteness is known.
BoundPair dynamo_bounds(const ThresholdModel& m, int n, int delta,
                        std::optional<bool> bipartite = std::nullopt);

struct MonotoneLowerBound {
    BoundValue value;
    std::string basis;  // which argument produced the bound
};

/// Lower bound on the minimum monotone dynamo size. For two-way fractional
/// models with alpha <= 1/2 only the trivial bound 2 is available and is
/// flagged as such via `basis`.
MonotoneLowerBound monotone_dynamo_lower(const ThresholdModel& m, int n, bool is_tree);

enum class Parity { Odd, Even };
inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

struct StableImmortalBounds {
    BoundPair stable;
    BoundPair immortal;
};

/// Minimum stable-set and immortal-set brackets. parity must match n.
StableImmortalBounds stable_immortal_bounds(const ThresholdModel& m, int n, Parity parity);

/// Density condition delta >= n/2 + r guaranteeing many dynamos of size r in
/// the two-way absolute-threshold process.
bool gunderson_condition(int n, int delta, int r);

}  // namespace dynamo
