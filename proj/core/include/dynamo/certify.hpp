#pragma once

#include <optional>
#include <string>

#include "dynamo/dynamics.hpp"

namespace dynamo {

enum class Property { Dynamo, MonotoneDynamo, Stable, Immortal };

/// Yes/No are proven by the witnessing trace; Indeterminate means the round
/// budget ran out before the trace repeated or decided, and is surfaced
/// separately from No.
enum class Verdict { Yes, No, Indeterminate };

const char* to_string(Property p);
const char* to_string(Verdict v);
Property parse_property(const std::string& name);

/// Decision for one queried set, with the run that witnesses it. On a No,
/// failure_round is the round of the violation (first monotonicity break,
/// first round the set lost a node, first all-white round) or the start of
/// the terminal cycle for a failed dynamo.
struct Certificate {
    Property property = Property::Dynamo;
    Verdict verdict = Verdict::Indeterminate;
    RunTrace trace;
    std::optional<int> failure_round;

    bool yes() const { return verdict == Verdict::Yes; }
    int rounds() const { return trace.rounds; }
};

/// Runs the process from exactly `set` black, rest white — the worst
/// configuration containing the set, by the monotonicity of the update rules
/// — and decides the property. limit < 0 selects the default budget.
Certificate certify(const Graph& g, const ThresholdModel& m, const NodeSet& set, Property property,
                    int limit = -1);

Certificate is_dynamo(const Graph& g, const ThresholdModel& m, const NodeSet& set, int limit = -1);
Certificate is_monotone_dynamo(const Graph& g, const ThresholdModel& m, const NodeSet& set,
                               int limit = -1);
Certificate is_stable(const Graph& g, const ThresholdModel& m, const NodeSet& set, int limit = -1);
Certificate is_immortal(const Graph& g, const ThresholdModel& m, const NodeSet& set,
                        int limit = -1);

}  // namespace dynamo
