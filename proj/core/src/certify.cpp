#include "dynamo/certify.hpp"

#include <stdexcept>

namespace dynamo {

const char* to_string(Property p) {
    switch (p) {
        case Property::Dynamo: return "dynamo";
        case Property::MonotoneDynamo: return "monotone";
        case Property::Stable: return "stable";
        case Property::Immortal: return "immortal";
    }
    return {};
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return {};
}

Property parse_property(const std::string& name) {
    if (name == "dynamo") return Property::Dynamo;
    if (name == "monotone") return Property::MonotoneDynamo;
    if (name == "stable") return Property::Stable;
    if (name == "immortal") return Property::Immortal;
    throw std::invalid_argument("unknown property '" + name + "'");
}

namespace {

bool repeated(const RunTrace& t) {
    return t.outcome == Outcome::FixedPoint || t.outcome == Outcome::Cycle;
}

Certificate decide_dynamo(Certificate cert, bool require_monotone) {
    const auto& configs = cert.trace.configs;
    for (int t = 0; t <= cert.trace.rounds; ++t) {
        if (require_monotone && t >= 1 && !configs[t - 1].is_subset_of(configs[t])) {
            cert.verdict = Verdict::No;
            cert.failure_round = t;
            return cert;
        }
        if (configs[t].is_full()) {
            cert.verdict = Verdict::Yes;
            return cert;
        }
    }
    if (repeated(cert.trace)) {
        cert.verdict = Verdict::No;
        cert.failure_round = cert.trace.cycle_start;
    }
    return cert;
}

Certificate decide_stable(Certificate cert, const NodeSet& set) {
    for (int t = 0; t <= cert.trace.rounds; ++t) {
        if (!set.is_subset_of(cert.trace.at(t))) {
            cert.verdict = Verdict::No;
            cert.failure_round = t;
            return cert;
        }
    }
    if (repeated(cert.trace)) cert.verdict = Verdict::Yes;
    return cert;
}

Certificate decide_immortal(Certificate cert) {
    for (int t = 0; t <= cert.trace.rounds; ++t) {
        if (cert.trace.at(t).empty()) {
            cert.verdict = Verdict::No;
            cert.failure_round = t;
            return cert;
        }
    }
    // All-white is absorbing, so a repeat without reaching it proves that
    // black survives forever.
    if (repeated(cert.trace)) cert.verdict = Verdict::Yes;
    return cert;
}

}  // namespace

Certificate certify(const Graph& g, const ThresholdModel& m, const NodeSet& set, Property property,
                    int limit) {
    if (set.universe() != g.node_count())
        throw std::invalid_argument("node set universe does not match the graph");
    if (set.empty()) throw std::invalid_argument("queried set must be non-empty");
    m.validate_for(g);

    Certificate cert;
    cert.property = property;
    cert.trace = run(g, m, set, limit);
    switch (property) {
        case Property::Dynamo: return decide_dynamo(std::move(cert), false);
        case Property::MonotoneDynamo: return decide_dynamo(std::move(cert), true);
        case Property::Stable: return decide_stable(std::move(cert), set);
        case Property::Immortal: return decide_immortal(std::move(cert));
    }
    throw std::logic_error("unreachable");
}

Certificate is_dynamo(const Graph& g, const ThresholdModel& m, const NodeSet& set, int limit) {
    return certify(g, m, set, Property::Dynamo, limit);
}

Certificate is_monotone_dynamo(const Graph& g, const ThresholdModel& m, const NodeSet& set,
                               int limit) {
    return certify(g, m, set, Property::MonotoneDynamo, limit);
}

Certificate is_stable(const Graph& g, const ThresholdModel& m, const NodeSet& set, int limit) {
    return certify(g, m, set, Property::Stable, limit);
}

Certificate is_immortal(const Graph& g, const ThresholdModel& m, const NodeSet& set, int limit) {
    return certify(g, m, set, Property::Immortal, limit);
}

}  // namespace dynamo
