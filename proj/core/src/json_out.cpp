#include "dynamo/json_out.hpp"

#include <ostream>

#include <json.hpp>

namespace dynamo {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::FixedPoint: return "fixed_point";
        case Outcome::Cycle: return "cycle";
        case Outcome::LimitReached: return "limit_reached";
    }
    return {};
}

ordered trace_object(const RunTrace& trace) {
    ordered rounds = ordered::array();
    for (int t = 0; t <= trace.rounds; ++t)
        rounds.push_back(ordered{{"t", t}, {"black", trace.at(t).to_vector()}});
    ordered out;
    out["rounds"] = std::move(rounds);
    out["outcome"] = outcome_name(trace.outcome);
    out["period"] = trace.period;
    out["start"] = trace.cycle_start;
    return out;
}

ordered value_object(const BoundValue& v) {
    ordered out;
    out["exact"] = v.str();
    out["approx"] = v.to_double();
    return out;
}

ordered pair_object(const BoundPair& pair) {
    ordered out;
    out["lower"] = value_object(pair.lower);
    out["upper"] = value_object(pair.upper);
    out["lower_status"] = pair.lower_status;
    out["upper_status"] = pair.upper_status;
    out["assumptions"] = pair.assumptions;
    return out;
}

ordered verdict_value(Verdict v) {
    if (v == Verdict::Yes) return ordered(true);
    if (v == Verdict::No) return ordered(false);
    return ordered(nullptr);  // indeterminate
}

ordered certificate_object(const Certificate& cert, bool include_trace) {
    ordered out;
    out["property"] = to_string(cert.property);
    out["verdict"] = verdict_value(cert.verdict);
    out["rounds"] = cert.rounds();
    if (cert.failure_round)
        out["failure_round"] = *cert.failure_round;
    else
        out["failure_round"] = nullptr;
    if (include_trace) out["trace"] = trace_object(cert.trace);
    return out;
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const RunTrace& trace) {
    for (int t = 0; t <= trace.rounds; ++t) {
        ordered line;
        line["t"] = t;
        line["black"] = trace.at(t).to_vector();
        out << line.dump() << "\n";
    }
    ordered final_line;
    final_line["outcome"] = outcome_name(trace.outcome);
    final_line["period"] = trace.period;
    out << final_line.dump() << "\n";
}

std::string to_json(const Certificate& cert, bool include_trace) {
    return certificate_object(cert, include_trace).dump();
}

std::string to_json(const SearchResult& result) {
    ordered out;
    out["property"] = to_string(result.property);
    out["found"] = result.found;
    out["min_size"] = result.min_size;
    out["witness"] = result.witness.to_vector();
    out["exhaustive_up_to"] = result.exhaustive_up_to;
    out["examined"] = result.tally.examined;
    out["indeterminate"] = result.tally.indeterminate;
    out["max_period"] = result.tally.max_period;
    return out.dump();
}

std::string to_json(const ConstructionReport& report, bool include_trace) {
    ordered out;
    out["method"] = report.method;
    out["set"] = report.set.to_vector();
    out["size"] = report.size;
    out["guarantee"] = ordered{{"exact", report.guarantee.str()},
                               {"approx", report.guarantee.to_double()}};
    out["certified"] = report.certified;
    out["certificate"] = ordered::parse(to_json(report.certificate, include_trace));
    out["details"] = report.details;
    return out.dump();
}

std::string to_json(const CountResult& result) {
    ordered out;
    out["count"] = result.count;
    out["examined"] = result.tally.examined;
    out["complete"] = result.complete;
    out["indeterminate"] = result.tally.indeterminate;
    out["max_period"] = result.tally.max_period;
    return out.dump();
}

std::string to_json(const BoundPair& pair) { return pair_object(pair).dump(); }

std::string to_json(const StableImmortalBounds& bounds) {
    ordered out;
    out["stable"] = pair_object(bounds.stable);
    out["immortal"] = pair_object(bounds.immortal);
    return out.dump();
}

std::string to_json(const MonotoneLowerBound& bound) {
    ordered out;
    out["lower"] = value_object(bound.value);
    out["basis"] = bound.basis;
    return out.dump();
}

}  // namespace dynamo
