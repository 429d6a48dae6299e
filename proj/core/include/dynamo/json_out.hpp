#pragma once

#include <iosfwd>
#include <string>

#include "dynamo/bounds.hpp"
#include "dynamo/certify.hpp"
#include "dynamo/construct.hpp"
#include "dynamo/search.hpp"

namespace dynamo {

/// Line-oriented trace export: one {"t": .., "black": [..]} object per round,
/// then a final {"outcome": .., "period": ..} object.
void write_trace_jsonl(std::ostream& out, const RunTrace& trace);

std::string to_json(const Certificate& cert, bool include_trace);
std::string to_json(const SearchResult& result);
std::string to_json(const ConstructionReport& report, bool include_trace);
std::string to_json(const CountResult& result);
std::string to_json(const BoundPair& pair);
std::string to_json(const StableImmortalBounds& bounds);
std::string to_json(const MonotoneLowerBound& bound);

}  // namespace dynamo
