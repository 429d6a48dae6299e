#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dynamo/generators.hpp"
#include "dynamo/model.hpp"
#include "dynamo/search.hpp"

namespace dynamo {

struct NamedGraph {
    std::string name;
    Graph graph;
};

struct RandomGraphSpec {
    int count = 50;
    int n_min = 5;
    int n_max = 12;
    double p_min = 0.25;
    double p_max = 0.60;
    std::uint64_t seed = 0xC0FFEE;
};

struct RandomTreeSpec {
    int count = 20;
    int n_min = 6;
    int n_max = 14;
    std::uint64_t seed = 0x7EE5;
};

/// What the verifier runs on: explicit graphs, seeded random families and
/// the model list for the cross-cutting checks. The fixed-grid checks (exact
/// values on named families) only run on the default corpus.
struct CorpusSpec {
    std::vector<NamedGraph> graphs;
    std::optional<RandomGraphSpec> random_graphs;
    std::optional<RandomTreeSpec> random_trees;
    std::vector<ThresholdModel> models;
    bool fixed_grid_checks = true;

    bool empty() const {
        return graphs.empty() && !random_graphs.has_value() && !random_trees.has_value();
    }
};

CorpusSpec default_corpus_spec();

struct CheckResult {
    std::string id;
    std::string claim;  // the statement being verified, in formula form
    bool pass = false;
    bool skipped = false;
    std::string measured;  // JSON fragment of measured values
    double elapsed_seconds = 0.0;
};

struct CorpusReport {
    std::vector<CheckResult> checks;
    RunTally tally;  // aggregated over every certification in the suite
    int corpus_graphs = 0;
    std::optional<std::uint64_t> random_seed;
    std::optional<std::uint64_t> tree_seed;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.pass) return false;
        return true;
    }
};

/// Runs every check against the spec. Throws std::invalid_argument on an
/// empty spec. Progress lines go to `progress` when given.
CorpusReport run_corpus_checks(const CorpusSpec& spec, std::ostream* progress = nullptr);

/// JSON-lines report: header, one line per check, summary. Timing is kept
/// out of the check lines so that the same seed produces identical bytes;
/// the header carries the only timestamp field, when requested.
void write_report_jsonl(std::ostream& out, const CorpusReport& report, bool with_timestamp);

}  // namespace dynamo
