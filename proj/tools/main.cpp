// Command-line front end: graph generation, simulation, certification,
// exhaustive minimum search, the constructive algorithms, closed-form bounds
// and the corpus verifier. All subcommands print JSON to stdout.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynamo/bounds.hpp"
#include "dynamo/certify.hpp"
#include "dynamo/construct.hpp"
#include "dynamo/corpus.hpp"
#include "dynamo/generators.hpp"
#include "dynamo/json_out.hpp"
#include "dynamo/search.hpp"

namespace {

using namespace dynamo;
using ordered = nlohmann::ordered_json;

Graph load_graph_arg(const std::string& path) {
    if (path == "-") return Graph::load(std::cin);
    return Graph::load_file(path);
}

NodeSet parse_set(const Graph& g, const std::string& ids) {
    NodeSet s(g.node_count());
    std::stringstream in(ids);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        const int v = std::stoi(token);
        if (v < 0 || v >= g.node_count())
            throw std::invalid_argument("node " + token + " out of range");
        s.add(v);
    }
    return s;
}

struct ModelFlags {
    std::string name;
    int r = 0;
    std::string alpha;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", name, "process: r | twoway-r | alpha | twoway-alpha")
            ->required();
        cmd->add_option("--r", r, "absolute threshold (r models)");
        cmd->add_option("--alpha", alpha, "fractional threshold P/Q (alpha models)");
    }

    ThresholdModel build() const {
        const bool fractional = name == "alpha" || name == "twoway-alpha";
        if (fractional && alpha.empty())
            throw CLI::ValidationError("--alpha is required for fractional models");
        if (!fractional && r == 0)
            throw CLI::ValidationError("--r is required for absolute-threshold models");
        return ThresholdModel::from_name(name, r,
                                         fractional ? Rational::parse(alpha) : Rational(0));
    }
};

Graph generate_family(const std::string& family, int n, int k, int r,
                      const std::string& alpha, double p, std::uint64_t seed) {
    if (family == "complete") return gen_complete(n);
    if (family == "cycle") return gen_cycle(n);
    if (family == "path") return gen_path(n);
    if (family == "star") return gen_star(n);
    if (family == "clique-with-leaves") return gen_clique_with_leaves(k, n);
    if (family == "regular-chain") return gen_regular_chain(r, n);
    if (family == "stable-tight") return gen_stable_tight(Rational::parse(alpha), n);
    if (family == "petersen") return gen_petersen();
    if (family == "complete-minus-matching") return gen_complete_minus_matching(n);
    if (family == "random") {
        SplitMix64 rng(seed);
        return gen_random_connected(n, p, rng);
    }
    if (family == "random-tree") {
        SplitMix64 rng(seed);
        return gen_random_tree(n, rng);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

CorpusSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
    ordered doc = ordered::parse(in);

    CorpusSpec spec;
    spec.fixed_grid_checks = false;
    for (const auto& item : doc.value("graphs", ordered::array())) {
        const std::string family = item.at("family");
        Graph g = generate_family(family, item.value("n", 0), item.value("k", 0),
                                  item.value("r", 0), item.value("alpha", std::string{}),
                                  item.value("p", 0.4), item.value("seed", 1ULL));
        std::string name = item.value("name", family + "-" + std::to_string(g.node_count()));
        spec.graphs.push_back({std::move(name), std::move(g)});
    }
    if (doc.contains("random_graphs") && !doc["random_graphs"].is_null()) {
        const auto& rg = doc["random_graphs"];
        RandomGraphSpec s;
        s.count = rg.value("count", s.count);
        s.n_min = rg.value("n_min", s.n_min);
        s.n_max = rg.value("n_max", s.n_max);
        s.p_min = rg.value("p_min", s.p_min);
        s.p_max = rg.value("p_max", s.p_max);
        s.seed = rg.value("seed", s.seed);
        spec.random_graphs = s;
    }
    if (doc.contains("random_trees") && !doc["random_trees"].is_null()) {
        const auto& rt = doc["random_trees"];
        RandomTreeSpec s;
        s.count = rt.value("count", s.count);
        s.n_min = rt.value("n_min", s.n_min);
        s.n_max = rt.value("n_max", s.n_max);
        s.seed = rt.value("seed", s.seed);
        spec.random_trees = s;
    }
    if (doc.contains("models")) {
        for (const auto& item : doc["models"]) {
            const std::string name = item.at("model");
            const int r = item.value("r", 0);
            const std::string alpha = item.value("alpha", std::string{});
            spec.models.push_back(ThresholdModel::from_name(
                name, r, alpha.empty() ? Rational(0) : Rational::parse(alpha)));
        }
    } else {
        spec.models = default_corpus_spec().models;
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bootstrap percolation dynamics: simulate, certify, search, bound"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "emit a named graph as an edge list");
    std::string family, gen_alpha, out_path;
    int gen_n = 0, gen_k = 0, gen_r = 0;
    double gen_p = 0.4;
    std::uint64_t gen_seed = 1;
    generate->add_option("family", family,
                         "complete | cycle | path | star | clique-with-leaves | regular-chain | "
                         "stable-tight | petersen | complete-minus-matching | random | random-tree")
        ->required();
    generate->add_option("--n", gen_n, "node count (leaf count for star)");
    generate->add_option("--k", gen_k, "clique size");
    generate->add_option("--r", gen_r, "regularity degree");
    generate->add_option("--alpha", gen_alpha, "threshold P/Q");
    generate->add_option("--p", gen_p, "edge probability");
    generate->add_option("--seed", gen_seed, "random seed");
    generate->add_option("--out", out_path, "output path (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run the process, print one JSON line per round");
    ModelFlags sim_model;
    std::string sim_graph, sim_set;
    int sim_limit = -1;
    simulate->add_option("graph", sim_graph, "edge-list file ('-' for stdin)")->required();
    sim_model.attach(simulate);
    simulate->add_option("--set", sim_set, "initial black nodes, comma-separated")->required();
    simulate->add_option("--limit", sim_limit, "round budget (default 4n+16)");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "decide a property for a node set");
    ModelFlags cert_model;
    std::string cert_graph, cert_set, cert_property = "dynamo";
    int cert_limit = -1;
    bool cert_trace = false;
    cert_cmd->add_option("graph", cert_graph, "edge-list file")->required();
    cert_model.attach(cert_cmd);
    cert_cmd->add_option("--set", cert_set, "queried nodes, comma-separated")->required();
    cert_cmd->add_option("--property", cert_property, "dynamo | monotone | stable | immortal");
    cert_cmd->add_option("--limit", cert_limit, "round budget");
    cert_cmd->add_flag("--trace", cert_trace, "include the witnessing trace");

    // search-min
    auto* search_cmd = app.add_subcommand("search-min", "exhaustive minimum certified set");
    ModelFlags search_model;
    std::string search_graph, search_property = "dynamo";
    int search_cap = 16, search_max = -1, search_workers = 1, search_limit = -1;
    search_cmd->add_option("graph", search_graph, "edge-list file")->required();
    search_model.attach(search_cmd);
    search_cmd->add_option("--property", search_property, "dynamo | monotone | stable | immortal");
    search_cmd->add_option("--cap", search_cap, "largest admissible node count");
    search_cmd->add_option("--max-size", search_max, "largest cardinality to try");
    search_cmd->add_option("--workers", search_workers, "parallel workers");
    search_cmd->add_option("--limit", search_limit, "round budget");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "run a constructive algorithm");
    construct_cmd->require_subcommand(1);
    std::string con_graph, con_alpha;
    int con_r = 2, con_samples = 100, con_guard = 24;
    std::uint64_t con_seed = 1, con_budget = ~std::uint64_t{0};
    bool con_trace = false;
    const auto add_graph_arg = [&](CLI::App* c) {
        c->add_option("graph", con_graph, "edge-list file")->required();
        c->add_flag("--trace", con_trace, "include the certificate trace");
    };
    auto* con_label = construct_cmd->add_subcommand("labeling", "random-labeling dynamo (one-way)");
    add_graph_arg(con_label);
    con_label->add_option("--alpha", con_alpha, "fractional threshold P/Q");
    con_label->add_option("--r", con_r, "absolute threshold");
    bool con_label_r = false;
    con_label->add_flag("--use-r", con_label_r, "use the absolute-threshold process");
    con_label->add_option("--samples", con_samples, "labelings to draw");
    con_label->add_option("--seed", con_seed, "random seed");
    auto* con_r1 = construct_cmd->add_subcommand("twoway-r1", "two adjacent nodes or an odd-cycle node");
    add_graph_arg(con_r1);
    auto* con_dense = construct_cmd->add_subcommand("dense", "size-r dynamo in dense graphs");
    add_graph_arg(con_dense);
    con_dense->add_option("--r", con_r, "absolute threshold")->required();
    con_dense->add_option("--seed", con_seed, "random seed");
    auto* con_count = construct_cmd->add_subcommand("count-small", "count size-r two-way dynamos");
    add_graph_arg(con_count);
    con_count->add_option("--r", con_r, "absolute threshold")->required();
    con_count->add_option("--budget", con_budget, "certification budget");
    auto* con_stable = construct_cmd->add_subcommand("stable-partition", "stable set by local search");
    add_graph_arg(con_stable);
    con_stable->add_option("--alpha", con_alpha, "fractional threshold P/Q (<= 1/2)")->required();
    auto* con_imm = construct_cmd->add_subcommand("immortal-r2", "immortal set via longest cycle");
    add_graph_arg(con_imm);
    con_imm->add_option("--guard", con_guard, "node-count guard for the exact cycle search");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound pair");
    ModelFlags bounds_model;
    int bounds_n = 0, bounds_delta = 0;
    std::string bounds_kind = "dynamo";
    std::optional<bool> bounds_bip;
    bool bounds_bip_flag = false, bounds_nonbip_flag = false, bounds_tree = false;
    bounds_model.attach(bounds_cmd);
    bounds_cmd->add_option("--n", bounds_n, "node count")->required();
    bounds_cmd->add_option("--delta", bounds_delta, "minimum degree");
    bounds_cmd->add_option("--kind", bounds_kind, "dynamo | monotone | stable-immortal");
    bounds_cmd->add_flag("--bipartite", bounds_bip_flag, "graph known bipartite");
    bounds_cmd->add_flag("--non-bipartite", bounds_nonbip_flag, "graph known non-bipartite");
    bounds_cmd->add_flag("--tree", bounds_tree, "graph known to be a tree");

    // corpus-verify
    auto* corpus_cmd = app.add_subcommand("corpus-verify", "run the verification suite");
    std::string spec_path;
    std::uint64_t corpus_seed = 0, tree_seed = 0;
    bool corpus_quiet = false, corpus_no_timestamp = false;
    corpus_cmd->add_option("--spec", spec_path, "JSON corpus spec (default: built-in corpus)");
    corpus_cmd->add_option("--seed", corpus_seed, "override the random-graph seed");
    corpus_cmd->add_option("--tree-seed", tree_seed, "override the random-tree seed");
    corpus_cmd->add_flag("--quiet", corpus_quiet, "suppress progress lines on stderr");
    corpus_cmd->add_flag("--no-timestamp", corpus_no_timestamp, "omit the header timestamp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*generate) {
            const Graph g = generate_family(family, gen_n, gen_k, gen_r, gen_alpha, gen_p, gen_seed);
            if (out_path.empty()) {
                std::cout << g.serialize();
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
                out << g.serialize();
            }
        } else if (*simulate) {
            const Graph g = load_graph_arg(sim_graph);
            const auto model = sim_model.build();
            model.validate_for(g);
            const RunTrace trace = run(g, model, parse_set(g, sim_set), sim_limit);
            write_trace_jsonl(std::cout, trace);
        } else if (*cert_cmd) {
            const Graph g = load_graph_arg(cert_graph);
            const auto cert = certify(g, cert_model.build(), parse_set(g, cert_set),
                                      parse_property(cert_property), cert_limit);
            std::cout << to_json(cert, cert_trace) << "\n";
        } else if (*search_cmd) {
            const Graph g = load_graph_arg(search_graph);
            SearchOptions options;
            options.node_cap = search_cap;
            options.max_size = search_max;
            options.workers = search_workers;
            options.round_limit = search_limit;
            const auto result = min_set(g, search_model.build(),
                                        parse_property(search_property), options);
            std::cout << to_json(result) << "\n";
        } else if (*construct_cmd) {
            const Graph g = load_graph_arg(con_graph);
            if (*con_label) {
                const auto model = con_label_r
                                       ? ThresholdModel::r_bootstrap(con_r)
                                       : ThresholdModel::alpha_bootstrap(Rational::parse(con_alpha));
                std::cout << to_json(dynamo_by_labeling(g, model, con_seed, con_samples), con_trace)
                          << "\n";
            } else if (*con_r1) {
                std::cout << to_json(dynamo_twoway_r1(g), con_trace) << "\n";
            } else if (*con_dense) {
                std::cout << to_json(dense_small_dynamo(g, con_r, con_seed), con_trace) << "\n";
            } else if (*con_count) {
                std::cout << to_json(count_small_dynamos(g, con_r, con_budget)) << "\n";
            } else if (*con_stable) {
                std::cout << to_json(stable_by_partition(g, Rational::parse(con_alpha)), con_trace)
                          << "\n";
            } else if (*con_imm) {
                std::cout << to_json(immortal_r2(g, con_guard), con_trace) << "\n";
            }
        } else if (*bounds_cmd) {
            const auto model = bounds_model.build();
            if (bounds_bip_flag) bounds_bip = true;
            if (bounds_nonbip_flag) bounds_bip = false;
            ordered out;
            if (bounds_kind == "dynamo") {
                out = ordered::parse(to_json(dynamo_bounds(model, bounds_n, bounds_delta, bounds_bip)));
            } else if (bounds_kind == "monotone") {
                out = ordered::parse(to_json(monotone_dynamo_lower(model, bounds_n, bounds_tree)));
            } else if (bounds_kind == "stable-immortal") {
                out = ordered::parse(
                    to_json(stable_immortal_bounds(model, bounds_n, parity_of(bounds_n))));
            } else {
                throw std::invalid_argument("unknown bound kind '" + bounds_kind + "'");
            }
            std::cout << out.dump() << "\n";
        } else if (*corpus_cmd) {
            CorpusSpec spec = spec_path.empty() ? default_corpus_spec() : load_spec_file(spec_path);
            if (spec.empty() || spec.models.empty()) {
                std::cerr << "corpus spec lists no graphs or no models\n";
                return 2;
            }
            if (corpus_seed && spec.random_graphs) spec.random_graphs->seed = corpus_seed;
            if (tree_seed && spec.random_trees) spec.random_trees->seed = tree_seed;
            const CorpusReport report =
                run_corpus_checks(spec, corpus_quiet ? nullptr : &std::cerr);
            write_report_jsonl(std::cout, report, !corpus_no_timestamp);
            return report.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
