#include "dynamo/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "dynamo/bounds.hpp"
#include "dynamo/certify.hpp"
#include "dynamo/construct.hpp"
#include "dynamo/dynamics.hpp"

namespace dynamo {

namespace {

using ordered = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

SearchOptions search_opts(int node_cap, int max_size = -1) {
    SearchOptions o;
    o.node_cap = node_cap;
    o.max_size = max_size;
    return o;
}

bool is_tree(const Graph& g) { return g.edge_count() == g.node_count() - 1; }

std::uint64_t check_seed(std::uint64_t base, int a, int b) {
    return SplitMix64(base ^ (static_cast<std::uint64_t>(a) * 1000003ULL) ^
                      static_cast<std::uint64_t>(b))
        .next();
}

struct Checker {
    const CorpusSpec& spec;
    std::ostream* progress;
    CorpusReport report;

    std::vector<NamedGraph> corpus;  // named graphs plus seeded random graphs
    std::vector<NamedGraph> trees;

    Checker(const CorpusSpec& s, std::ostream* out) : spec(s), progress(out) {
        corpus = spec.graphs;
        if (spec.random_graphs) {
            const auto& rg = *spec.random_graphs;
            SplitMix64 rng(rg.seed);
            for (int i = 0; i < rg.count; ++i) {
                const int n = rg.n_min + static_cast<int>(rng.below(rg.n_max - rg.n_min + 1));
                const double p = rg.p_min + rng.unit() * (rg.p_max - rg.p_min);
                Graph g = gen_random_connected(n, p, rng);
                corpus.push_back({"random-" + std::to_string(i) + "-n" + std::to_string(n),
                                  std::move(g)});
            }
            report.random_seed = rg.seed;
        }
        if (spec.random_trees) {
            const auto& rt = *spec.random_trees;
            SplitMix64 rng(rt.seed);
            for (int i = 0; i < rt.count; ++i) {
                const int n = rt.n_min + static_cast<int>(rng.below(rt.n_max - rt.n_min + 1));
                trees.push_back({"tree-" + std::to_string(i) + "-n" + std::to_string(n),
                                 gen_random_tree(n, rng)});
            }
            report.tree_seed = rt.seed;
        }
        report.corpus_graphs = static_cast<int>(corpus.size());
    }

    std::vector<const NamedGraph*> corpus_up_to(int max_nodes) const {
        std::vector<const NamedGraph*> out;
        for (const auto& ng : corpus)
            if (ng.graph.node_count() <= max_nodes) out.push_back(&ng);
        return out;
    }

    void absorb(const Certificate& cert) { report.tally.absorb(cert); }
    void absorb(const RunTally& tally) { report.tally.merge(tally); }
    void absorb_trace(const RunTrace& trace) {
        ++report.tally.examined;
        if (trace.outcome == Outcome::LimitReached) ++report.tally.limit_reached;
        if (trace.outcome == Outcome::FixedPoint)
            report.tally.max_period = std::max(report.tally.max_period, 1);
        if (trace.outcome == Outcome::Cycle)
            report.tally.max_period = std::max(report.tally.max_period, trace.period);
    }

    void run_check(const std::string& id, const std::string& claim, bool enabled,
                   double budget_seconds, const std::function<bool(ordered&)>& body) {
        CheckResult res;
        res.id = id;
        res.claim = claim;
        if (!enabled) {
            res.skipped = true;
            res.measured = "{}";
            report.checks.push_back(res);
            if (progress) *progress << "[skip] " << id << "\n";
            return;
        }
        ordered measured = ordered::object();
        const auto start = Clock::now();
        res.pass = body(measured);
        res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (budget_seconds > 0) {
            measured["budget_seconds"] = budget_seconds;
            if (res.elapsed_seconds > budget_seconds) res.pass = false;
        }
        res.measured = measured.dump();
        report.checks.push_back(res);
        if (progress)
            *progress << (res.pass ? "[pass] " : "[FAIL] ") << id << "  (" << res.elapsed_seconds
                      << "s)\n";
    }

    // ---- criterion 1: exact minimum dynamos on complete and 3-regular graphs

    void check_complete_and_regular() {
        run_check(
            "c01-complete-regular-exact",
            "min dynamo of K_n equals r in both threshold-r processes; "
            "3-regular graphs have no two-way dynamo smaller than n",
            spec.fixed_grid_checks, 60.0, [&](ordered& m) {
                bool ok = true;
                ordered mismatches = ordered::array();
                for (int n = 6; n <= 10; ++n) {
                    const Graph g = gen_complete(n);
                    for (int r = 1; r <= 3; ++r) {
                        for (const bool two_way : {false, true}) {
                            const auto model = two_way ? ThresholdModel::two_way_r_bootstrap(r)
                                                       : ThresholdModel::r_bootstrap(r);
                            const auto res = min_set(g, model, Property::Dynamo, search_opts(12));
                            absorb(res.tally);
                            if (!res.found || res.min_size != r) {
                                ok = false;
                                mismatches.push_back(ordered{{"n", n},
                                                             {"r", r},
                                                             {"two_way", two_way},
                                                             {"measured", res.min_size},
                                                             {"expected", r}});
                            }
                        }
                    }
                }
                m["complete_grid_mismatches"] = mismatches;

                ordered regular = ordered::array();
                const std::vector<NamedGraph> cubic{{"petersen", gen_petersen()},
                                                    {"regular-chain-3-18", gen_regular_chain(3, 18)}};
                for (const auto& ng : cubic) {
                    const int n = ng.graph.node_count();
                    const auto model = ThresholdModel::two_way_r_bootstrap(3);
                    const auto subs = all_min_sets(ng.graph, model, Property::Dynamo, n - 1,
                                                   search_opts(18));
                    absorb(subs.tally);
                    const auto full = is_dynamo(ng.graph, model, NodeSet::full(n));
                    absorb(full);
                    const bool good = subs.sets.empty() && full.yes();
                    ok = ok && good;
                    regular.push_back(ordered{{"graph", ng.name},
                                              {"subset_size", n - 1},
                                              {"dynamos_found", subs.sets.size()},
                                              {"full_set_is_dynamo", full.yes()}});
                }
                m["regular"] = regular;
                return ok;
            });
    }

    // ---- criterion 2: singleton dynamos on cycles at alpha = 1/2

    void check_cycle_singletons() {
        run_check("c02-cycle-half-singletons",
                  "two-way fractional threshold 1/2 on C_n: min dynamo is 1 exactly "
                  "for odd n, larger for even n",
                  spec.fixed_grid_checks, 0, [&](ordered& m) {
                      bool ok = true;
                      const auto model =
                          ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
                      ordered rows = ordered::array();
                      for (const int n : {3, 5, 7, 9, 4, 6, 8}) {
                          const auto res =
                              min_set(gen_cycle(n), model, Property::Dynamo, search_opts(12));
                          absorb(res.tally);
                          const bool odd = n % 2 == 1;
                          const bool good = odd ? res.min_size == 1 : res.min_size > 1;
                          ok = ok && good && res.found;
                          rows.push_back(ordered{{"n", n}, {"min", res.min_size}});
                      }
                      m["cycles"] = rows;
                      return ok;
                  });
    }

    // ---- criterion 3: two-way threshold-1 minimum equals 2 iff bipartite

    void check_twoway_r1() {
        run_check("c03-twoway-r1-bipartite",
                  "min two-way threshold-1 dynamo is 2 on bipartite graphs and 1 "
                  "otherwise; the constructive output matches and certifies",
                  spec.random_graphs.has_value(), 0, [&](ordered& m) {
                      bool ok = true;
                      int bipartite_count = 0, graphs_checked = 0;
                      ordered bad = ordered::array();
                      // The seeded random graphs the claim calls for, plus the
                      // named corpus for broader bipartite coverage.
                      for (const auto* png : corpus_up_to(12)) {
                          const auto& ng = *png;
                          const Graph& g = ng.graph;
                          ++graphs_checked;
                          const bool bip = bipartition(g).has_value();
                          bipartite_count += bip ? 1 : 0;
                          const int expected = bip ? 2 : 1;
                          const auto res = min_set(g, ThresholdModel::two_way_r_bootstrap(1),
                                                   Property::Dynamo, search_opts(12));
                          absorb(res.tally);
                          const auto rep = dynamo_twoway_r1(g);
                          absorb(rep.tally);
                          const bool good = res.found && res.min_size == expected &&
                                            rep.certified && rep.size == expected;
                          if (!good)
                              bad.push_back(ordered{{"graph", ng.name},
                                                    {"bipartite", bip},
                                                    {"measured", res.min_size},
                                                    {"constructed", rep.size}});
                          ok = ok && good;
                      }
                      m["seed"] = spec.random_graphs ? spec.random_graphs->seed : 0;
                      m["graphs_checked"] = graphs_checked;
                      m["bipartite_count"] = bipartite_count;
                      m["mismatches"] = bad;
                      return ok;
                  });
    }

    // ---- criterion 4: sqrt lower bound and core-potential descent

    void check_sqrt_lower_bound() {
        run_check("c04-twoway-alpha-sqrt-lower",
                  "for alpha in {4/5, 7/8}: min two-way dynamo >= 2*alpha*sqrt(n) - 1, "
                  "and the core potential never increases after round 1 on "
                  "dynamo-certifying runs",
                  true, 0, [&](ordered& m) {
                      bool ok = true;
                      int bound_checks = 0, potential_runs = 0;
                      ordered bad = ordered::array();
                      for (const auto* ng : corpus_up_to(12)) {
                          const Graph& g = ng->graph;
                          const int n = g.node_count();
                          for (const Rational alpha : {Rational(4, 5), Rational(7, 8)}) {
                              const auto model = ThresholdModel::two_way_alpha_bootstrap(alpha);
                              const auto res =
                                  min_set(g, model, Property::Dynamo, search_opts(12));
                              absorb(res.tally);
                              const auto bound = BoundValue::with_sqrt(
                                  Rational(-1), Rational(2) * alpha, Rational(n));
                              ++bound_checks;
                              if (!res.found || !bound.at_most(Rational(res.min_size))) {
                                  ok = false;
                                  bad.push_back(ordered{{"graph", ng->name},
                                                        {"alpha", alpha.str()},
                                                        {"min", res.min_size},
                                                        {"bound", bound.to_double()}});
                                  continue;
                              }
                              for (const NodeSet& set :
                                   {res.witness, NodeSet::full(n)}) {
                                  const auto cert = is_dynamo(g, model, set);
                                  absorb(cert);
                                  if (!cert.yes()) continue;
                                  ++potential_runs;
                                  const auto diag = compute_diagnostics(g, cert.trace);
                                  for (std::size_t i = 1; i < diag.core_potential.size(); ++i) {
                                      if (diag.core_potential[i] > diag.core_potential[i - 1]) {
                                          ok = false;
                                          bad.push_back(ordered{{"graph", ng->name},
                                                                {"alpha", alpha.str()},
                                                                {"potential_rise_at", i + 1}});
                                      }
                                  }
                              }
                          }
                      }
                      m["bound_checks"] = bound_checks;
                      m["potential_runs"] = potential_runs;
                      m["violations"] = bad;
                      return ok;
                  });
    }

    // ---- criterion 5: clique-with-leaves tightness

    void check_clique_leaves_tightness() {
        run_check("c05-clique-leaves-tightness",
                  "when k-1 >= alpha*(clique degree), the clique of the "
                  "clique-with-leaves graph certifies as a two-way dynamo of size k; "
                  "at alpha=1/2, (k,n)=(4,16) satisfies k = sqrt(alpha/(1-alpha)*n)",
                  spec.fixed_grid_checks, 0, [&](ordered& m) {
                      bool ok = true;
                      int qualifying = 0;
                      ordered rows = ordered::array();
                      for (const auto& [k, n] :
                           std::vector<std::pair<int, int>>{{4, 16}, {5, 25}}) {
                          const Graph g = gen_clique_with_leaves(k, n);
                          const int clique_degree = (k - 1) + n / k - 1;
                          NodeSet clique(n);
                          for (int v = 0; v < k; ++v) clique.add(v);
                          for (const Rational alpha :
                               {Rational(1, 2), Rational(3, 4), Rational(4, 5)}) {
                              const bool applies =
                                  Rational(k - 1) >= alpha * Rational(clique_degree);
                              ordered row{{"k", k}, {"n", n}, {"alpha", alpha.str()},
                                          {"applies", applies}};
                              if (applies) {
                                  ++qualifying;
                                  const auto cert = is_dynamo(
                                      g, ThresholdModel::two_way_alpha_bootstrap(alpha), clique);
                                  absorb(cert);
                                  row["certified"] = cert.yes();
                                  ok = ok && cert.yes();
                                  if (k == 4 && n == 16 && alpha == Rational(1, 2)) {
                                      const bool exact =
                                          Rational(k) * Rational(k) ==
                                          alpha / (Rational(1) - alpha) * Rational(n);
                                      row["k_matches_sqrt_formula"] = exact;
                                      ok = ok && exact;
                                  }
                              }
                              rows.push_back(row);
                          }
                      }
                      m["combos"] = rows;
                      m["qualifying"] = qualifying;
                      return ok && qualifying >= 1;
                  });
    }

    // ---- criterion 6: monotone dynamo lower bounds

    void check_monotone_lower() {
        run_check("c06-monotone-lower",
                  "min monotone dynamo >= sqrt(alpha/(1-alpha)*n) - 1 in general and "
                  ">= alpha/(2-alpha)*n on trees, for alpha in {3/5, 3/4}",
                  true, 0, [&](ordered& m) {
                      bool ok = true;
                      int general_checks = 0, tree_checks = 0;
                      ordered bad = ordered::array();
                      const auto run_case = [&](const NamedGraph& ng, bool tree, int cap) {
                          const Graph& g = ng.graph;
                          for (const Rational alpha : {Rational(3, 5), Rational(3, 4)}) {
                              const auto model = ThresholdModel::two_way_alpha_bootstrap(alpha);
                              const auto res = min_set(g, model, Property::MonotoneDynamo,
                                                       search_opts(cap));
                              absorb(res.tally);
                              const auto lower =
                                  monotone_dynamo_lower(model, g.node_count(), tree);
                              (tree ? tree_checks : general_checks) += 1;
                              if (!res.found || !lower.value.at_most(Rational(res.min_size))) {
                                  ok = false;
                                  bad.push_back(ordered{{"graph", ng.name},
                                                        {"alpha", alpha.str()},
                                                        {"tree", tree},
                                                        {"min", res.min_size},
                                                        {"bound", lower.value.to_double()}});
                              }
                          }
                      };
                      for (const auto* ng : corpus_up_to(12)) run_case(*ng, false, 12);
                      for (const auto& ng : trees) run_case(ng, true, 14);
                      m["general_checks"] = general_checks;
                      m["tree_checks"] = tree_checks;
                      m["violations"] = bad;
                      return ok;
                  });
    }

    // ---- criterion 7: random-labeling dynamos and their expectation

    void check_labeling_expectation() {
        run_check("c07-labeling-expectation",
                  "all 100 sampled labeling sets certify as one-way fractional "
                  "dynamos; min sampled size <= expectation + 1; sample mean within "
                  "10% of sum(ceil(alpha*d)/(d+1))",
                  true, 60.0, [&](ordered& m) {
                      bool ok = true;
                      int combos = 0;
                      ordered bad = ordered::array();
                      int graph_index = 0;
                      for (const auto& ng : corpus) {
                          int alpha_index = 0;
                          for (const Rational alpha :
                               {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
                              const auto model = ThresholdModel::alpha_bootstrap(alpha);
                              const auto rep = dynamo_by_labeling(
                                  ng.graph, model,
                                  check_seed(0xD1CE0000ULL, graph_index, alpha_index), 100);
                              absorb(rep.tally);
                              ++combos;
                              const Rational expectation = labeling_expected_size(ng.graph, model);
                              const Rational mean = Rational::parse(rep.details.at("mean_size"));
                              const bool all_certified =
                                  rep.details.at("samples_certified") == "100";
                              const bool min_ok =
                                  Rational(rep.size) <= expectation + Rational(1);
                              const Rational gap =
                                  mean >= expectation ? mean - expectation : expectation - mean;
                              const bool mean_ok = gap <= expectation / Rational(10);
                              if (!all_certified || !min_ok || !mean_ok) {
                                  ok = false;
                                  bad.push_back(ordered{{"graph", ng.name},
                                                        {"alpha", alpha.str()},
                                                        {"certified", all_certified},
                                                        {"min_size", rep.size},
                                                        {"mean", mean.to_double()},
                                                        {"expected", expectation.to_double()}});
                              }
                              ++alpha_index;
                          }
                          ++graph_index;
                      }
                      m["combos"] = combos;
                      m["violations"] = bad;
                      return ok;
                  });
    }

    // ---- criterion 8: dense graphs have many small two-way dynamos

    void check_dense_small_dynamos() {
        run_check("c08-dense-small-dynamos",
                  "on K_n minus a perfect matching with min degree >= n/2 + r: the "
                  "dense construction yields a certified two-way dynamo of size r, "
                  "and the count of size-r dynamos grows at least like 0.5*(n2/n1)^r",
                  spec.fixed_grid_checks, 300.0, [&](ordered& m) {
                      bool ok = true;
                      ordered rows = ordered::array();
                      std::map<std::pair<int, int>, std::uint64_t> counts;
                      for (const int n : {20, 30, 40}) {
                          const Graph g = gen_complete_minus_matching(n);
                          for (const int r : {2, 3}) {
                              if (!gunderson_condition(n, g.min_degree(), r)) continue;
                              const auto rep = dense_small_dynamo(g, r, 0xDE5E ^ n ^ r);
                              absorb(rep.tally);
                              const auto count = count_small_dynamos(g, r);
                              absorb(count.tally);
                              counts[{n, r}] = count.count;
                              const bool good =
                                  rep.certified && rep.size == r && count.complete;
                              ok = ok && good;
                              rows.push_back(ordered{{"n", n},
                                                     {"r", r},
                                                     {"constructed_size", rep.size},
                                                     {"certified", rep.certified},
                                                     {"count", count.count}});
                          }
                      }
                      ordered growth = ordered::array();
                      for (const int r : {2, 3}) {
                          const std::uint64_t small = counts[{20, r}];
                          const std::uint64_t large = counts[{40, r}];
                          // count(40)/count(20) >= 0.5 * 2^r, cross-multiplied
                          const bool good = 2 * large >= (std::uint64_t{1} << r) * small;
                          ok = ok && good;
                          growth.push_back(ordered{{"r", r},
                                                   {"count_n20", small},
                                                   {"count_n40", large},
                                                   {"required_ratio", 0.5 * (1 << r)}});
                      }
                      m["cases"] = rows;
                      m["growth"] = growth;
                      return ok;
                  });
    }

    // ---- criterion 9: stable sets

    void check_stable_sets() {
        run_check("c09-stable-sets",
                  "partition construction yields certified stable sets of size <= "
                  "n/floor(1/alpha) + 2*floor(1/alpha); min stable >= "
                  "ceil(1/(1-alpha)); the bridged-clique gadget is stable at exactly "
                  "that size",
                  true, 0, [&](ordered& m) {
                      bool ok = true;
                      ordered bad = ordered::array();
                      int partition_checks = 0, oracle_checks = 0;
                      for (const auto* ng : corpus_up_to(12)) {
                          const Graph& g = ng->graph;
                          for (const Rational alpha : {Rational(1, 3), Rational(1, 2)}) {
                              const auto rep = stable_by_partition(g, alpha);
                              absorb(rep.tally);
                              ++partition_checks;
                              const std::int64_t c = (Rational(1) / alpha).floor();
                              const Rational cap_size =
                                  Rational(g.node_count(), c) + Rational(2 * c);
                              if (!rep.certified || !(Rational(rep.size) <= cap_size)) {
                                  ok = false;
                                  bad.push_back(ordered{{"graph", ng->name},
                                                        {"alpha", alpha.str()},
                                                        {"part", "partition"},
                                                        {"size", rep.size}});
                              }
                          }
                          for (const Rational alpha :
                               {Rational(1, 2), Rational(2, 3), Rational(4, 5)}) {
                              const auto model = ThresholdModel::two_way_alpha_bootstrap(alpha);
                              const auto res =
                                  min_set(g, model, Property::Stable, search_opts(12));
                              absorb(res.tally);
                              ++oracle_checks;
                              // The separation bound applies to proper stable
                              // subsets; when it exceeds n, the whole node set
                              // must be the only stable set.
                              const std::int64_t formula =
                                  (Rational(1) / (Rational(1) - alpha)).ceil();
                              const int n = g.node_count();
                              const std::int64_t lower = std::min<std::int64_t>(formula, n);
                              const bool clamped = formula > n;
                              const bool good =
                                  res.found && res.min_size >= lower &&
                                  (!clamped || res.min_size == n);
                              if (!good) {
                                  ok = false;
                                  bad.push_back(ordered{{"graph", ng->name},
                                                        {"alpha", alpha.str()},
                                                        {"part", "oracle"},
                                                        {"min", res.min_size},
                                                        {"lower", lower}});
                              }
                          }
                      }
                      ordered gadgets = ordered::array();
                      if (spec.fixed_grid_checks) {
                          for (const auto& [alpha, n] : std::vector<std::pair<Rational, int>>{
                                   {Rational(1, 2), 10},
                                   {Rational(2, 3), 9},
                                   {Rational(3, 4), 12},
                                   {Rational(4, 5), 10}}) {
                              const Graph g = gen_stable_tight(alpha, n);
                              const int s = static_cast<int>(
                                  (Rational(1) / (Rational(1) - alpha)).ceil());
                              NodeSet clique(n);
                              for (int v = n - s; v < n; ++v) clique.add(v);
                              const auto cert = is_stable(
                                  g, ThresholdModel::two_way_alpha_bootstrap(alpha), clique);
                              absorb(cert);
                              const bool good = cert.yes() && clique.count() == s;
                              ok = ok && good;
                              gadgets.push_back(ordered{{"alpha", alpha.str()},
                                                        {"n", n},
                                                        {"clique_size", s},
                                                        {"stable", cert.yes()}});
                          }
                      }
                      m["partition_checks"] = partition_checks;
                      m["oracle_checks"] = oracle_checks;
                      m["gadgets"] = gadgets;
                      m["violations"] = bad;
                      return ok;
                  });
    }

    // ---- criterion 10: immortal sets in the two-way absolute process

    void check_immortal_sets() {
        run_check("c10-immortal-sets",
                  "min two-way threshold-2 immortal set on C_n is n (odd) and n/2 "
                  "(even); the 3-regular chain on 18 nodes has no immortal set of "
                  "size <= 10 in the two-way threshold-3 process",
                  spec.fixed_grid_checks, 300.0, [&](ordered& m) {
                      bool ok = true;
                      ordered rows = ordered::array();
                      const auto r2 = ThresholdModel::two_way_r_bootstrap(2);
                      for (const int n : {5, 7, 9, 6, 8, 10}) {
                          const auto res =
                              min_set(gen_cycle(n), r2, Property::Immortal, search_opts(12));
                          absorb(res.tally);
                          const int expected = n % 2 == 1 ? n : n / 2;
                          ok = ok && res.found && res.min_size == expected;
                          rows.push_back(ordered{{"n", n},
                                                 {"min", res.min_size},
                                                 {"expected", expected}});
                      }
                      m["cycles"] = rows;

                      const Graph chain = gen_regular_chain(3, 18);
                      const auto res = min_set(chain, ThresholdModel::two_way_r_bootstrap(3),
                                               Property::Immortal, search_opts(18, 10));
                      absorb(res.tally);
                      const bool chain_ok = !res.found && res.exhaustive_up_to == 10;
                      ok = ok && chain_ok;
                      m["chain"] = ordered{{"n", 18},
                                           {"searched_up_to", res.exhaustive_up_to},
                                           {"found", res.found},
                                           {"examined", res.tally.examined},
                                           {"implied_lower", 11}};
                      return ok;
                  });
    }

    // ---- criterion 11: implications and monotone coupling

    void check_implications_coupling() {
        run_check("c11-implications-coupling",
                  "over 1000 random queries: monotone dynamo => dynamo, stable => "
                  "immortal, and c <= c' implies step(c) <= step(c')",
                  true, 0, [&](ordered& m) {
                      bool ok = true;
                      SplitMix64 rng(0xAB1E5EED);
                      int implication_violations = 0, coupling_violations = 0;
                      const auto graphs = corpus_up_to(12);
                      if (graphs.empty()) return false;
                      int performed = 0;
                      std::size_t model_cursor = 0;
                      for (int q = 0; q < 1000; ++q) {
                          const Graph& g = graphs[q % graphs.size()]->graph;
                          const int n = g.node_count();
                          const ThresholdModel* model = nullptr;
                          for (std::size_t tries = 0;
                               tries < spec.models.size() && !model; ++tries) {
                              const auto& cand =
                                  spec.models[(model_cursor++) % spec.models.size()];
                              if (cand.fractional() || cand.r() <= g.min_degree())
                                  model = &cand;
                          }
                          if (!model) continue;
                          ++performed;

                          NodeSet s(n);
                          while (s.empty())
                              for (int v = 0; v < n; ++v)
                                  if (rng.next() & 1) s.add(v);
                          const auto monotone = certify(g, *model, s, Property::MonotoneDynamo);
                          const auto dyn = certify(g, *model, s, Property::Dynamo);
                          const auto stable = certify(g, *model, s, Property::Stable);
                          const auto immortal = certify(g, *model, s, Property::Immortal);
                          for (const auto& cert : {monotone, dyn, stable, immortal})
                              absorb(cert);
                          if (monotone.yes() && !dyn.yes()) ++implication_violations;
                          if (stable.yes() && !immortal.yes()) ++implication_violations;

                          NodeSet big(n);
                          while (big.empty())
                              for (int v = 0; v < n; ++v)
                                  if (rng.next() & 1) big.add(v);
                          NodeSet small(n);
                          for (int v : big.to_vector())
                              if (rng.next() & 1) small.add(v);
                          if (!step(g, *model, small).is_subset_of(step(g, *model, big)))
                              ++coupling_violations;
                      }
                      ok = implication_violations == 0 && coupling_violations == 0 &&
                           performed == 1000;
                      m["queries"] = performed;
                      m["implication_violations"] = implication_violations;
                      m["coupling_violations"] = coupling_violations;
                      return ok;
                  });
    }

    // ---- criterion 12: termination discipline of every run in the suite

    void check_termination() {
        run_check("c12-termination",
                  "every two-way run across the suite ends in a fixed point or a "
                  "cycle of period <= 2 within the default budget; no indeterminate "
                  "verdicts",
                  true, 0, [&](ordered& m) {
                      // Dedicated sweep over corpus graphs and two-way models.
                      SplitMix64 rng(0x5EEDF00D);
                      std::uint64_t sweep_runs = 0;
                      for (const auto* ng : corpus_up_to(12)) {
                          const Graph& g = ng->graph;
                          const int n = g.node_count();
                          for (const auto& model : spec.models) {
                              if (!model.two_way()) continue;
                              if (!model.fractional() && model.r() > g.min_degree()) continue;
                              std::vector<NodeSet> starts;
                              for (int v = 0; v < n; ++v) {
                                  NodeSet s(n);
                                  s.add(v);
                                  starts.push_back(s);
                              }
                              starts.push_back(NodeSet::full(n));
                              for (int extra = 0; extra < 3; ++extra) {
                                  NodeSet s(n);
                                  for (int v = 0; v < n; ++v)
                                      if (rng.next() & 1) s.add(v);
                                  starts.push_back(s);
                              }
                              for (const auto& s : starts) {
                                  absorb_trace(run(g, model, s));
                                  ++sweep_runs;
                              }
                          }
                      }
                      m["sweep_runs"] = sweep_runs;
                      m["total_runs"] = report.tally.examined;
                      m["limit_reached"] = report.tally.limit_reached;
                      m["indeterminate"] = report.tally.indeterminate;
                      m["max_period"] = report.tally.max_period;
                      return report.tally.limit_reached == 0 &&
                             report.tally.indeterminate == 0 && report.tally.max_period <= 2;
                  });
    }

    // ---- bonus: closed-form tables bracket the oracle minima

    void check_table_consistency() {
        run_check("t01-table-consistency",
                  "for every corpus graph and model: closed-form lower <= exact "
                  "minimum <= closed-form upper, for dynamo, monotone dynamo, "
                  "stable and immortal",
                  true, 0, [&](ordered& m) {
                      bool ok = true;
                      int combos = 0;
                      ordered bad = ordered::array();
                      for (const auto* ng : corpus_up_to(10)) {
                          const Graph& g = ng->graph;
                          const int n = g.node_count();
                          const bool bip = bipartition(g).has_value();
                          for (const auto& model : spec.models) {
                              if (!model.fractional() && model.r() > g.min_degree()) continue;
                              ++combos;
                              const auto opts = search_opts(10);
                              const auto dyn = min_set(g, model, Property::Dynamo, opts);
                              const auto mono = min_set(g, model, Property::MonotoneDynamo, opts);
                              const auto stab = min_set(g, model, Property::Stable, opts);
                              const auto immo = min_set(g, model, Property::Immortal, opts);
                              for (const auto& res : {dyn, mono, stab, immo}) absorb(res.tally);

                              const auto table1 = dynamo_bounds(model, n, g.min_degree(), bip);
                              const auto mono_lower =
                                  monotone_dynamo_lower(model, n, is_tree(g));
                              const auto table2 =
                                  stable_immortal_bounds(model, n, parity_of(n));

                              const auto record = [&](const char* what, bool good) {
                                  if (!good) {
                                      ok = false;
                                      bad.push_back(ordered{{"graph", ng->name},
                                                            {"model", model.name()},
                                                            {"param",
                                                             model.parameter_string()},
                                                            {"violated", what}});
                                  }
                              };
                              record("dynamo-lower",
                                     dyn.found && table1.lower.at_most(Rational(dyn.min_size)));
                              record("dynamo-upper",
                                     dyn.found && table1.upper.at_least(Rational(dyn.min_size)));
                              record("monotone-lower",
                                     mono.found &&
                                         mono_lower.value.at_most(Rational(mono.min_size)));
                              record("stable-lower",
                                     stab.found &&
                                         table2.stable.lower.at_most(Rational(stab.min_size)));
                              record("stable-upper",
                                     stab.found &&
                                         table2.stable.upper.at_least(Rational(stab.min_size)));
                              record("immortal-lower",
                                     immo.found &&
                                         table2.immortal.lower.at_most(Rational(immo.min_size)));
                              record("immortal-upper",
                                     immo.found &&
                                         table2.immortal.upper.at_least(Rational(immo.min_size)));
                          }
                      }
                      m["combos"] = combos;
                      m["violations"] = bad;
                      return ok;
                  });
    }
};

}  // namespace

CorpusSpec default_corpus_spec() {
    CorpusSpec spec;
    const auto add = [&](std::string name, Graph g) {
        spec.graphs.push_back({std::move(name), std::move(g)});
    };
    for (int n = 4; n <= 8; ++n) add("complete-" + std::to_string(n), gen_complete(n));
    for (int n = 4; n <= 9; ++n) add("cycle-" + std::to_string(n), gen_cycle(n));
    for (int leaves = 4; leaves <= 7; ++leaves)
        add("star-" + std::to_string(leaves), gen_star(leaves));
    add("path-6", gen_path(6));
    add("path-10", gen_path(10));
    add("clique-leaves-3-9", gen_clique_with_leaves(3, 9));
    add("clique-leaves-4-8", gen_clique_with_leaves(4, 8));
    add("clique-leaves-3-12", gen_clique_with_leaves(3, 12));
    add("stable-tight-1d2-8", gen_stable_tight(Rational(1, 2), 8));
    add("stable-tight-2d3-9", gen_stable_tight(Rational(2, 3), 9));
    add("stable-tight-3d4-12", gen_stable_tight(Rational(3, 4), 12));
    add("petersen", gen_petersen());
    add("minus-matching-8", gen_complete_minus_matching(8));
    add("minus-matching-10", gen_complete_minus_matching(10));

    spec.random_graphs = RandomGraphSpec{};
    spec.random_trees = RandomTreeSpec{};

    spec.models = {
        ThresholdModel::r_bootstrap(1),
        ThresholdModel::r_bootstrap(2),
        ThresholdModel::r_bootstrap(3),
        ThresholdModel::two_way_r_bootstrap(1),
        ThresholdModel::two_way_r_bootstrap(2),
        ThresholdModel::two_way_r_bootstrap(3),
        ThresholdModel::alpha_bootstrap(Rational(1, 3)),
        ThresholdModel::alpha_bootstrap(Rational(1, 2)),
        ThresholdModel::alpha_bootstrap(Rational(2, 3)),
        ThresholdModel::two_way_alpha_bootstrap(Rational(1, 3)),
        ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2)),
        ThresholdModel::two_way_alpha_bootstrap(Rational(2, 3)),
        ThresholdModel::two_way_alpha_bootstrap(Rational(3, 4)),
        ThresholdModel::two_way_alpha_bootstrap(Rational(4, 5)),
    };
    return spec;
}

CorpusReport run_corpus_checks(const CorpusSpec& spec, std::ostream* progress) {
    if (spec.empty()) throw std::invalid_argument("corpus spec lists no graphs");
    if (spec.models.empty()) throw std::invalid_argument("corpus spec lists no models");

    Checker checker(spec, progress);
    checker.check_complete_and_regular();
    checker.check_cycle_singletons();
    checker.check_twoway_r1();
    checker.check_sqrt_lower_bound();
    checker.check_clique_leaves_tightness();
    checker.check_monotone_lower();
    checker.check_labeling_expectation();
    checker.check_dense_small_dynamos();
    checker.check_stable_sets();
    checker.check_immortal_sets();
    checker.check_implications_coupling();
    checker.check_termination();
    checker.check_table_consistency();
    return checker.report;
}

void write_report_jsonl(std::ostream& out, const CorpusReport& report, bool with_timestamp) {
    ordered header;
    header["type"] = "header";
    header["corpus_graphs"] = report.corpus_graphs;
    if (report.random_seed) header["random_seed"] = *report.random_seed;
    if (report.tree_seed) header["tree_seed"] = *report.tree_seed;
    if (with_timestamp) header["timestamp"] = static_cast<std::int64_t>(std::time(nullptr));
    out << header.dump() << "\n";

    int passed = 0, failed = 0, skipped = 0;
    for (const auto& check : report.checks) {
        ordered line;
        line["type"] = "check";
        line["id"] = check.id;
        line["claim"] = check.claim;
        if (check.skipped) {
            line["skipped"] = true;
            ++skipped;
        } else {
            line["pass"] = check.pass;
            (check.pass ? passed : failed) += 1;
        }
        line["measured"] = ordered::parse(check.measured);
        out << line.dump() << "\n";
    }

    ordered summary;
    summary["type"] = "summary";
    summary["passed"] = passed;
    summary["failed"] = failed;
    summary["skipped"] = skipped;
    summary["runs"] = report.tally.examined;
    summary["limit_reached"] = report.tally.limit_reached;
    summary["indeterminate"] = report.tally.indeterminate;
    summary["max_period"] = report.tally.max_period;
    out << summary.dump() << "\n";
}

}  // namespace dynamo
