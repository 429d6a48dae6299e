#include "dynamo/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "dynamo/bounds.hpp"
#include "dynamo/rng.hpp"

namespace dynamo {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

bool lex_less(const NodeSet& a, const NodeSet& b) { return a.to_vector() < b.to_vector(); }

std::string ids_string(const NodeSet& s) {
    std::string out;
    for (int v : s.to_vector()) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

NodeSet labeling_dynamo_set(const Graph& g, const ThresholdModel& m,
                            const std::vector<int>& label) {
    const int n = g.node_count();
    require(static_cast<int>(label.size()) == n, "label vector size mismatch");
    std::vector<char> seen(n + 1, 0);
    for (int l : label) {
        require(l >= 1 && l <= n && !seen[l], "labels must be a bijection onto 1..n");
        seen[l] = 1;
    }

    NodeSet set(n);
    for (int v = 0; v < n; ++v) {
        int earlier = 0;
        for (int u : g.neighbors(v))
            if (label[u] < label[v]) ++earlier;
        // v joins when its earlier neighbors cannot meet the threshold alone.
        const bool in_set = m.fractional()
                                ? static_cast<std::int64_t>(earlier) * m.alpha().den() <
                                      m.alpha().num() * static_cast<std::int64_t>(g.degree(v))
                                : earlier < m.r();
        if (in_set) set.add(v);
    }
    return set;
}

Rational labeling_expected_size(const Graph& g, const ThresholdModel& m) {
    Rational sum(0);
    for (int v = 0; v < g.node_count(); ++v) {
        const int d = g.degree(v);
        if (m.fractional()) {
            const Rational threshold = m.alpha() * Rational(d);
            sum = sum + Rational(threshold.ceil(), d + 1);
        } else {
            sum = sum + Rational(std::min(m.r(), d + 1), d + 1);
        }
    }
    return sum;
}

ConstructionReport dynamo_by_labeling(const Graph& g, const ThresholdModel& m, std::uint64_t seed,
                                      int samples) {
    require(!m.two_way(), "labeling construction applies to the one-way processes");
    require(samples >= 1, "need at least one sample");
    m.validate_for(g);

    const int n = g.node_count();
    ConstructionReport report;
    report.method = "labeling";
    SplitMix64 rng(seed);
    NodeSet best;
    bool have_best = false;
    int certified_yes = 0;
    std::int64_t size_sum = 0;
    std::vector<int> order;
    for (int s = 0; s < samples; ++s) {
        // Antithetic pairs: every labeling is uniform on its own, and each
        // odd draw reverses the previous one, cancelling most of the
        // sampling noise in the mean set size.
        if (s % 2 == 0) {
            order = rng.permutation(n);
        } else {
            for (int& x : order) x = n - 1 - x;
        }
        std::vector<int> label(n);
        for (int v = 0; v < n; ++v) label[v] = order[v] + 1;
        const NodeSet candidate = labeling_dynamo_set(g, m, label);
        size_sum += candidate.count();
        const Certificate sample_cert = certify(g, m, candidate, Property::Dynamo);
        report.tally.absorb(sample_cert);
        if (sample_cert.yes()) ++certified_yes;
        if (!have_best || candidate.count() < best.count() ||
            (candidate.count() == best.count() && lex_less(candidate, best))) {
            best = candidate;
            have_best = true;
        }
    }

    report.set = best;
    report.size = best.count();
    report.guarantee = labeling_expected_size(g, m);
    report.certificate = certify(g, m, best, Property::Dynamo);
    report.tally.absorb(report.certificate);
    report.certified = report.certificate.yes() && certified_yes == samples;
    report.details["samples"] = std::to_string(samples);
    report.details["seed"] = std::to_string(seed);
    report.details["samples_certified"] = std::to_string(certified_yes);
    report.details["mean_size"] = Rational(size_sum, samples).str();
    report.details["expected_size"] = report.guarantee.str();
    return report;
}

ConstructionReport dynamo_twoway_r1(const Graph& g) {
    const ThresholdModel m = ThresholdModel::two_way_r_bootstrap(1);
    m.validate_for(g);

    ConstructionReport report;
    report.method = "twoway-r1";
    NodeSet set(g.node_count());
    if (const auto parts = bipartition(g)) {
        const auto [u, v] = g.edges().front();
        set.add(u);
        set.add(v);
        report.guarantee = Rational(2);
        report.details["bipartite"] = "true";
    } else {
        const std::vector<int> cycle = find_odd_cycle(g);
        set.add(*std::min_element(cycle.begin(), cycle.end()));
        report.guarantee = Rational(1);
        report.details["bipartite"] = "false";
        report.details["odd_cycle_length"] = std::to_string(cycle.size());
    }
    report.set = set;
    report.size = set.count();
    report.certificate = certify(g, m, set, Property::Dynamo);
    report.tally.absorb(report.certificate);
    report.certified = report.certificate.yes();
    return report;
}

ConstructionReport dense_small_dynamo(const Graph& g, int r, std::uint64_t seed) {
    require(r >= 1, "need r >= 1");
    const int n = g.node_count();
    require(gunderson_condition(n, g.min_degree(), r),
            "density precondition failed: need min degree >= n/2 + r");
    const ThresholdModel m = ThresholdModel::two_way_r_bootstrap(r);
    m.validate_for(g);

    SplitMix64 rng(seed);
    std::vector<int> seed_set = rng.sample(n, 2 * r - 1);
    std::sort(seed_set.begin(), seed_set.end());

    // Among the r-subsets of the seed set, keep the one with the most nodes
    // having >= r neighbors inside it; strict improvement keeps the
    // lexicographically first maximizer.
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    NodeSet best;
    int best_covered = -1;
    for (;;) {
        NodeSet candidate(n);
        for (int i : pick) candidate.add(seed_set[i]);
        int covered = 0;
        for (int v = 0; v < n; ++v)
            if (intersection_size(g.adjacency_row(v), candidate) >= r) ++covered;
        if (covered > best_covered) {
            best_covered = covered;
            best = candidate;
        }
        int i = r - 1;
        while (i >= 0 && pick[i] == 2 * r - 2 - (r - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }

    // The pigeonhole floor n/(2r)^(2r) on the covered count.
    Rational floor_value(n);
    for (int i = 0; i < 2 * r; ++i) floor_value = floor_value / Rational(2 * r);

    ConstructionReport report;
    report.method = "dense";
    report.set = best;
    report.size = best.count();
    report.guarantee = Rational(r);
    report.certificate = certify(g, m, best, Property::Dynamo);
    report.tally.absorb(report.certificate);
    report.certified = report.certificate.yes();
    report.details["seed"] = std::to_string(seed);
    report.details["seed_set"] = ids_string(NodeSet::of(n, seed_set));
    report.details["covered"] = std::to_string(best_covered);
    report.details["covered_floor"] = floor_value.str();
    return report;
}

CountResult count_small_dynamos(const Graph& g, int r, std::uint64_t budget) {
    require(r >= 1, "need r >= 1");
    const ThresholdModel m = ThresholdModel::two_way_r_bootstrap(r);
    m.validate_for(g);
    const int n = g.node_count();

    CountResult result;
    std::vector<int> combo(r);
    for (int i = 0; i < r; ++i) combo[i] = i;
    const std::uint64_t total = binomial(n, r);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        if (result.tally.examined >= budget) {
            result.complete = false;
            return result;
        }
        const Certificate cert = certify(g, m, NodeSet::of(n, combo), Property::Dynamo);
        result.tally.absorb(cert);
        if (cert.yes()) ++result.count;
        // lexicographically next r-subset
        int i = r - 1;
        while (i >= 0 && combo[i] == n - r + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
    }
    return result;
}

ConstructionReport stable_by_partition(const Graph& g, const Rational& alpha) {
    require(Rational(0) < alpha && alpha <= Rational(1, 2), "needs alpha <= 1/2");
    const int c = static_cast<int>((Rational(1) / alpha).floor());
    const int n = g.node_count();
    const int size_floor = n / c - 1;

    // Deal nodes round-robin, then move single nodes while a move strictly
    // reduces cross-part edges and keeps every part at the size floor.
    std::vector<int> part(n);
    std::vector<int> part_size(c, 0);
    for (int v = 0; v < n; ++v) {
        part[v] = v % c;
        ++part_size[v % c];
    }

    int moves = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < n && !improved; ++v) {
            if (part_size[part[v]] - 1 < size_floor) continue;
            std::vector<int> inside(c, 0);
            for (int u : g.neighbors(v)) ++inside[part[u]];
            for (int target = 0; target < c; ++target) {
                if (target == part[v] || inside[target] <= inside[part[v]]) continue;
                --part_size[part[v]];
                part[v] = target;
                ++part_size[target];
                ++moves;
                improved = true;
                break;
            }
        }
    }

    int best_part = 0;
    for (int p = 1; p < c; ++p)
        if (part_size[p] > part_size[best_part]) best_part = p;
    NodeSet set(n);
    for (int v = 0; v < n; ++v)
        if (part[v] == best_part) set.add(v);

    bool all_meet = true;
    for (int v : set.to_vector())
        if (!(Rational(intersection_size(g.adjacency_row(v), set)) >=
              alpha * Rational(g.degree(v))))
            all_meet = false;

    int cross = 0;
    for (const auto& [u, v] : g.edges())
        if (part[u] != part[v]) ++cross;

    ConstructionReport report;
    report.method = "stable-partition";
    report.set = set;
    report.size = set.count();
    report.guarantee = Rational(n, c) + Rational(2 * c);
    report.certificate =
        certify(g, ThresholdModel::two_way_alpha_bootstrap(alpha), set, Property::Stable);
    report.tally.absorb(report.certificate);
    report.certified = report.certificate.yes();
    report.details["parts"] = std::to_string(c);
    report.details["moves"] = std::to_string(moves);
    report.details["cross_edges"] = std::to_string(cross);
    report.details["all_meet_threshold"] = all_meet ? "true" : "false";
    return report;
}

namespace {

struct CycleSearch {
    const Graph& g;
    std::vector<int> path;
    std::vector<char> on_path;
    std::vector<int> best;
    int root = 0;

    explicit CycleSearch(const Graph& graph)
        : g(graph), on_path(graph.node_count(), 0) {}

    void extend(int unused_above_root) {
        if (static_cast<int>(best.size()) == g.node_count()) return;  // Hamiltonian, done
        const int cur = path.back();
        // Even using every remaining eligible node cannot beat the best.
        if (static_cast<int>(path.size()) + unused_above_root <= static_cast<int>(best.size()))
            return;
        for (int next : g.neighbors(cur)) {
            if (next == root && path.size() >= 3 && path.size() > best.size()) best = path;
            if (next <= root || on_path[next]) continue;
            path.push_back(next);
            on_path[next] = 1;
            extend(unused_above_root - 1);
            on_path[next] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<int> longest_cycle(const Graph& g, int node_guard) {
    const int n = g.node_count();
    if (n > node_guard)
        throw std::invalid_argument("exact cycle search limited to " +
                                    std::to_string(node_guard) + " nodes, graph has " +
                                    std::to_string(n));
    CycleSearch search(g);
    // Canonical form: enumerate only cycles whose smallest node is the root.
    for (int root = 0; root < n; ++root) {
        if (static_cast<int>(search.best.size()) == n) break;
        search.root = root;
        search.path = {root};
        search.on_path.assign(n, 0);
        search.on_path[root] = 1;
        search.extend(n - root - 1);
    }
    return search.best;
}

namespace {

std::vector<int> alternate_half(const std::vector<int>& cycle) {
    std::vector<int> out;
    for (std::size_t i = 1; i < cycle.size(); i += 2) out.push_back(cycle[i]);
    return out;
}

}  // namespace

ConstructionReport immortal_r2(const Graph& g, int node_guard) {
    const int n = g.node_count();
    require(g.min_degree() >= 2, "needs minimum degree 2");
    const ThresholdModel m = ThresholdModel::two_way_r_bootstrap(2);

    const std::vector<int> cycle = longest_cycle(g, node_guard);
    const int k = static_cast<int>(cycle.size());

    ConstructionReport report;
    report.method = "immortal-r2";
    report.guarantee = n % 2 == 0 ? Rational(n, 2) : Rational(n);
    report.details["longest_cycle"] = std::to_string(k);

    std::vector<int> members;
    if (k % 2 == 0) {
        members = alternate_half(cycle);
        report.details["case"] = "even-cycle-half";
    } else if (2 * k <= n || k == n) {
        members = cycle;
        report.details["case"] = k == n ? "odd-hamiltonian" : "short-cycle";
    } else {
        // Odd cycle longer than n/2: walk outward from a neighbor of the
        // cycle until the walk hits the cycle again or revisits itself.
        NodeSet on_cycle = NodeSet::of(n, cycle);
        int start = -1, anchor = -1;
        for (int v = 0; v < n && start < 0; ++v) {
            if (on_cycle.test(v)) continue;
            for (int u : g.neighbors(v)) {
                if (on_cycle.test(u)) {
                    start = v;
                    anchor = u;
                    break;
                }
            }
        }
        require(start >= 0, "internal: no attachment point next to the cycle");

        std::vector<int> walk{anchor, start};
        std::vector<int> walk_pos(n, -1);
        walk_pos[anchor] = 0;
        walk_pos[start] = 1;
        int prev = anchor, cur = start;
        for (;;) {
            int next = -1;
            for (int u : g.neighbors(cur)) {
                if (u != prev) {
                    next = u;
                    break;
                }
            }
            if (on_cycle.test(next)) {
                if (next == anchor) {
                    // Closed back through the attachment node: the walk
                    // itself is a cycle living outside the long cycle.
                    members = walk;
                    report.details["case"] = "outside-cycle-via-anchor";
                } else {
                    // Path between two cycle nodes: of the two cycles it
                    // forms with the odd cycle, take the even one, then
                    // half of it.
                    const int pos_a = static_cast<int>(
                        std::find(cycle.begin(), cycle.end(), anchor) - cycle.begin());
                    const int pos_b = static_cast<int>(
                        std::find(cycle.begin(), cycle.end(), next) - cycle.begin());
                    const int forward = (pos_a - pos_b + k) % k;  // edges next -> anchor
                    std::vector<int> merged = walk;
                    merged.push_back(next);
                    if ((static_cast<int>(merged.size()) - 1 + forward) % 2 == 0) {
                        for (int s = 1; s < forward; ++s)
                            merged.push_back(cycle[(pos_b + s) % k]);
                    } else {
                        for (int s = 1; s < k - forward; ++s)
                            merged.push_back(cycle[(pos_b - s + k) % k]);
                    }
                    members = alternate_half(merged);
                    report.details["case"] = "merged-even-cycle-half";
                }
                break;
            }
            if (walk_pos[next] >= 0) {
                members.assign(walk.begin() + walk_pos[next], walk.end());
                report.details["case"] = "outside-cycle-revisit";
                break;
            }
            walk.push_back(next);
            walk_pos[next] = static_cast<int>(walk.size()) - 1;
            prev = cur;
            cur = next;
        }
    }

    report.set = NodeSet::of(n, members);
    report.size = report.set.count();
    report.certificate = certify(g, m, report.set, Property::Immortal);
    report.tally.absorb(report.certificate);
    report.certified = report.certificate.yes();
    return report;
}

}  // namespace dynamo
