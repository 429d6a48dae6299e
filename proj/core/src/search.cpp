#include "dynamo/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace dynamo {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

void RunTally::absorb(const Certificate& c) {
    ++examined;
    if (c.verdict == Verdict::Indeterminate) ++indeterminate;
    if (c.trace.outcome == Outcome::LimitReached) ++limit_reached;
    if (c.trace.outcome == Outcome::FixedPoint) max_period = std::max(max_period, 1);
    if (c.trace.outcome == Outcome::Cycle) max_period = std::max(max_period, c.trace.period);
}

void RunTally::merge(const RunTally& other) {
    examined += other.examined;
    indeterminate += other.indeterminate;
    limit_reached += other.limit_reached;
    max_period = std::max(max_period, other.max_period);
}

namespace {

// Lexicographic combination enumeration over sorted index vectors.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Combination with the given lexicographic rank.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> c(k);
    int v = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            const std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
        }
        c[i] = v++;
    }
    return c;
}

NodeSet to_set(int n, const std::vector<int>& members) { return NodeSet::of(n, members); }

struct WorkerFind {
    bool found = false;
    std::uint64_t rank = 0;
    NodeSet set;
    RunTally tally;
};

// Scans ranks [begin, end) of the k-subsets in order, stopping at the first
// certified set (later ranks in this range cannot beat it) or when another
// worker already holds a better rank.
WorkerFind scan_range(const Graph& g, const ThresholdModel& m, Property property, int k,
                      std::uint64_t begin, std::uint64_t end, int round_limit,
                      std::atomic<std::uint64_t>& best_rank) {
    WorkerFind result;
    if (begin >= end) return result;
    std::vector<int> combo = unrank_combination(g.node_count(), k, begin);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
        if (best_rank.load(std::memory_order_relaxed) < begin) return result;
        const Certificate cert =
            certify(g, m, to_set(g.node_count(), combo), property, round_limit);
        result.tally.absorb(cert);
        if (cert.verdict == Verdict::Yes) {
            result.found = true;
            result.rank = rank;
            result.set = to_set(g.node_count(), combo);
            std::uint64_t seen = best_rank.load(std::memory_order_relaxed);
            while (rank < seen && !best_rank.compare_exchange_weak(seen, rank)) {
            }
            return result;
        }
        next_combination(combo, g.node_count());
    }
    return result;
}

struct SizePass {
    bool found = false;
    NodeSet witness;
    RunTally tally;
};

SizePass search_size(const Graph& g, const ThresholdModel& m, Property property, int k,
                     const SearchOptions& options) {
    const int n = g.node_count();
    const std::uint64_t total = binomial(n, k);
    SizePass pass;

    const int workers = std::max(1, options.workers);
    if (workers == 1 || total < 256) {
        std::vector<int> combo(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        for (std::uint64_t rank = 0; rank < total; ++rank) {
            const Certificate cert = certify(g, m, to_set(n, combo), property, options.round_limit);
            pass.tally.absorb(cert);
            if (cert.verdict == Verdict::Yes) {
                pass.found = true;
                pass.witness = to_set(n, combo);
                return pass;
            }
            next_combination(combo, n);
        }
        return pass;
    }

    std::atomic<std::uint64_t> best_rank{std::numeric_limits<std::uint64_t>::max()};
    std::vector<WorkerFind> finds(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            finds[w] = scan_range(g, m, property, k, begin, end, options.round_limit, best_rank);
        });
    }
    for (auto& t : pool) t.join();

    const WorkerFind* best = nullptr;
    for (const auto& f : finds) {
        pass.tally.merge(f.tally);
        if (f.found && (!best || f.rank < best->rank)) best = &f;
    }
    if (best) {
        pass.found = true;
        pass.witness = best->set;
    }
    return pass;
}

void check_cap(const Graph& g, const SearchOptions& options) {
    if (g.node_count() > options.node_cap)
        throw std::invalid_argument("graph has " + std::to_string(g.node_count()) +
                                    " nodes, search cap is " + std::to_string(options.node_cap));
}

}  // namespace

SearchResult min_set(const Graph& g, const ThresholdModel& m, Property property,
                     const SearchOptions& options) {
    check_cap(g, options);
    m.validate_for(g);
    const int n = g.node_count();
    const int max_size = options.max_size < 0 ? n : std::min(options.max_size, n);

    SearchResult result;
    result.property = property;
    for (int k = 1; k <= max_size; ++k) {
        SizePass pass = search_size(g, m, property, k, options);
        result.tally.merge(pass.tally);
        if (pass.found) {
            result.found = true;
            result.min_size = k;
            result.witness = pass.witness;
            result.exhaustive_up_to = k - 1;
            return result;
        }
        result.exhaustive_up_to = k;
    }
    return result;
}

SetListResult all_min_sets(const Graph& g, const ThresholdModel& m, Property property, int size,
                           const SearchOptions& options) {
    check_cap(g, options);
    m.validate_for(g);
    const int n = g.node_count();
    if (size < 1 || size > n) throw std::invalid_argument("subset size out of range");

    SetListResult result;
    std::vector<int> combo(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    const std::uint64_t total = binomial(n, size);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        const Certificate cert = certify(g, m, to_set(n, combo), property, options.round_limit);
        result.tally.absorb(cert);
        if (cert.verdict == Verdict::Yes) result.sets.push_back(to_set(n, combo));
        next_combination(combo, n);
    }
    return result;
}

}  // namespace dynamo
