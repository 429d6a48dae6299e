#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dynamo {

/// Subset of {0..n-1} as a packed bit vector. Bits at positions >= n are
/// always zero, so word-wise equality and popcounts are exact.
class NodeSet {
public:
    NodeSet() = default;

    explicit NodeSet(int universe) : n_(universe), w_(word_count(universe), 0) {}

    static NodeSet full(int universe) {
        NodeSet s(universe);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    static NodeSet of(int universe, std::initializer_list<int> members) {
        NodeSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    static NodeSet of(int universe, const std::vector<int>& members) {
        NodeSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool is_full() const { return count() == n_; }

    bool operator==(const NodeSet&) const = default;

    bool is_subset_of(const NodeSet& other) const {
        assert(n_ == other.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
    }

    NodeSet& operator|=(const NodeSet& other) {
        assert(n_ == other.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
        return *this;
    }

    NodeSet& operator&=(const NodeSet& other) {
        assert(n_ == other.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
        return *this;
    }

    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }

    /// Members of *this that are not in other.
    NodeSet minus(const NodeSet& other) const {
        assert(n_ == other.n_);
        NodeSet out(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] = w_[i] & ~other.w_[i];
        return out;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    friend int intersection_size(const NodeSet& a, const NodeSet& b) {
        assert(a.n_ == b.n_);
        int c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

private:
    static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

    void mask_tail() {
        const int rem = n_ & 63;
        if (rem && !w_.empty()) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace dynamo
