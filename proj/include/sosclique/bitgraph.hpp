#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace sosclique {

// Dynamic bitset with the handful of operations the clique search needs.
// Capacity is fixed at construction.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    // Sets bits 0..m-1.
    void fill_first(int m) {
        clear();
        for (int i = 0; i < m; ++i) set(i);
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    // Lowest set bit strictly above i, or -1.
    int next_after(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t wi = std::size_t(i) >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(wi) * 64 + std::countr_zero(w);
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    // Clears bits 0..i.
    void reset_through(int i) {
        if (i < 0) return;
        std::size_t wi = std::size_t(i) >> 6;
        for (std::size_t j = 0; j < wi && j < w_.size(); ++j) w_[j] = 0;
        if (wi < w_.size()) w_[wi] &= ~(~std::uint64_t{0} >> (63 - (i & 63)));
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool operator==(const Bitset&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Undirected graph over vertices 0..n-1 with bitset adjacency rows.
struct BitGraph {
    int n = 0;
    std::vector<Bitset> adj;

    BitGraph() = default;
    explicit BitGraph(int vertices) : n(vertices), adj(vertices, Bitset(vertices)) {}

    void add_edge(int u, int v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (int v = 0; v < n; ++v) m += std::size_t(degree(v));
        return m / 2;
    }

    // Smallest-last elimination order: position i holds the vertex removed
    // i-th when repeatedly deleting a minimum-degree vertex.  Ties break on
    // the lowest vertex id.
    std::vector<int> degeneracy_order() const;

    // Graph with vertex order[i] renamed to i.
    BitGraph relabeled(const std::vector<int>& order) const;
};

}  // namespace sosclique
