#include "sosclique/maxclique.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

namespace sosclique {

namespace {

// Maximal clique grown greedily along the given vertex order.
std::vector<int> greedy_clique(const BitGraph& g, const std::vector<int>& order) {
    std::vector<int> clique;
    Bitset allowed(g.n);
    for (int v = 0; v < g.n; ++v) allowed.set(v);
    for (int v : order) {
        if (!allowed.test(v)) continue;
        clique.push_back(v);
        allowed &= g.adj[v];
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

std::vector<std::vector<int>> portfolio_orders(const BitGraph& g) {
    const int n = g.n;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);

    std::vector<std::vector<int>> orders;
    orders.push_back(base);

    std::vector<int> rev(base.rbegin(), base.rend());
    orders.push_back(rev);

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    auto by_deg_desc = base;
    std::stable_sort(by_deg_desc.begin(), by_deg_desc.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    orders.push_back(by_deg_desc);

    auto degen = g.degeneracy_order();
    orders.push_back(degen);
    orders.emplace_back(degen.rbegin(), degen.rend());

    for (std::uint64_t seed : {UINT64_C(0x5eed), UINT64_C(0xbadc0de), UINT64_C(0x90211)}) {
        std::mt19937_64 rng(seed);
        auto shuffled = base;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        orders.push_back(std::move(shuffled));
    }
    return orders;
}

// Tomita-style expansion state.  Single-threaded and deterministic; the
// caller owns the node budget.
class Searcher {
public:
    Searcher(const BitGraph& g, std::uint64_t budget, std::uint64_t* nodes)
        : g_(g), budget_(budget), nodes_(nodes), colors_(g.n + 1) {}

    // Improves `best` in place.  Returns true when the search space was
    // exhausted within budget.  The graph is assumed degeneracy-ordered:
    // vertex v is branched as the lowest member of its cliques, so each
    // subproblem is confined to the right-neighborhood of v.
    bool maximize(std::vector<int>& best) {
        best_ = &best;
        target_ = -1;
        found_.clear();
        aborted_ = false;
        for (int v = 0; v < g_.n && !aborted_; ++v) {
            Bitset p = g_.adj[v];
            p.reset_through(v);
            if (1 + p.count() <= int(best.size())) continue;
            cur_.assign(1, v);
            if (p.any()) {
                expand(std::move(p), 0);
            } else if (cur_.size() > best.size()) {
                best = cur_;
            }
        }
        cur_.clear();
        return !aborted_;
    }

    // Decision variant: is there a clique of size `target` inside `cand`?
    // `hit` receives the witness when found.  Returns false as well when the
    // budget ran out before the question was settled.
    bool exists(Bitset cand, int target, std::vector<int>* hit, bool* settled) {
        if (target <= 0) {
            if (hit) hit->clear();
            *settled = true;
            return true;
        }
        dummy_best_.assign(std::size_t(target) - 1, -1);
        best_ = &dummy_best_;
        target_ = target;
        found_.clear();
        aborted_ = false;
        cur_.clear();
        expand(std::move(cand), 0);
        *settled = !aborted_;
        if ((int)found_.size() == target) {
            if (hit) *hit = found_;
            return true;
        }
        return false;
    }

    bool aborted() const { return aborted_; }

private:
    struct ColorOrder {
        std::vector<int> v;
        std::vector<int> bound;
    };

    // Greedy sequential colouring; emits vertices grouped by colour class so
    // the bound column is nondecreasing.
    void color_sort(const Bitset& p, ColorOrder& out) {
        out.v.clear();
        out.bound.clear();
        Bitset rest = p;
        int color = 0;
        while (rest.any()) {
            ++color;
            Bitset avail = rest;
            while (true) {
                int v = avail.first();
                if (v < 0) break;
                avail.reset(v);
                avail.and_not(g_.adj[v]);
                rest.reset(v);
                out.v.push_back(v);
                out.bound.push_back(color);
            }
        }
    }

    void expand(Bitset p, int depth) {
        if (aborted_ || !found_.empty()) return;
        if (++*nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        ColorOrder& co = colors_[depth];
        color_sort(p, co);
        for (int idx = int(co.v.size()) - 1; idx >= 0; --idx) {
            if (aborted_ || !found_.empty()) return;
            if (int(cur_.size()) + co.bound[idx] <= int(best_->size())) return;
            int v = co.v[idx];
            cur_.push_back(v);
            if (target_ > 0 && int(cur_.size()) == target_) {
                found_ = cur_;
                std::sort(found_.begin(), found_.end());
                cur_.pop_back();
                return;
            }
            Bitset next = p & g_.adj[v];
            if (next.any()) {
                expand(std::move(next), depth + 1);
            } else if (cur_.size() > best_->size()) {
                *best_ = cur_;
                std::sort(best_->begin(), best_->end());
            }
            cur_.pop_back();
            p.reset(v);
        }
    }

    const BitGraph& g_;
    std::uint64_t budget_;
    std::uint64_t* nodes_;
    std::vector<ColorOrder> colors_;
    std::vector<int>* best_ = nullptr;
    std::vector<int> dummy_best_;
    std::vector<int> cur_;
    std::vector<int> found_;
    int target_ = -1;
    bool aborted_ = false;
};

// Lexicographically least maximum clique, rebuilt one vertex at a time with
// decision searches once the clique number is known.
bool lexmin_witness(const BitGraph& g, int omega, std::uint64_t budget,
                    std::uint64_t* nodes, std::vector<int>& out) {
    out.clear();
    Bitset cand(g.n);
    for (int v = 0; v < g.n; ++v) cand.set(v);
    Searcher s(g, budget, nodes);
    int need = omega;
    while (need > 0) {
        bool chosen = false;
        for (int v = cand.first(); v >= 0; v = cand.next_after(v)) {
            Bitset rest = cand & g.adj[v];
            rest.reset_through(v);
            bool settled = false;
            bool ok = s.exists(rest, need - 1, nullptr, &settled);
            if (!settled) return false;
            if (ok) {
                out.push_back(v);
                cand = rest;
                --need;
                chosen = true;
                break;
            }
        }
        if (!chosen) return false;  // cannot happen for a correct omega
    }
    return true;
}

}  // namespace

std::vector<int> heuristic_clique(const BitGraph& g, int workers) {
    auto orders = portfolio_orders(g);
    std::vector<std::vector<int>> cliques(orders.size());

    if (workers <= 1) {
        for (std::size_t i = 0; i < orders.size(); ++i)
            cliques[i] = greedy_clique(g, orders[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next.fetch_add(1); i < orders.size(); i = next.fetch_add(1))
                cliques[i] = greedy_clique(g, orders[i]);
        };
        std::vector<std::thread> pool;
        int spawn = std::min<int>(workers, int(orders.size()));
        pool.reserve(spawn);
        for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // Deterministic merge: size first, then the lexicographically least set.
    std::vector<int> best;
    for (auto& c : cliques) {
        if (c.size() > best.size() || (c.size() == best.size() && c < best)) best = std::move(c);
    }
    return best;
}

std::optional<std::vector<int>> lex_least_clique(const BitGraph& g, int size,
                                                 std::uint64_t budget, std::uint64_t* nodes) {
    std::vector<int> out;
    if (!lexmin_witness(g, size, budget, nodes, out)) return std::nullopt;
    return out;
}

MaxCliqueResult max_clique(const BitGraph& g, const MaxCliqueOptions& opt) {
    MaxCliqueResult res;
    if (g.n == 0) {
        res.exact = true;
        return res;
    }

    std::vector<int> seed = heuristic_clique(g, opt.workers);

    // Search in degeneracy order; keep original ids for reporting.
    auto order = g.degeneracy_order();
    BitGraph h = g.relabeled(order);
    std::vector<int> best_h(seed.size(), -1);  // size-only seed, ids filled on improvement

    Searcher searcher(h, opt.budget, &res.nodes);
    bool complete = searcher.maximize(best_h);

    std::vector<int> best;
    if (best_h.empty() || best_h.front() >= 0) {
        best.reserve(best_h.size());
        for (int v : best_h) best.push_back(order[v]);
        std::sort(best.begin(), best.end());
    } else {
        best = seed;  // branch-and-bound never improved on the portfolio
    }

    if (!complete) {
        res.clique = std::move(best);
        res.exact = false;
        return res;
    }

    res.exact = true;
    std::vector<int> lexmin;
    if (lexmin_witness(g, int(best.size()), opt.budget, &res.nodes, lexmin)) {
        res.clique = std::move(lexmin);
    } else {
        res.clique = std::move(best);  // budget died during reconstruction
    }
    return res;
}

}  // namespace sosclique
