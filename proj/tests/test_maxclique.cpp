#include <doctest.h>

#include <random>

#include "sosclique/maxclique.hpp"

using namespace sosclique;

namespace {

// Exhaustive maximum clique over all vertex subsets; only for tiny graphs.
// Returns the lexicographically least maximum set.
std::vector<int> brute_max_clique(const BitGraph& g) {
    std::vector<int> best;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        if (verts.size() < best.size()) continue;
        bool clique = true;
        for (std::size_t i = 0; clique && i < verts.size(); ++i)
            for (std::size_t j = i + 1; clique && j < verts.size(); ++j)
                if (!g.has_edge(verts[i], verts[j])) clique = false;
        if (!clique) continue;
        if (verts.size() > best.size() || (verts.size() == best.size() && verts < best))
            best = verts;
    }
    return best;
}

BitGraph random_graph(int n, double p, std::mt19937_64& rng) {
    BitGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("toy graphs") {
    BitGraph triangle(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    auto res = max_clique(triangle);
    CHECK(res.exact);
    CHECK(res.clique == std::vector<int>{0, 1, 2});

    BitGraph edgeless(5);
    res = max_clique(edgeless);
    CHECK(res.exact);
    CHECK(res.clique.size() == 1);
    CHECK(res.clique == std::vector<int>{0});  // lexicographically least

    BitGraph empty(0);
    res = max_clique(empty);
    CHECK(res.exact);
    CHECK(res.clique.empty());
}

TEST_CASE("matches brute force on random graphs and returns the lex-least witness") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + int(rng() % 11);  // 4..14
        double p = 0.2 + 0.6 * double(rng() % 100) / 100.0;
        BitGraph g = random_graph(n, p, rng);
        auto expected = brute_max_clique(g);
        auto res = max_clique(g);
        INFO("trial " << trial << ", n=" << n << ", p=" << p);
        REQUIRE(res.exact);
        CHECK(res.clique == expected);
    }
}

TEST_CASE("budget exhaustion reports a usable lower bound deterministically") {
    std::mt19937_64 rng(7);
    BitGraph g = random_graph(40, 0.8, rng);
    MaxCliqueOptions opt;
    opt.budget = 3;
    auto res1 = max_clique(g, opt);
    CHECK_FALSE(res1.exact);
    CHECK(!res1.clique.empty());
    for (std::size_t i = 0; i < res1.clique.size(); ++i)
        for (std::size_t j = i + 1; j < res1.clique.size(); ++j)
            CHECK(g.has_edge(res1.clique[i], res1.clique[j]));

    opt.workers = 4;
    auto res4 = max_clique(g, opt);
    CHECK(res1.clique == res4.clique);
    CHECK(res1.exact == res4.exact);
}

TEST_CASE("worker count never changes the answer") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        BitGraph g = random_graph(30, 0.5, rng);
        MaxCliqueOptions one, many;
        many.workers = 8;
        auto a = max_clique(g, one);
        auto b = max_clique(g, many);
        CHECK(a.exact == b.exact);
        CHECK(a.clique == b.clique);
    }
}

TEST_CASE("relabeling keeps the clique number") {
    std::mt19937_64 rng(123);
    BitGraph g = random_graph(20, 0.5, rng);
    auto order = g.degeneracy_order();
    BitGraph h = g.relabeled(order);
    CHECK(max_clique(g).clique.size() == max_clique(h).clique.size());
}
