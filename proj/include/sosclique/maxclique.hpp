#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sosclique/bitgraph.hpp"

namespace sosclique {

struct MaxCliqueOptions {
    // Node-expansion limit for the branch-and-bound search.
    std::uint64_t budget = 100'000'000;
    // Threads used for the initial heuristic portfolio.  The portfolio and
    // the branch-and-bound itself are deterministic, so the result is
    // bit-identical for every worker count.
    int workers = 1;
};

struct MaxCliqueResult {
    std::vector<int> clique;  // ascending vertex ids
    bool exact = false;       // true iff the search completed within budget
    std::uint64_t nodes = 0;  // expansions actually spent
};

// Exact maximum clique via branch-and-bound with a greedy colouring bound
// over bitset candidate sets; vertices are pre-sorted by degeneracy order.
// On completion the returned clique is maximum and, among all maximum
// cliques, the lexicographically least vertex-index set.  When the budget
// runs out the best clique found so far is returned with exact = false.
MaxCliqueResult max_clique(const BitGraph& g, const MaxCliqueOptions& opt = {});

// Deterministic greedy clique portfolio, exposed for seeding and tests.
std::vector<int> heuristic_clique(const BitGraph& g, int workers = 1);

// Lexicographically least clique of exactly `size`, assuming the graph
// contains one; nullopt when the node budget dies first.  `nodes`
// accumulates expansions.
std::optional<std::vector<int>> lex_least_clique(const BitGraph& g, int size,
                                                 std::uint64_t budget, std::uint64_t* nodes);

}  // namespace sosclique
