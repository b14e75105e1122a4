#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sosclique/bitgraph.hpp"
#include "sosclique/maxclique.hpp"
#include "sosclique/rootsys.hpp"

namespace sosclique {

using SigVec = std::vector<std::int8_t>;

// Entries in {-1,0,1} with exactly k of each sign.
bool is_valid_signature(const SigVec& v, int k);
bool is_valid_signature(const std::vector<int>& v, int k);

// The coordinate sum of a strongly orthogonal k-set in type A: a vector over
// {-1,0,+1} with exactly k entries of each sign.
class Signature {
public:
    static Signature make(SigVec entries, int k);
    static Signature make(const std::vector<int>& entries, int k);

    const SigVec& entries() const { return entries_; }
    int k() const { return k_; }
    int ell() const { return int(entries_.size()) - 1; }

    std::vector<int> positive_support() const;  // ascending indices
    std::vector<int> negative_support() const;
    std::vector<int> as_ints() const { return {entries_.begin(), entries_.end()}; }

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    Signature(SigVec entries, int k) : entries_(std::move(entries)), k_(k) {}
    SigVec entries_;
    int k_;
};

// A pairwise strongly orthogonal set of roots.  Members are kept sorted so
// equality is set equality.
struct SOSet {
    std::shared_ptr<const RootSystem> system;
    std::vector<Root> members;

    friend bool operator==(const SOSet& a, const SOSet& b) {
        return a.members == b.members;
    }
};

// Neither the sum nor the difference of a and b lies in R, nor is either
// zero (so a root is never strongly orthogonal to itself or its negative).
// Both arguments must belong to R.
bool strongly_orthogonal(const RootSystem& r, const Root& a, const Root& b);

// Streams every k-element pairwise strongly orthogonal subset exactly once,
// in lexicographic order of the sorted member lists.
class SosEnumerator {
public:
    SosEnumerator(std::shared_ptr<const RootSystem> system, int k);
    std::optional<SOSet> next();

private:
    bool descend(int from);
    std::shared_ptr<const RootSystem> system_;
    int k_;
    std::vector<int> stack_;        // chosen root indices, ascending
    std::vector<Bitset> compat_;    // compatible candidates per depth
    BitGraph so_graph_;
    bool done_ = false;
    bool primed_ = false;
};

std::vector<SOSet> enumerate_sos(std::shared_ptr<const RootSystem> system, int k);

// Graph on the roots with edges between strongly orthogonal pairs.
BitGraph strong_orthogonality_graph(const RootSystem& r);

// max{k : SOS_k(R) nonempty}, by exact clique search.  Throws when the
// search budget is exhausted (it never is at the supported ranks).
int max_sos_size(const RootSystem& r, const MaxCliqueOptions& opt = {});

// The witness set {e_{1+j} - e_{k+1+j} : j = 0..k-1} in A_ell; requires
// 2k <= ell+1.
SOSet canonical_sos(int k, int ell);

// Coordinate-wise sum of the members (type A only).
Signature signature(const SOSet& g);

// Pairs the i-th smallest positive coordinate with the i-th smallest
// negative coordinate.  signature(signature_to_sos(s)) == s.
SOSet signature_to_sos(const Signature& s);
SOSet signature_to_sos(const Signature& s, std::shared_ptr<const RootSystem> system);

}  // namespace sosclique
