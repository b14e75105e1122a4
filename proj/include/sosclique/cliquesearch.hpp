#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sosclique/maxclique.hpp"
#include "sosclique/sos.hpp"

namespace sosclique {

// Overflow-checked binomial coefficient.
long long binomial(int n, int r);

// A finite list of distinct signatures sharing (k, ell); the object the
// clique certificates carry.
struct CliqueFamily {
    int k = 1;
    int ell = 1;
    std::vector<Signature> members;

    static CliqueFamily make(int k, int ell, std::vector<Signature> members);
    std::size_t size() const { return members.size(); }
};

// Two readings of clique membership: Graph accepts any pair whose signature
// difference is itself a valid signature; Strict additionally requires the
// difference to be the signature of a family member.
enum class MembershipMode { Graph, Strict };

// True iff s - t is a valid signature for k; equivalently the supports do
// not cross (X_s meets Y_t nowhere and vice versa) and the same-sign
// overlaps add up to k.  Both routes are computed and checked against each
// other.
bool is_edge(const Signature& s, const Signature& t);

// Coordinates where both signatures are nonzero; exactly k of them when
// is_edge holds.  Throws on a non-edge, naming the violated condition.
std::vector<int> agreement_set(const Signature& s, const Signature& t);

struct CliquePairViolation {
    int i = 0;
    int j = 0;
    std::vector<int> difference;
    std::string reason;
};

struct CliqueVerdict {
    bool valid = true;
    std::vector<CliquePairViolation> violations;
};

CliqueVerdict is_sos_clique(const CliqueFamily& f, MembershipMode mode = MembershipMode::Graph);

// All pairwise agreement sets coincide.  Families of size <= 2 qualify
// vacuously.  Throws if f is not a valid clique.
bool is_sunflower(const CliqueFamily& f);

// Vertices are all valid signatures for (k, ell) in lexicographic order;
// edges follow is_edge.
struct DiffGraph {
    int k = 1;
    int ell = 1;
    std::vector<Signature> vertices;
    BitGraph graph;
};

std::vector<Signature> all_signatures(int k, int ell);
DiffGraph build_diff_graph(int k, int ell);

struct MuResult {
    long long value = 0;
    CliqueFamily witness;
    bool exact = false;
    std::uint64_t nodes = 0;
};

// Maximal clique size in the difference graph, with a witness family.  The
// overload taking a prebuilt graph serves callers that reuse one.
MuResult mu_exact(int k, int ell, const MaxCliqueOptions& opt = {});
MuResult mu_exact(const DiffGraph& dg, const MaxCliqueOptions& opt = {});

// Largest family closed under the strict membership rule (every ordered
// pairwise difference is the signature of a member).  Exhaustive search via
// obligation propagation; no size bound is assumed.
MuResult mu_exact_strict(int k, int ell, const MaxCliqueOptions& opt = {});

struct BoundsRecord {
    long long general_upper = 0;              // ell + 1
    long long sunflower_value = 0;            // floor((ell+1-k)/k)
    long long regime_threshold = 0;           // k * 4^k
    long long sunflower_lemma_upper = 0;      // floor((ell+1)/k) - 1
    long long distinct_intersection_upper = 0;  // C(2k, k) + 1
    long long ekr = 0;                        // C(n-1, k-1), n = ell+1
    std::optional<long long> rcw;             // C(n, s), needs s < k
    std::optional<long long> bollobas;        // C(k1+k2, k1)
};

BoundsRecord bounds(int k, int ell, std::optional<int> s = std::nullopt,
                    std::optional<int> k1 = std::nullopt,
                    std::optional<int> k2 = std::nullopt);

// The published mu_2(A_ell) values: 0,0,1,1,3 for ell = 1..5, then 6 up to
// ell = 13, then floor((ell-1)/2).
long long smalla_predicted(int ell);

}  // namespace sosclique
