#include "sosclique/cliquesearch.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sosclique {

long long binomial(int n, int r) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned long long acc = 1;
    for (int i = 1; i <= r; ++i) {
        unsigned __int128 next = (unsigned __int128)acc * (n - r + i);
        next /= i;  // exact: C(n-r+i, i) is an integer
        if (next > (unsigned long long)std::numeric_limits<long long>::max())
            throw std::overflow_error("binomial overflows long long");
        acc = (unsigned long long)next;
    }
    return (long long)acc;
}

CliqueFamily CliqueFamily::make(int k, int ell, std::vector<Signature> members) {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].k() != k || members[i].ell() != ell) {
            std::ostringstream os;
            os << "member " << i << " has (k, ell) = (" << members[i].k() << ", "
               << members[i].ell() << "), expected (" << k << ", " << ell << ")";
            throw std::invalid_argument(os.str());
        }
        for (std::size_t j = 0; j < i; ++j)
            if (members[i] == members[j]) {
                std::ostringstream os;
                os << "members " << j << " and " << i << " coincide";
                throw std::invalid_argument(os.str());
            }
    }
    return CliqueFamily{k, ell, std::move(members)};
}

namespace {

struct EdgeCheck {
    bool edge = false;
    bool cross_empty = false;
    int overlap = -1;  // |X  X'| + |Y  Y'|
};

EdgeCheck edge_check(const Signature& s, const Signature& t) {
    if (s.entries().size() != t.entries().size() || s.k() != t.k())
        throw std::invalid_argument("signatures must share length and k");
    if (s == t) throw std::invalid_argument("is_edge requires distinct signatures");

    const auto& a = s.entries();
    const auto& b = t.entries();
    const int k = s.k();

    // Route 1: the difference is a valid signature.
    int pos = 0, neg = 0;
    bool in_range = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = int(a[i]) - int(b[i]);
        if (d > 1 || d < -1) in_range = false;
        if (d == 1) ++pos;
        if (d == -1) ++neg;
    }
    bool diff_valid = in_range && pos == k && neg == k;

    // Route 2: no cross-intersections and same-sign overlaps summing to k.
    EdgeCheck out;
    out.cross_empty = true;
    int xx = 0, yy = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 1 && b[i] == -1) || (a[i] == -1 && b[i] == 1)) out.cross_empty = false;
        if (a[i] == 1 && b[i] == 1) ++xx;
        if (a[i] == -1 && b[i] == -1) ++yy;
    }
    out.overlap = xx + yy;
    bool pair_valid = out.cross_empty && out.overlap == k;

    if (diff_valid != pair_valid)
        throw std::logic_error("edge characterizations disagree");  // provably impossible
    out.edge = diff_valid;
    return out;
}

}  // namespace

bool is_edge(const Signature& s, const Signature& t) { return edge_check(s, t).edge; }

std::vector<int> agreement_set(const Signature& s, const Signature& t) {
    EdgeCheck c = edge_check(s, t);
    if (!c.edge) {
        std::ostringstream os;
        if (!c.cross_empty)
            os << "not an edge: a positive coordinate of one signature meets a negative "
                  "coordinate of the other";
        else
            os << "not an edge: same-sign overlap is " << c.overlap << ", expected " << s.k();
        throw std::invalid_argument(os.str());
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < s.entries().size(); ++i)
        if (s.entries()[i] != 0 && t.entries()[i] != 0) out.push_back(int(i));
    return out;
}

CliqueVerdict is_sos_clique(const CliqueFamily& f, MembershipMode mode) {
    for (std::size_t i = 0; i < f.members.size(); ++i)
        if (f.members[i].k() != f.k || f.members[i].ell() != f.ell)
            throw std::invalid_argument("family member does not match the family parameters");

    CliqueVerdict verdict;
    const int n = int(f.members.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (mode == MembershipMode::Graph && j < i) continue;  // symmetric
            const auto& a = f.members[i].entries();
            const auto& b = f.members[j].entries();
            std::vector<int> diff(a.size());
            for (std::size_t c = 0; c < a.size(); ++c) diff[c] = int(a[c]) - int(b[c]);
            bool ok = is_valid_signature(diff, f.k);
            std::string reason;
            if (!ok) {
                reason = "difference is not a valid signature";
            } else if (mode == MembershipMode::Strict) {
                ok = false;
                for (const auto& m : f.members)
                    if (std::equal(diff.begin(), diff.end(), m.entries().begin(),
                                   [](int x, std::int8_t y) { return x == int(y); })) {
                        ok = true;
                        break;
                    }
                if (!ok) reason = "difference is not the signature of any family member";
            }
            if (!ok) {
                verdict.valid = false;
                verdict.violations.push_back({i, j, std::move(diff), std::move(reason)});
            }
        }
    }
    return verdict;
}

bool is_sunflower(const CliqueFamily& f) {
    CliqueVerdict v = is_sos_clique(f);
    if (!v.valid)
        throw std::invalid_argument("is_sunflower requires a valid SOS-clique");
    if (f.members.size() <= 2) return true;
    std::vector<int> core = agreement_set(f.members[0], f.members[1]);
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (agreement_set(f.members[i], f.members[j]) != core) return false;
    return true;
}

std::vector<Signature> all_signatures(int k, int ell) {
    std::vector<Signature> out;
    if (k < 1 || ell < 1 || 2 * k > ell + 1) return out;
    const int n = ell + 1;
    SigVec cur(n, 0);
    // lexicographic: -1 < 0 < +1 chosen in ascending order at each position
    auto rec = [&](auto&& self, int i, int neg, int pos) -> void {
        if (n - i < (k - neg) + (k - pos)) return;  // not enough room
        if (i == n) {
            out.push_back(Signature::make(cur, k));
            return;
        }
        if (neg < k) {
            cur[i] = -1;
            self(self, i + 1, neg + 1, pos);
        }
        cur[i] = 0;
        self(self, i + 1, neg, pos);
        if (pos < k) {
            cur[i] = 1;
            self(self, i + 1, neg, pos + 1);
            cur[i] = 0;
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

DiffGraph build_diff_graph(int k, int ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    DiffGraph dg;
    dg.k = k;
    dg.ell = ell;
    dg.vertices = all_signatures(k, ell);
    const int n = int(dg.vertices.size());
    dg.graph = BitGraph(n);

    const int cols = ell + 1;
    if (cols <= 64) {
        std::vector<std::uint64_t> pos(n, 0), neg(n, 0);
        for (int v = 0; v < n; ++v) {
            const auto& e = dg.vertices[v].entries();
            for (int c = 0; c < cols; ++c) {
                if (e[c] == 1) pos[v] |= std::uint64_t{1} << c;
                if (e[c] == -1) neg[v] |= std::uint64_t{1} << c;
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if ((pos[i] & neg[j]) || (neg[i] & pos[j])) continue;
                if (std::popcount(pos[i] & pos[j]) + std::popcount(neg[i] & neg[j]) == k)
                    dg.graph.add_edge(i, j);
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (is_edge(dg.vertices[i], dg.vertices[j])) dg.graph.add_edge(i, j);
    }
    return dg;
}

namespace {

MuResult mu_from_clique(const DiffGraph& dg, std::vector<int> clique, bool exact,
                        std::uint64_t nodes) {
    MuResult res;
    std::vector<Signature> members;
    members.reserve(clique.size());
    for (int v : clique) members.push_back(dg.vertices[v]);
    res.value = (long long)clique.size();
    res.witness = CliqueFamily::make(dg.k, dg.ell, std::move(members));
    res.exact = exact;
    res.nodes = nodes;
    return res;
}

}  // namespace

MuResult mu_exact(int k, int ell, const MaxCliqueOptions& opt) {
    return mu_exact(build_diff_graph(k, ell), opt);
}

MuResult mu_exact(const DiffGraph& dg, const MaxCliqueOptions& opt) {
    if (dg.vertices.empty()) {
        MuResult res;
        res.value = 0;
        res.witness = CliqueFamily::make(dg.k, dg.ell, {});
        res.exact = true;
        return res;
    }

    // Column permutations act transitively on the vertices and preserve
    // edges, so some maximum clique passes through vertex 0 and the clique
    // number is one more than that of the neighborhood subgraph.
    const Bitset& hood = dg.graph.adj[0];
    std::vector<int> members = hood.to_vector();
    BitGraph sub(int(members.size()));
    for (int i = 0; i < sub.n; ++i)
        for (int j = i + 1; j < sub.n; ++j)
            if (dg.graph.has_edge(members[i], members[j])) sub.add_edge(i, j);

    MaxCliqueResult inner = max_clique(sub, opt);
    if (!inner.exact) {
        // settle for the direct search's best-found lower bound, within
        // whatever budget remains
        MaxCliqueOptions rest = opt;
        rest.budget = opt.budget > inner.nodes ? opt.budget - inner.nodes : 0;
        MaxCliqueResult full = max_clique(dg.graph, rest);
        return mu_from_clique(dg, full.clique, full.exact, inner.nodes + full.nodes);
    }

    const int omega = int(inner.clique.size()) + 1;
    std::uint64_t nodes = inner.nodes;
    if (auto lexmin = lex_least_clique(dg.graph, omega, opt.budget, &nodes))
        return mu_from_clique(dg, std::move(*lexmin), true, nodes);

    // witness reconstruction ran out of budget; vertex 0 plus the inner
    // witness is still a deterministic maximum clique
    std::vector<int> clique{0};
    for (int v : inner.clique) clique.push_back(members[v]);
    std::sort(clique.begin(), clique.end());
    return mu_from_clique(dg, std::move(clique), true, nodes);
}

namespace {

// Branch state for the strict search: chosen members plus the differences
// still owed to the family.
struct StrictState {
    std::vector<SigVec> members;
    std::set<SigVec> owed;
};

bool sig_diff(const SigVec& a, const SigVec& b, SigVec& out) {
    out.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = int(a[i]) - int(b[i]);
        if (d > 1 || d < -1) return false;
        out[i] = (std::int8_t)d;
    }
    return true;
}

class StrictSearch {
public:
    StrictSearch(std::vector<Signature> vertices, int k, std::uint64_t budget)
        : verts_(std::move(vertices)), k_(k), budget_(budget) {}

    // Largest difference-closed family; returns false when the budget dies.
    bool run(std::vector<SigVec>& best) {
        best.clear();
        StrictState st;
        return dfs(st, 0, best);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Adds w to the state; returns false when some owed difference can never
    // be a valid signature.
    bool absorb(StrictState& st, const SigVec& w) {
        if (std::find(st.members.begin(), st.members.end(), w) != st.members.end())
            return false;
        SigVec d;
        for (const auto& m : st.members) {
            if (!sig_diff(m, w, d) || !is_valid_signature(d, k_)) return false;
            if (std::find(st.members.begin(), st.members.end(), d) == st.members.end())
                st.owed.insert(d);
            if (!sig_diff(w, m, d) || !is_valid_signature(d, k_)) return false;
            if (std::find(st.members.begin(), st.members.end(), d) == st.members.end())
                st.owed.insert(d);
        }
        st.members.push_back(w);
        st.owed.erase(w);
        return true;
    }

    bool dfs(StrictState& st, int next_free, std::vector<SigVec>& best) {
        if (++nodes_ > budget_) return false;
        if (!st.owed.empty()) {
            // the owed vector is forced into the family
            SigVec w = *st.owed.begin();
            StrictState child = st;
            if (!absorb(child, w)) return true;  // dead branch, not a failure
            return dfs(child, next_free, best);
        }
        if (st.members.size() > best.size()) best = st.members;
        for (int v = next_free; v < (int)verts_.size(); ++v) {
            StrictState child = st;
            if (!absorb(child, verts_[v].entries())) continue;
            if (!dfs(child, v + 1, best)) return false;
        }
        return true;
    }

    std::vector<Signature> verts_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

MuResult mu_exact_strict(int k, int ell, const MaxCliqueOptions& opt) {
    std::vector<Signature> verts = all_signatures(k, ell);
    MuResult res;
    if (verts.empty()) {
        res.value = 0;
        res.witness = CliqueFamily::make(k, ell, {});
        res.exact = true;
        return res;
    }
    StrictSearch search(verts, k, opt.budget);
    std::vector<SigVec> best;
    res.exact = search.run(best);
    res.nodes = search.nodes();
    std::vector<Signature> members;
    members.reserve(best.size());
    for (auto& e : best) members.push_back(Signature::make(std::move(e), k));
    std::sort(members.begin(), members.end());
    res.value = (long long)members.size();
    res.witness = CliqueFamily::make(k, ell, std::move(members));
    return res;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

BoundsRecord bounds(int k, int ell, std::optional<int> s, std::optional<int> k1,
                    std::optional<int> k2) {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    BoundsRecord r;
    r.general_upper = ell + 1;
    r.sunflower_value = floor_div(ell + 1 - k, k);
    r.sunflower_lemma_upper = floor_div(ell + 1, k) - 1;
    if (r.sunflower_value != r.sunflower_lemma_upper)
        throw std::logic_error("sunflower bound identity failed");  // impossible
    if (k > 30) throw std::invalid_argument("k too large for the regime threshold");
    r.regime_threshold = (long long)k << (2 * k);
    r.distinct_intersection_upper = binomial(2 * k, k) + 1;
    r.ekr = binomial(ell, k - 1);
    if (s) {
        if (*s < 0 || *s >= k)
            throw std::invalid_argument("the distinct-intersection size s must satisfy 0 <= s < k");
        r.rcw = binomial(ell + 1, *s);
    }
    if (k1 || k2) {
        if (!k1 || !k2) throw std::invalid_argument("k1 and k2 must be given together");
        if (*k1 < 0 || *k2 < 0) throw std::invalid_argument("k1 and k2 must be nonnegative");
        r.bollobas = binomial(*k1 + *k2, *k1);
    }
    return r;
}

long long smalla_predicted(int ell) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    static constexpr long long small[5] = {0, 0, 1, 1, 3};
    if (ell <= 5) return small[ell - 1];
    // both clauses cover ell = 13 and agree there
    static_assert((13 - 1) / 2 == 6);
    if (ell <= 13) return 6;
    return (ell - 1) / 2;
}

}  // namespace sosclique
