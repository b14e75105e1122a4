#include "sosclique/sos.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sosclique {

namespace {

template <typename Vec>
bool valid_signature_impl(const Vec& v, int k) {
    if (k < 1) return false;
    int pos = 0, neg = 0;
    for (auto e : v) {
        if (e == 1)
            ++pos;
        else if (e == -1)
            ++neg;
        else if (e != 0)
            return false;
    }
    return pos == k && neg == k;
}

// Names the violated invariant for error messages.
template <typename Vec>
std::string signature_defect(const Vec& v, int k) {
    int pos = 0, neg = 0;
    for (auto e : v) {
        if (e > 1 || e < -1) {
            std::ostringstream os;
            os << "entry " << int(e) << " lies outside {-1, 0, 1}";
            return os.str();
        }
        if (e == 1) ++pos;
        if (e == -1) ++neg;
    }
    std::ostringstream os;
    os << pos << " positive and " << neg << " negative entries, expected " << k << " of each";
    return os.str();
}

template <typename Vec>
void require_valid_signature(const Vec& v, int k) {
    if (valid_signature_impl(v, k)) return;
    std::ostringstream os;
    os << "not a valid signature for k=" << k << ": " << signature_defect(v, k);
    throw std::invalid_argument(os.str());
}

}  // namespace

bool is_valid_signature(const SigVec& v, int k) { return valid_signature_impl(v, k); }
bool is_valid_signature(const std::vector<int>& v, int k) { return valid_signature_impl(v, k); }

Signature Signature::make(SigVec entries, int k) {
    require_valid_signature(entries, k);
    return Signature(std::move(entries), k);
}

Signature Signature::make(const std::vector<int>& entries, int k) {
    require_valid_signature(entries, k);
    SigVec e(entries.begin(), entries.end());
    return Signature(std::move(e), k);
}

std::vector<int> Signature::positive_support() const {
    std::vector<int> out;
    for (int i = 0; i < (int)entries_.size(); ++i)
        if (entries_[i] == 1) out.push_back(i);
    return out;
}

std::vector<int> Signature::negative_support() const {
    std::vector<int> out;
    for (int i = 0; i < (int)entries_.size(); ++i)
        if (entries_[i] == -1) out.push_back(i);
    return out;
}

bool strongly_orthogonal(const RootSystem& r, const Root& a, const Root& b) {
    if (!r.is_root(a)) throw std::invalid_argument("first argument is not a root of " + r.name());
    if (!r.is_root(b)) throw std::invalid_argument("second argument is not a root of " + r.name());
    Root sum = a + b;
    Root diff = a - b;
    if (is_zero(sum) || is_zero(diff)) return false;
    return !r.is_root(sum) && !r.is_root(diff);
}

BitGraph strong_orthogonality_graph(const RootSystem& r) {
    const auto& roots = r.roots();
    const int n = int(roots.size());
    BitGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (strongly_orthogonal(r, roots[i], roots[j])) g.add_edge(i, j);
    return g;
}

SosEnumerator::SosEnumerator(std::shared_ptr<const RootSystem> system, int k)
    : system_(std::move(system)), k_(k) {
    if (k_ < 1) throw std::invalid_argument("k must be positive");
    so_graph_ = strong_orthogonality_graph(*system_);
}

// Completes the partial selection to k members; the choice at the current
// depth must be >= from.  compat_[d] holds the candidates compatible with
// stack_[0..d], already restricted to indices above stack_[d].
bool SosEnumerator::descend(int from) {
    const int n = so_graph_.n;
    while (true) {
        if (int(stack_.size()) == k_) return true;
        int depth = int(stack_.size());
        int cand;
        if (depth == 0)
            cand = from < n ? from : -1;
        else
            cand = compat_[depth - 1].next_after(from - 1);
        if (cand < 0) {
            if (stack_.empty()) return false;
            from = stack_.back() + 1;
            stack_.pop_back();
            continue;
        }
        stack_.push_back(cand);
        if ((int)compat_.size() < depth + 1) compat_.resize(depth + 1, Bitset(n));
        if (depth == 0)
            compat_[0] = so_graph_.adj[cand];
        else
            compat_[depth] = compat_[depth - 1] & so_graph_.adj[cand];
        compat_[depth].reset_through(cand);
        from = 0;
    }
}

std::optional<SOSet> SosEnumerator::next() {
    if (done_) return std::nullopt;
    bool ok;
    if (!primed_) {
        primed_ = true;
        ok = descend(0);
    } else if (stack_.empty()) {
        ok = false;
    } else {
        int resume = stack_.back() + 1;
        stack_.pop_back();
        ok = descend(resume);
    }
    if (!ok) {
        done_ = true;
        return std::nullopt;
    }
    SOSet out;
    out.system = system_;
    out.members.reserve(k_);
    for (int idx : stack_) out.members.push_back(system_->roots()[idx]);
    return out;
}

std::vector<SOSet> enumerate_sos(std::shared_ptr<const RootSystem> system, int k) {
    SosEnumerator en(std::move(system), k);
    std::vector<SOSet> out;
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

int max_sos_size(const RootSystem& r, const MaxCliqueOptions& opt) {
    BitGraph g = strong_orthogonality_graph(r);
    MaxCliqueResult res = max_clique(g, opt);
    if (!res.exact)
        throw std::runtime_error("max_sos_size: clique search exhausted its node budget on " +
                                 r.name());
    return int(res.clique.size());
}

SOSet canonical_sos(int k, int ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    if (2 * k > ell + 1) {
        std::ostringstream os;
        os << "no strongly orthogonal k-set exists for k=" << k << ", ell=" << ell
           << " (requires 2k <= ell+1)";
        throw std::invalid_argument(os.str());
    }
    SOSet out;
    out.system = RootSystem::build(Family::A, ell);
    for (int j = 0; j < k; ++j) {
        Root r{std::vector<int>(ell + 1, 0)};
        r.coords[j] = 1;
        r.coords[k + j] = -1;
        out.members.push_back(std::move(r));
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Signature signature(const SOSet& g) {
    if (!g.system || g.system->family() != Family::A)
        throw std::invalid_argument("signatures are defined for type A sets");
    int n = g.system->ambient_dim();
    std::vector<int> sum(n, 0);
    for (const auto& m : g.members)
        for (int i = 0; i < n; ++i) sum[i] += m.coords[i];
    return Signature::make(sum, int(g.members.size()));
}

SOSet signature_to_sos(const Signature& s) {
    return signature_to_sos(s, RootSystem::build(Family::A, s.ell()));
}

SOSet signature_to_sos(const Signature& s, std::shared_ptr<const RootSystem> system) {
    if (!system || system->family() != Family::A || system->ambient_dim() != (int)s.entries().size())
        throw std::invalid_argument("signature length does not match the root system");
    auto pos = s.positive_support();
    auto neg = s.negative_support();
    SOSet out;
    out.system = std::move(system);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        Root r{std::vector<int>(s.entries().size(), 0)};
        r.coords[pos[i]] = 1;
        r.coords[neg[i]] = -1;
        out.members.push_back(std::move(r));
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

}  // namespace sosclique
