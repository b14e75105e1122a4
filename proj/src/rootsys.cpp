#include "sosclique/rootsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sosclique {

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
    }
}

char family_to_char(Family f) { return static_cast<char>(f); }

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Root operator-(const Root& a) {
    Root r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

long long dot(const Root& a, const Root& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        s += (long long)a.coords[i] * b.coords[i];
    return s;
}

bool is_zero(const Root& a) {
    return std::all_of(a.coords.begin(), a.coords.end(), [](int c) { return c == 0; });
}

std::string to_string(const Root& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (i) os << ',';
        os << a.coords[i];
    }
    os << ')';
    return os.str();
}

namespace {

Root unit_pair(int dim, int i, int j, int vi, int vj) {
    Root r{std::vector<int>(dim, 0)};
    r.coords[i] = vi;
    if (j >= 0) r.coords[j] = vj;
    return r;
}

std::vector<Root> build_a(int l) {
    std::vector<Root> roots;
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j)
            if (i != j) roots.push_back(unit_pair(l + 1, i, j, 1, -1));
    return roots;
}

std::vector<Root> build_bcd(Family f, int l) {
    std::vector<Root> roots;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) roots.push_back(unit_pair(l, i, j, si, sj));
    if (f == Family::B)
        for (int i = 0; i < l; ++i)
            for (int s : {1, -1}) roots.push_back(unit_pair(l, i, -1, s, 0));
    if (f == Family::C)
        for (int i = 0; i < l; ++i)
            for (int s : {2, -2}) roots.push_back(unit_pair(l, i, -1, s, 0));
    return roots;
}

std::vector<Root> build_g2() {
    std::vector<Root> roots;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) roots.push_back(unit_pair(3, i, j, 1, -1));
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            Root r{std::vector<int>(3, -s)};
            r.coords[i] = 2 * s;
            roots.push_back(r);
        }
    return roots;
}

// F4 scaled by 2: +-2e_i, +-2e_i +- 2e_j, and all (+-1,+-1,+-1,+-1).
std::vector<Root> build_f4() {
    std::vector<Root> roots;
    for (int i = 0; i < 4; ++i)
        for (int s : {2, -2}) roots.push_back(unit_pair(4, i, -1, s, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) roots.push_back(unit_pair(4, i, j, si, sj));
    for (int mask = 0; mask < 16; ++mask) {
        Root r{std::vector<int>(4, 1)};
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) r.coords[i] = -1;
        roots.push_back(r);
    }
    return roots;
}

int minus_count(int mask, int bits) {
    int c = 0;
    for (int i = 0; i < bits; ++i) c += mask >> i & 1;
    return c;
}

// E8 scaled by 2: +-2e_i +- 2e_j and (+-1)^8 with an even number of -1.
std::vector<Root> build_e8() {
    std::vector<Root> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) roots.push_back(unit_pair(8, i, j, si, sj));
    for (int mask = 0; mask < 256; ++mask) {
        if (minus_count(mask, 8) % 2) continue;
        Root r{std::vector<int>(8, 1)};
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) r.coords[i] = -1;
        roots.push_back(r);
    }
    return roots;
}

// E7 inside R^8, scaled by 2: +-2e_i +- 2e_j (i<j<=6), +-(2e_7 - 2e_8), and
// (s_1..s_6, a, -a) with s in {+-1}^6 carrying an odd number of -1.
std::vector<Root> build_e7() {
    std::vector<Root> roots;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) roots.push_back(unit_pair(8, i, j, si, sj));
    for (int s : {1, -1}) roots.push_back(unit_pair(8, 6, 7, 2 * s, -2 * s));
    for (int mask = 0; mask < 64; ++mask) {
        if (minus_count(mask, 6) % 2 == 0) continue;
        for (int a : {1, -1}) {
            Root r{std::vector<int>(8, 1)};
            for (int i = 0; i < 6; ++i)
                if (mask >> i & 1) r.coords[i] = -1;
            r.coords[6] = a;
            r.coords[7] = -a;
            roots.push_back(r);
        }
    }
    return roots;
}

// E6 inside R^8, scaled by 2: +-2e_i +- 2e_j (i<j<=5), plus
// (s_1..s_5, -a, -a, a) with an even number of -1 among s when a = 1.
std::vector<Root> build_e6() {
    std::vector<Root> roots;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) roots.push_back(unit_pair(8, i, j, si, sj));
    for (int mask = 0; mask < 32; ++mask) {
        int parity = minus_count(mask, 5) % 2;
        for (int a : {1, -1}) {
            // the a = 1 orientation takes an even number of -1 among the
            // first five entries; negation flips that parity
            if ((a == 1) != (parity == 0)) continue;
            Root r{std::vector<int>(8, 0)};
            for (int i = 0; i < 5; ++i) r.coords[i] = (mask >> i & 1) ? -1 : 1;
            r.coords[5] = -a;
            r.coords[6] = -a;
            r.coords[7] = a;
            roots.push_back(r);
        }
    }
    return roots;
}

// Exact rank of the integer matrix whose rows are the roots.
int span_rank(const std::vector<Root>& roots, int dim) {
    std::vector<std::vector<long long>> m;
    m.reserve(roots.size());
    for (auto& r : roots) m.emplace_back(r.coords.begin(), r.coords.end());
    int rank = 0;
    for (int col = 0; col < dim && rank < (int)m.size(); ++col) {
        int pivot = -1;
        for (int i = rank; i < (int)m.size(); ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < (int)m.size(); ++i) {
            if (m[i][col] == 0) continue;
            long long a = m[rank][col], b = m[i][col];
            for (int c = col; c < dim; ++c) m[i][c] = m[i][c] * a - m[rank][c] * b;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank, int ambient_dim, int scale,
                       std::vector<Root> roots)
    : family_(family), rank_(rank), ambient_dim_(ambient_dim), scale_(scale),
      roots_(std::move(roots)) {
    for (auto& r : roots_)
        if ((int)r.coords.size() != ambient_dim_)
            throw std::invalid_argument("root length does not match ambient dimension");
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    index_.reserve(roots_.size() * 2);
    for (int i = 0; i < (int)roots_.size(); ++i) index_.emplace(roots_[i], i);
}

std::shared_ptr<const RootSystem> RootSystem::build(Family family, int rank) {
    auto fail = [&] {
        std::ostringstream os;
        os << "unsupported root system " << family_to_char(family) << "_" << rank;
        throw std::invalid_argument(os.str());
    };
    if (rank < 1) fail();
    switch (family) {
        case Family::A:
            return std::make_shared<RootSystem>(family, rank, rank + 1, 1, build_a(rank));
        case Family::B:
            return std::make_shared<RootSystem>(family, rank, rank, 1,
                                                build_bcd(Family::B, rank));
        case Family::C:
            return std::make_shared<RootSystem>(family, rank, rank, 1,
                                                build_bcd(Family::C, rank));
        case Family::D:
            if (rank < 2) fail();
            return std::make_shared<RootSystem>(family, rank, rank, 1,
                                                build_bcd(Family::D, rank));
        case Family::E:
            if (rank == 6) return std::make_shared<RootSystem>(family, 6, 8, 2, build_e6());
            if (rank == 7) return std::make_shared<RootSystem>(family, 7, 8, 2, build_e7());
            if (rank == 8) return std::make_shared<RootSystem>(family, 8, 8, 2, build_e8());
            fail();
        case Family::F:
            if (rank != 4) fail();
            return std::make_shared<RootSystem>(family, 4, 4, 2, build_f4());
        case Family::G:
            if (rank != 2) fail();
            return std::make_shared<RootSystem>(family, 2, 3, 1, build_g2());
    }
    fail();
    return nullptr;  // unreachable
}

std::string RootSystem::name() const {
    return std::string(1, family_to_char(family_)) + std::to_string(rank_);
}

bool RootSystem::is_root(const Root& v) const { return root_index(v) >= 0; }

int RootSystem::root_index(const Root& v) const {
    if ((int)v.coords.size() != ambient_dim_) {
        std::ostringstream os;
        os << "vector of length " << v.coords.size() << " queried against " << name()
           << " (ambient dimension " << ambient_dim_ << ")";
        throw std::invalid_argument(os.str());
    }
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

std::vector<Root> RootSystem::simple_roots() const {
    if (family_ != Family::A)
        throw std::invalid_argument("simple_roots is only provided for type A, got " + name());
    std::vector<Root> out;
    out.reserve(rank_);
    for (int i = 0; i < rank_; ++i) out.push_back(unit_pair(ambient_dim_, i, i + 1, 1, -1));
    return out;
}

AxiomReport verify_axioms(const RootSystem& r) {
    AxiomReport report;
    auto violate = [&](int axiom, std::string detail, std::vector<Root> witness) {
        report.pass = false;
        report.violations.push_back({axiom, std::move(detail), std::move(witness)});
    };

    const auto& roots = r.roots();
    if (roots.empty()) {
        violate(1, "empty root set", {});
        return report;
    }

    for (auto& a : roots)
        if (is_zero(a)) violate(1, "zero vector present", {a});

    int rank = span_rank(roots, r.ambient_dim());
    if (rank != r.rank()) {
        std::ostringstream os;
        os << "roots span dimension " << rank << ", expected " << r.rank();
        violate(1, os.str(), {});
    }

    for (auto& a : roots) {
        if (is_zero(a)) continue;
        if (!r.is_root(-a)) violate(2, "negative missing for " + to_string(a), {a});
        for (auto& b : roots) {
            if (a == b || b == -a) continue;
            // collinear iff all 2x2 minors vanish
            bool collinear = true;
            for (std::size_t i = 0; collinear && i < a.coords.size(); ++i)
                for (std::size_t j = i + 1; collinear && j < a.coords.size(); ++j)
                    if ((long long)a.coords[i] * b.coords[j] !=
                        (long long)a.coords[j] * b.coords[i])
                        collinear = false;
            if (collinear)
                violate(2, to_string(b) + " is a scalar multiple of " + to_string(a), {a, b});
        }
    }

    for (auto& a : roots) {
        long long na = dot(a, a);
        if (na == 0) continue;
        for (auto& b : roots) {
            long long num = 2 * dot(b, a);
            if (num % na != 0) {
                violate(4, "2<b,a>/<a,a> not an integer for a=" + to_string(a) +
                               ", b=" + to_string(b),
                        {a, b});
                continue;
            }
            long long c = num / na;
            Root reflected = b;
            for (std::size_t i = 0; i < reflected.coords.size(); ++i)
                reflected.coords[i] -= int(c) * a.coords[i];
            if (!r.is_root(reflected))
                violate(3, "reflection of " + to_string(b) + " in " + to_string(a) +
                               " leaves the set",
                        {a, b});
        }
    }

    return report;
}

}  // namespace sosclique
