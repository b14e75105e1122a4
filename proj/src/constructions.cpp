#include "sosclique/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sosclique {

namespace {

// Nonzero homogeneous triples with first nonzero coordinate 1, in
// lexicographic order of the element codes.
std::vector<std::array<int, 3>> normalized_triples(const FiniteField& f) {
    std::vector<std::array<int, 3>> out;
    const int q = f.q();
    out.push_back({0, 0, 1});
    for (int c = 0; c < q; ++c) out.push_back({0, 1, c});
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) out.push_back({1, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

int triple_dot(const FiniteField& f, const std::array<int, 3>& a, const std::array<int, 3>& b) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

}  // namespace

IncidenceStructure projective_plane(int q) {
    FiniteField f(q);  // rejects non prime powers
    IncidenceStructure s;
    s.q = q;
    s.points = normalized_triples(f);
    s.lines = s.points;
    const int n = int(s.points.size());
    if (n != q * q + q + 1) throw std::logic_error("point count mismatch");
    s.matrix.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (triple_dot(f, s.lines[r], s.points[c]) == 0) s.matrix[r][c] = 1;
    return s;
}

PlaneReport verify_plane(const IncidenceStructure& p) {
    PlaneReport rep;
    auto fail = [&](std::string check, std::string detail) {
        rep.pass = false;
        rep.violations.push_back({std::move(check), std::move(detail)});
    };

    const int n = int(p.matrix.size());
    const int q = p.q;
    if (n != q * q + q + 1) {
        fail("size", "expected q^2+q+1 = " + std::to_string(q * q + q + 1) + " lines, found " +
                         std::to_string(n));
        return rep;
    }
    for (auto& row : p.matrix)
        if (int(row.size()) != n) {
            fail("size", "matrix is not square");
            return rep;
        }

    for (int r = 0; r < n; ++r) {
        int sum = 0;
        for (int c = 0; c < n; ++c) sum += p.matrix[r][c];
        if (sum != q + 1)
            fail("line-size", "line " + std::to_string(r) + " contains " + std::to_string(sum) +
                                  " points, expected q+1 = " + std::to_string(q + 1));
    }
    for (int c = 0; c < n; ++c) {
        int sum = 0;
        for (int r = 0; r < n; ++r) sum += p.matrix[r][c];
        if (sum != q + 1)
            fail("point-degree", "point " + std::to_string(c) + " lies on " +
                                     std::to_string(sum) + " lines, expected q+1");
    }

    // any two lines meet in one point; Gram identity covers the count
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2) {
            int meet = 0;
            for (int c = 0; c < n; ++c) meet += p.matrix[r1][c] & p.matrix[r2][c];
            int expected = r1 == r2 ? q + 1 : 1;
            if (meet != expected) {
                std::ostringstream os;
                os << "lines " << r1 << " and " << r2 << " share " << meet
                   << " points, expected " << expected << " (N N^T = qI + J fails)";
                fail(r1 == r2 ? "gram-diagonal" : "two-lines-one-point", os.str());
            }
        }

    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
            int joint = 0;
            for (int r = 0; r < n; ++r) joint += p.matrix[r][c1] & p.matrix[r][c2];
            if (joint != 1)
                fail("two-points-one-line", "points " + std::to_string(c1) + " and " +
                                                std::to_string(c2) + " lie on " +
                                                std::to_string(joint) + " common lines");
        }

    // a quadrilateral: four points, no three collinear
    auto collinear = [&](int a, int b, int c) {
        for (int r = 0; r < n; ++r)
            if (p.matrix[r][a] && p.matrix[r][b] && p.matrix[r][c]) return true;
        return false;
    };
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
        for (int b = a + 1; b < n && !found; ++b)
            for (int c = b + 1; c < n && !found; ++c) {
                if (collinear(a, b, c)) continue;
                for (int d = c + 1; d < n && !found; ++d)
                    if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d))
                        found = true;
            }
    if (!found) fail("quadrilateral", "no four points in general position");

    return rep;
}

CliqueFamily plane_clique(int q) {
    IncidenceStructure p = projective_plane(q);
    const int n = p.size();
    std::vector<Signature> members;
    members.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        std::vector<int> diff(n);
        for (int c = 0; c < n; ++c) diff[c] = int(p.matrix[0][c]) - int(p.matrix[i][c]);
        members.push_back(Signature::make(diff, q));
    }
    return CliqueFamily::make(q, n - 1, std::move(members));
}

CliqueFamily sunflower_clique(int k, int ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    if (ell + 1 < 2 * k) {
        std::ostringstream os;
        os << "ell+1 = " << ell + 1 << " columns cannot hold a core and a petal of size k = "
           << k;
        throw std::invalid_argument(os.str());
    }
    const int m = (ell + 1 - k) / k;
    std::vector<Signature> members;
    members.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> row(ell + 1, 0);
        for (int c = 0; c < k; ++c) row[c] = 1;
        for (int c = 0; c < k; ++c) row[k + i * k + c] = -1;
        members.push_back(Signature::make(row, k));
    }
    return CliqueFamily::make(k, ell, std::move(members));
}

namespace {

CliqueFamily rows_to_family(const std::vector<std::vector<int>>& rows, int k) {
    std::vector<Signature> members;
    members.reserve(rows.size());
    for (const auto& r : rows) members.push_back(Signature::make(r, k));
    return CliqueFamily::make(k, int(rows.front().size()) - 1, std::move(members));
}

}  // namespace

CliqueFamily fano_fixture() {
    static const std::vector<std::vector<int>> rows = {
        {0, 1, 1, -1, -1, 0, 0},
        {0, 1, 1, 0, 0, -1, -1},
        {1, 0, 1, -1, 0, -1, 0},
        {1, 0, 1, 0, -1, 0, -1},
        {1, 1, 0, -1, 0, 0, -1},
        {1, 1, 0, 0, -1, -1, 0},
    };
    return rows_to_family(rows, 2);
}

CliqueFamily eight_column_fixture() {
    static const std::vector<std::vector<int>> rows = {
        {1, -1, 1, -1, 0, 0, 0, 0},
        {1, -1, 0, 0, 1, -1, 0, 0},
        {1, -1, 0, 0, 0, 0, 1, -1},
        {1, 0, 1, 0, 0, -1, 0, -1},
        {1, 0, 0, -1, 1, 0, 0, -1},
        {1, 0, 0, -1, 0, -1, 1, 0},
    };
    return rows_to_family(rows, 2);
}

std::vector<std::vector<int>> hadamard7_fixture() {
    return {
        {1, 1, 1, 1, 0, 0, 0, 0},
        {1, 1, 0, 0, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 1, 0, 0},
        {1, 0, 1, 0, 1, 0, 1, 0},
        {1, 0, 0, 1, 1, 0, 0, 1},
        {0, 1, 0, 1, 1, 0, 1, 0},
        {0, 1, 1, 0, 1, 0, 0, 1},
    };
}

namespace {

// All k-subsets of `support` in lexicographic order.
std::vector<std::vector<int>> k_subsets(const std::vector<int>& support, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (int(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = from; i + (k - pick.size()) <= support.size(); ++i) {
            pick.push_back(support[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::optional<CliqueFamily> sign_search(const std::vector<std::vector<int>>& m, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (m.empty()) return CliqueFamily::make(k, 2 * k - 1, {});

    const int cols = int(m.front().size());
    std::vector<std::vector<int>> supports;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (int(m[r].size()) != cols)
            throw std::invalid_argument("ragged matrix");
        std::vector<int> sup;
        for (int c = 0; c < cols; ++c) {
            if (m[r][c] != 0 && m[r][c] != 1)
                throw std::invalid_argument("matrix entries must be 0 or 1");
            if (m[r][c] == 1) sup.push_back(c);
        }
        if (int(sup.size()) != 2 * k) {
            std::ostringstream os;
            os << "row " << r << " has weight " << sup.size() << ", expected 2k = " << 2 * k;
            throw std::invalid_argument(os.str());
        }
        supports.push_back(std::move(sup));
    }

    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& sup : supports) choices.push_back(k_subsets(sup, k));

    std::vector<Signature> signed_rows;
    auto row_with = [&](std::size_t r, const std::vector<int>& negs) {
        std::vector<int> row(cols, 0);
        for (int c : supports[r]) row[c] = 1;
        for (int c : negs) row[c] = -1;
        return Signature::make(row, k);
    };

    auto rec = [&](auto&& self, std::size_t r) -> bool {
        if (r == m.size()) return true;
        for (const auto& negs : choices[r]) {
            Signature cand = row_with(r, negs);
            bool ok = true;
            for (const auto& prev : signed_rows)
                if (cand == prev || !is_edge(prev, cand)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            signed_rows.push_back(std::move(cand));
            if (self(self, r + 1)) return true;
            signed_rows.pop_back();
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;
    return CliqueFamily::make(k, cols - 1, std::move(signed_rows));
}

}  // namespace sosclique
