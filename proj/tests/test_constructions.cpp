#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "sosclique/constructions.hpp"

using namespace sosclique;

namespace {

// Fano incidence matrix in its textbook layout.
const std::vector<std::vector<int>> kFanoRows = {
    {1, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 0, 1, 1},
    {0, 1, 0, 1, 0, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 1},
    {0, 0, 1, 0, 1, 1, 0},
};

// Equality of two 0/1 matrices up to row order after applying a column
// permutation to `a`.
bool rows_match_under_perm(const std::vector<std::vector<int>>& a,
                           const std::vector<std::vector<int>>& b,
                           const std::vector<int>& perm) {
    std::multiset<std::vector<int>> sa, sb;
    for (const auto& row : a) {
        std::vector<int> permuted(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) permuted[c] = row[perm[c]];
        sa.insert(permuted);
    }
    for (const auto& row : b) sb.insert(row);
    return sa == sb;
}

bool equivalent_up_to_permutation(const std::vector<std::vector<int>>& a,
                                  const std::vector<std::vector<int>>& b) {
    const int cols = int(a.front().size());
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (rows_match_under_perm(a, b, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<int>> family_rows(const CliqueFamily& f) {
    std::vector<std::vector<int>> rows;
    for (const auto& m : f.members) rows.push_back(m.as_ints());
    return rows;
}

}  // namespace

TEST_CASE("finite fields") {
    FiniteField f7(7);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.mul(3, 5) == 1);

    FiniteField f4(4);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

    CHECK_THROWS_AS(FiniteField(6), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(12), std::invalid_argument);
}

TEST_CASE("field laws, exhaustive through q=9") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        FiniteField f(q);
        INFO("q = " << q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    }
}

TEST_CASE("projective planes of small order") {
    IncidenceStructure p2 = projective_plane(2);
    CHECK(p2.size() == 7);
    for (const auto& row : p2.matrix)
        CHECK(std::accumulate(row.begin(), row.end(), 0) == 3);

    IncidenceStructure p3 = projective_plane(3);
    CHECK(p3.size() == 13);
    for (const auto& row : p3.matrix)
        CHECK(std::accumulate(row.begin(), row.end(), 0) == 4);

    CHECK_THROWS_AS(projective_plane(6), std::invalid_argument);
}

TEST_CASE("verify_plane passes for constructed planes") {
    for (int q : {2, 3, 4, 5}) {
        IncidenceStructure p = projective_plane(q);
        PlaneReport rep = verify_plane(p);
        INFO("q = " << q);
        CHECK(rep.pass);
    }
}

TEST_CASE("verify_plane catches a flipped bit") {
    IncidenceStructure p = projective_plane(2);
    for (int c = 0; c < 7; ++c)
        if (!p.matrix[0][c]) {
            p.matrix[0][c] = 1;
            break;
        }
    PlaneReport rep = verify_plane(p);
    CHECK_FALSE(rep.pass);
    bool meet_violation = false;
    for (const auto& v : rep.violations)
        if (v.check == "two-lines-one-point" || v.check == "gram-diagonal" ||
            v.check == "line-size")
            meet_violation = true;
    CHECK(meet_violation);
    // specifically, two lines now share two points somewhere
    bool pair_hit = false;
    for (const auto& v : rep.violations)
        if (v.check == "two-lines-one-point") pair_hit = true;
    CHECK(pair_hit);
}

TEST_CASE("the order-2 plane is the Fano plane up to permutation") {
    IncidenceStructure p = projective_plane(2);
    std::vector<std::vector<int>> mine;
    for (const auto& row : p.matrix) mine.emplace_back(row.begin(), row.end());
    CHECK(equivalent_up_to_permutation(mine, kFanoRows));
}

TEST_CASE("plane cliques") {
    CliqueFamily f2 = plane_clique(2);
    CHECK(f2.size() == 6);
    CHECK(f2.k == 2);
    CHECK(f2.ell == 6);
    CHECK(is_sos_clique(f2).valid);

    CliqueFamily f3 = plane_clique(3);
    CHECK(f3.size() == 12);
    CHECK(f3.k == 3);
    CHECK(f3.ell == 12);
    CHECK(is_sos_clique(f3).valid);

    // every pairwise agreement set has size q for the order-2 plane
    for (std::size_t i = 0; i < f2.members.size(); ++i)
        for (std::size_t j = i + 1; j < f2.members.size(); ++j)
            CHECK(agreement_set(f2.members[i], f2.members[j]).size() == 2);

    CHECK_THROWS_AS(plane_clique(6), std::invalid_argument);
}

TEST_CASE("plane clique pair analysis: q positives or q-1 positives and one negative") {
    for (int q : {2, 3, 4}) {
        CliqueFamily f = plane_clique(q);
        for (std::size_t i = 0; i < f.members.size(); ++i)
            for (std::size_t j = i + 1; j < f.members.size(); ++j) {
                const auto& a = f.members[i].entries();
                const auto& b = f.members[j].entries();
                int pos_agree = 0, neg_agree = 0;
                for (std::size_t c = 0; c < a.size(); ++c) {
                    if (a[c] == 1 && b[c] == 1) ++pos_agree;
                    if (a[c] == -1 && b[c] == -1) ++neg_agree;
                }
                CHECK(pos_agree + neg_agree == q);
                bool shape_a = pos_agree == q && neg_agree == 0;
                bool shape_b = pos_agree == q - 1 && neg_agree == 1;
                CHECK((shape_a || shape_b));
            }
    }
}

TEST_CASE("fano fixture equals the order-2 plane clique up to column permutation") {
    CHECK(equivalent_up_to_permutation(family_rows(fano_fixture()),
                                       family_rows(plane_clique(2))));
}

TEST_CASE("sunflower cliques") {
    CliqueFamily f = sunflower_clique(2, 13);
    CHECK(f.size() == 6);
    CHECK(is_sos_clique(f).valid);
    CHECK(is_sunflower(f));

    CHECK(sunflower_clique(3, 8).size() == 2);
    CHECK(sunflower_clique(1, 4).size() == 4);
    CHECK_THROWS_AS(sunflower_clique(3, 4), std::invalid_argument);

    for (int k = 1; k <= 4; ++k)
        for (int ell = 2 * k - 1; ell <= 2 * k + 10; ++ell) {
            CliqueFamily sf = sunflower_clique(k, ell);
            CHECK((int)sf.size() == (ell + 1 - k) / k);
            CHECK((int)sf.size() <= ell + 1);
            CHECK(is_sunflower(sf));
        }
}

TEST_CASE("fixture contents") {
    CliqueFamily fano = fano_fixture();
    CHECK(fano.members[0].as_ints() == std::vector<int>{0, 1, 1, -1, -1, 0, 0});
    CHECK(fano.size() == 6);
    CHECK(is_sos_clique(fano).valid);

    CliqueFamily eight = eight_column_fixture();
    CHECK(eight.members[3].as_ints() == std::vector<int>{1, 0, 1, 0, 0, -1, 0, -1});
    CHECK(is_sos_clique(eight).valid);
}

TEST_CASE("no seventh row extends the eight-column fixture") {
    CliqueFamily eight = eight_column_fixture();
    int extensions = 0;
    for (const auto& cand : all_signatures(2, 7)) {
        bool adjacent_to_all = true;
        for (const auto& m : eight.members)
            if (cand == m || !is_edge(cand, m)) {
                adjacent_to_all = false;
                break;
            }
        if (adjacent_to_all) ++extensions;
    }
    CHECK(extensions == 0);
}

TEST_CASE("hadamard 7x8 fixture") {
    auto rows = hadamard7_fixture();
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<int>{1, 1, 1, 1, 0, 0, 0, 0});
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            int meet = 0;
            for (int c = 0; c < 8; ++c) meet += rows[i][c] & rows[j][c];
            CHECK(meet == 2);
        }
    // 0 -> -1 turns the rows into mutually orthogonal +-1 vectors
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            int dot = 0;
            for (int c = 0; c < 8; ++c)
                dot += (rows[i][c] ? 1 : -1) * (rows[j][c] ? 1 : -1);
            CHECK(dot == 0);
        }
}

TEST_CASE("sign search") {
    CHECK_FALSE(sign_search(hadamard7_fixture(), 2).has_value());

    auto single = sign_search({{1, 1, 1, 1, 0, 0, 0, 0}}, 2);
    REQUIRE(single.has_value());
    CHECK(single->size() == 1);
    CHECK(is_sos_clique(*single).valid);

    auto empty = sign_search({}, 2);
    REQUIRE(empty.has_value());
    CHECK(empty->size() == 0);

    CHECK_THROWS_AS(sign_search({{1, 1, 1, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(sign_search({{1, 2, 1, 0}}, 1), std::invalid_argument);

    // two rows meeting in two columns admit a signing
    auto pair = sign_search({{1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0}}, 2);
    REQUIRE(pair.has_value());
    CHECK(is_sos_clique(*pair).valid);
}
