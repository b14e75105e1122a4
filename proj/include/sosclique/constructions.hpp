#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sosclique/cliquesearch.hpp"
#include "sosclique/gf.hpp"

namespace sosclique {

// A projective plane of order q as a point-line incidence matrix.  Rows are
// lines, columns are points; points and lines are normalized homogeneous
// triples over GF(q) (first nonzero coordinate 1), sorted lexicographically.
struct IncidenceStructure {
    int q = 0;
    std::vector<std::array<int, 3>> points;
    std::vector<std::array<int, 3>> lines;
    std::vector<std::vector<std::uint8_t>> matrix;

    int size() const { return int(points.size()); }  // q^2 + q + 1
};

IncidenceStructure projective_plane(int q);

struct PlaneViolation {
    std::string check;
    std::string detail;
};

struct PlaneReport {
    bool pass = true;
    std::vector<PlaneViolation> violations;
};

// Checks the plane axioms (line size, pairwise meetings both ways, existence
// of a quadrilateral) plus the Gram identity N N^T = qI + J entrywise.
PlaneReport verify_plane(const IncidenceStructure& p);

// The family {r_1 - r_i : 2 <= i <= q^2+q+1} of signature vectors, k = q,
// ell = q^2 + q.
CliqueFamily plane_clique(int q);

// Common core on columns 1..k, member i negative on its own petal; the
// floor((ell+1-k)/k)-member extremal sunflower.
CliqueFamily sunflower_clique(int k, int ell);

// Literal fixture: 6 signature rows on 7 columns (k = 2) derived from the
// Fano plane incidence matrix.
CliqueFamily fano_fixture();

// Literal fixture: 6 signature rows on 8 columns (k = 2) containing a
// three-member sunflower.
CliqueFamily eight_column_fixture();

// Literal fixture: 7 subsets of an 8-set (0/1 rows, weight 4) intersecting
// pairwise in exactly 2 points; 0 -> -1 gives orthogonal rows.
std::vector<std::vector<int>> hadamard7_fixture();

// Per row, chooses k of the 2k support positions to carry -1 so that the
// signed rows form a valid SOS-clique family.  Depth-first with pairwise
// pruning; returns the first assignment in lexicographic choice order, or
// nullopt when no assignment exists.
std::optional<CliqueFamily> sign_search(const std::vector<std::vector<int>>& m, int k);

}  // namespace sosclique
