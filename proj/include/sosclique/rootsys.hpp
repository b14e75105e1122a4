#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace sosclique {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_to_char(Family f);

// A root in standard coordinates.  Families with half-integer entries (E, F)
// store coordinates scaled by 2 so every entry is an integer; the owning
// RootSystem records the scale.
struct Root {
    std::vector<int> coords;

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
long long dot(const Root& a, const Root& b);
bool is_zero(const Root& a);
std::string to_string(const Root& a);

struct RootHash {
    std::size_t operator()(const Root& r) const {
        std::size_t h = 1469598103934665603ull;
        for (int c : r.coords) {
            h ^= std::size_t(c) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Immutable after construction; safe to share across threads.
class RootSystem {
public:
    // Full root set in standard coordinates, sorted lexicographically.
    // Supported: A_l (l >= 1), B_l/C_l (l >= 1), D_l (l >= 2), E_6/E_7/E_8,
    // F_4, G_2.  Anything else raises std::invalid_argument.
    static std::shared_ptr<const RootSystem> build(Family family, int rank);

    // Direct constructor for synthetic root lists (axiom verification, tests).
    RootSystem(Family family, int rank, int ambient_dim, int scale, std::vector<Root> roots);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }
    int scale() const { return scale_; }
    const std::vector<Root>& roots() const { return roots_; }
    std::string name() const;

    // Membership in the stored (scaled) coordinates.  The vector length must
    // match ambient_dim.
    bool is_root(const Root& v) const;
    // Index into roots(), or -1.
    int root_index(const Root& v) const;

    // Simple roots alpha_i = e_i - e_{i+1}, type A only.
    std::vector<Root> simple_roots() const;

private:
    Family family_;
    int rank_;
    int ambient_dim_;
    int scale_;
    std::vector<Root> roots_;
    std::unordered_map<Root, int, RootHash> index_;
};

// Axiom numbering follows the customary list: (1) the roots span a space of
// dimension equal to the rank and exclude zero, (2) the only scalar multiple
// of a root present is its negative, (3) closure under root reflections,
// (4) integrality of 2<b,a>/<a,a>.
struct AxiomViolation {
    int axiom = 0;
    std::string detail;
    std::vector<Root> witness;
};

struct AxiomReport {
    bool pass = true;
    std::vector<AxiomViolation> violations;
};

AxiomReport verify_axioms(const RootSystem& r);

}  // namespace sosclique
