#pragma once

#include <vector>

namespace sosclique {

// GF(p^e) with elements encoded as integers 0..q-1: the base-p digits of the
// code are the coefficients of the residue polynomial, lowest degree first.
// For e > 1 arithmetic is modulo the lexicographically least monic
// irreducible polynomial of degree e over GF(p) (coefficients compared from
// the highest degree down).  All operations are table lookups.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    // Coefficients of the modulus, ascending degree, size e+1 (monic).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    // a must be nonzero.
    int inv(int a) const;

private:
    int q_, p_, e_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace sosclique
