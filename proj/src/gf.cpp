#include "sosclique/gf.hpp"

#include <stdexcept>
#include <string>

namespace sosclique {

namespace {

// q = p^e for prime p, or (0,0) when q is not a prime power.
std::pair<int, int> prime_power(int q) {
    if (q < 2) return {0, 0};
    int p = 0;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {q, 1};  // q itself is prime
    int e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return {0, 0};
    return {p, e};
}

using Poly = std::vector<int>;  // coefficients mod p, ascending degree

Poly poly_mod_mul(const Poly& a, const Poly& b, const Poly& modulus, int p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    int e = int(modulus.size()) - 1;
    for (int d = int(prod.size()) - 1; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= e; ++i) {
            int idx = d - e + i;
            prod[idx] = ((prod[idx] - c * modulus[i]) % p + p) % p;
        }
    }
    prod.resize(e);
    return prod;
}

int encode(const Poly& a, int p) {
    int code = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) code = code * p + a[i];
    return code;
}

Poly decode(int code, int p, int e) {
    Poly a(e, 0);
    for (int i = 0; i < e; ++i) {
        a[i] = code % p;
        code /= p;
    }
    return a;
}

// Plain trial division over GF(p)[x]: no monic divisor of degree 1..deg/2.
bool irreducible(const Poly& f, int p) {
    int deg = int(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            Poly g = decode(low, p, d);
            g.push_back(1);  // monic of degree d
            // long division remainder f mod g
            Poly r = f;
            for (int dd = int(r.size()) - 1; dd >= d; --dd) {
                int c = r[dd] % p;
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i) {
                    int idx = dd - d + i;
                    r[idx] = ((r[idx] - c * g[i]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (r[i] % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

// Least monic irreducible of degree e, comparing coefficient tuples from the
// highest degree down (so the integer encoding of the low coefficients in
// big-endian order is minimized).
Poly least_irreducible(int p, int e) {
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (int tail = 0; tail < count; ++tail) {
        // tail in base p spells (c_{e-1}, ..., c_0), c_0 least significant,
        // so ascending tail is ascending lexicographic order on the tuple
        Poly f(e + 1, 0);
        f[e] = 1;
        int t = tail;
        for (int i = 0; i < e; ++i) {
            f[i] = t % p;
            t /= p;
        }
        if (irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // cannot happen
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    auto [p, e] = prime_power(q);
    if (p == 0)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    p_ = p;
    e_ = e;

    if (e_ == 1) {
        modulus_ = {0, 1};  // x, for uniformity
    } else {
        modulus_ = least_irreducible(p_, e_);
    }

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a, p_, e_);
        Poly na(e_);
        for (int i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_[a] = encode(na, p_);
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b, p_, e_);
            Poly s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = encode(s, p_);
            mul_[a * q_ + b] = encode(poly_mod_mul(pa, pb, modulus_, p_), p_);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
    for (int a = 1; a < q_; ++a)
        if (inv_[a] == 0) throw std::logic_error("missing inverse; modulus not irreducible?");
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return inv_[a];
}

}  // namespace sosclique
