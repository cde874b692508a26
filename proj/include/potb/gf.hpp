#pragma once

#include <array>
#include <map>
#include <vector>

#include "potb/errors.hpp"

namespace potb {

// GF(p^e) with elements indexed 0..q-1.  An index packs the coefficient
// vector of the residue polynomial in base p, lowest degree first, so index 0
// is zero, indices 0..p-1 are the prime subfield under their natural labels,
// and prime fields are plain modular arithmetic.  The modulus is x^e + m(x)
// where m has the least packed value making the polynomial irreducible, and
// alpha is the least index of multiplicative order q-1; both are therefore
// reproducible across runs.  Instances are immutable and safe to share.
//
// Supported orders: q <= 65536.  Log/antilog tables are built below 4096;
// larger fields multiply polynomials on the fly.
class Field {
public:
    explicit Field(int q);  // throws NotPrimePower, SizeCapExceeded

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // a != 0
    int pow(int a, long long k) const;

    int alpha() const { return alpha_; }
    int dlog(int a) const;  // a != 0; alpha^dlog(a) == a, in 0..q-2

    // Monic modulus coefficients c0..ce (ce == 1).  Empty for prime fields.
    const std::vector<int>& modulus() const { return mod_; }

private:
    int mul_poly(int a, int b) const;
    void check_range(int a) const;

    int q_ = 0, p_ = 0, e_ = 0;
    int alpha_ = 0;
    std::vector<int> mod_;
    std::vector<int> log_, exp_;  // filled when q < 4096
};

Field field_new(int q);

// Decomposes q as p^e with p prime; returns false if q is not a prime power.
bool is_prime_power(int q, int* p_out, int* e_out);

// The two cosets of the squares in GF(q)*, q odd: c0 holds the squares
// (even powers of alpha), c1 the non-squares, both ascending by index.
// t = (q-1)/2 is the size of each.
struct CosetPair {
    std::vector<int> c0, c1;
    long long t = 0;
};
CosetPair cosets(const Field& f);  // throws EvenCharacteristic

// Order-2 cyclotomy number (i,j): the count of exponents k with
// 1 + alpha^k = alpha^l where k = i and l = j mod 2.  Exhaustive count;
// this is the brute-force oracle the closed form is checked against.
long long cyclotomy_number(const Field& f, int i, int j);

// Closed form for the four order-2 cyclotomy numbers, split on the parity
// of t = (q-1)/2.  Result indexed [i][j].
std::array<std::array<long long, 2>, 2> cyclotomy_formula(long long t);

// Multiset over field elements, value -> multiplicity.
using Multiset = std::map<int, long long>;

// Pairwise differences x - y for x in a, y in b, with multiplicities.
Multiset difference_multiset(const Field& f, const Multiset& a, const Multiset& b);
Multiset difference_multiset(const Field& f, const std::vector<int>& a,
                             const std::vector<int>& b);

}  // namespace potb
