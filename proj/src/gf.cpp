#include "potb/gf.hpp"

#include <algorithm>

namespace potb {

namespace {

constexpr int kMaxOrder = 65536;
constexpr int kTableLimit = 4096;

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(long long n) {
    std::vector<int> fs;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(static_cast<int>(n));
    return fs;
}

// Dense coefficient polynomials over Z_p, lowest degree first.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    while (a.size() >= b.size()) {
        int c = a.back();
        size_t shift = a.size() - b.size();
        if (c != 0)
            for (size_t i = 0; i < b.size(); ++i) {
                int& x = a[shift + i];
                x = ((x - c * b[i]) % p + p) % p;
            }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Irreducibility over Z_p by trial division: no monic divisor of degree
// 1..deg/2.  Degrees here are at most 16, so the search space is tiny.
bool poly_irreducible(const Poly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long packed = 0; packed < count; ++packed) {
            Poly div(d + 1, 0);
            long long v = packed;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(v % p);
                v /= p;
            }
            div[d] = 1;
            if (poly_is_zero(poly_mod(m, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* e_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself prime
    if (!is_prime(p)) return false;
    int e = 0, n = q;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

Field::Field(int q) : q_(q) {
    if (q > kMaxOrder) throw SizeCapExceeded("field order above 65536: " + std::to_string(q));
    if (!is_prime_power(q, &p_, &e_))
        throw NotPrimePower("field order must be a prime power, got " + std::to_string(q));

    if (e_ > 1) {
        // Least packed non-leading coefficient vector giving an irreducible
        // monic polynomial x^e + m(x).
        long long count = 1;
        for (int i = 0; i < e_; ++i) count *= p_;
        for (long long packed = 0;; ++packed) {
            if (packed >= count) throw Error("no irreducible modulus found");  // unreachable
            Poly m(e_ + 1, 0);
            long long v = packed;
            for (int i = 0; i < e_; ++i) {
                m[i] = static_cast<int>(v % p_);
                v /= p_;
            }
            m[e_] = 1;
            if (poly_irreducible(m, p_)) {
                mod_ = m;
                break;
            }
        }
    }

    // Least element of multiplicative order q-1.
    auto factors = prime_factors(q_ - 1);
    for (int cand = 1; cand < q_; ++cand) {
        bool primitive = true;
        for (int f : factors) {
            int x = 1, base = cand;
            long long k = (q_ - 1) / f;
            while (k > 0) {
                if (k & 1) x = mul_poly(x, base);
                base = mul_poly(base, base);
                k >>= 1;
            }
            if (x == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha_ = cand;
            break;
        }
    }

    if (q_ < kTableLimit) {
        log_.assign(q_, -1);
        exp_.assign(q_ - 1, 0);
        int x = 1;
        for (int k = 0; k < q_ - 1; ++k) {
            exp_[k] = x;
            log_[x] = k;
            x = mul_poly(x, alpha_);
        }
    }
}

void Field::check_range(int a) const {
    if (a < 0 || a >= q_) throw IndexOutOfRange("field element index out of range");
}

int Field::add(int a, int b) const {
    check_range(a);
    check_range(b);
    if (e_ == 1) return (a + b) % p_;
    int r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    check_range(a);
    if (e_ == 1) return (p_ - a) % p_;
    int r = 0, pw = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_poly(int a, int b) const {
    if (e_ == 1) return static_cast<int>((static_cast<long long>(a) * b) % p_);
    Poly pa, pb;
    for (int i = 0, v = a; i < e_; ++i, v /= p_) pa.push_back(v % p_);
    for (int i = 0, v = b; i < e_; ++i, v /= p_) pb.push_back(v % p_);
    trim(pa);
    trim(pb);
    Poly r = poly_mod(poly_mul(pa, pb, p_), mod_, p_);
    int packed = 0, pw = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        packed += r[i] * pw;
        pw *= p_;
    }
    return packed;
}

int Field::mul(int a, int b) const {
    check_range(a);
    check_range(b);
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    return mul_poly(a, b);
}

int Field::inv(int a) const {
    check_range(a);
    if (a == 0) throw Error("inverse of zero");
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

int Field::pow(int a, long long k) const {
    check_range(a);
    long long m = q_ - 1;
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw Error("inverse of zero");
        return 0;
    }
    k %= m;
    if (k < 0) k += m;
    int r = 1, base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int Field::dlog(int a) const {
    check_range(a);
    if (a == 0) throw Error("dlog of zero");
    if (!log_.empty()) return log_[a];
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        if (x == a) return k;
        x = mul(x, alpha_);
    }
    throw Error("dlog: element not generated");  // unreachable
}

Field field_new(int q) { return Field(q); }

CosetPair cosets(const Field& f) {
    if (f.p() == 2) throw EvenCharacteristic("cosets need odd characteristic");
    CosetPair c;
    c.t = (f.q() - 1) / 2;
    for (int a = 1; a < f.q(); ++a)
        (f.dlog(a) % 2 == 0 ? c.c0 : c.c1).push_back(a);
    return c;  // ascending by construction
}

long long cyclotomy_number(const Field& f, int i, int j) {
    if (f.p() == 2) throw EvenCharacteristic("cyclotomy numbers need odd characteristic");
    if ((i | j) < 0 || i > 1 || j > 1) throw IndexOutOfRange("cyclotomy index must be 0 or 1");
    long long count = 0;
    for (int k = 0; k < f.q() - 1; ++k) {
        int x = f.pow(f.alpha(), k);
        int y = f.add(1, x);
        if (y == 0) continue;
        if (k % 2 == i && f.dlog(y) % 2 == j) ++count;
    }
    return count;
}

std::array<std::array<long long, 2>, 2> cyclotomy_formula(long long t) {
    std::array<std::array<long long, 2>, 2> n{};
    if (t % 2 == 1) {
        n[0][0] = n[1][1] = n[1][0] = (t - 1) / 2;
        n[0][1] = (t + 1) / 2;
    } else {
        n[0][0] = t / 2 - 1;
        n[0][1] = n[1][0] = n[1][1] = t / 2;
    }
    return n;
}

Multiset difference_multiset(const Field& f, const Multiset& a, const Multiset& b) {
    Multiset d;
    for (const auto& [x, mx] : a)
        for (const auto& [y, my] : b) d[f.sub(x, y)] += mx * my;
    return d;
}

Multiset difference_multiset(const Field& f, const std::vector<int>& a,
                             const std::vector<int>& b) {
    Multiset ma, mb;
    for (int x : a) ++ma[x];
    for (int y : b) ++mb[y];
    return difference_multiset(f, ma, mb);
}

}  // namespace potb
