#include "potb/arrays.hpp"

#include <string>

#include "potb/gf.hpp"

namespace potb {

namespace {

constexpr int kOaRunCap = 4096;

bool paley_order(int n) {
    // n = q + 1 with q a prime power, q = 3 mod 4.
    int q = n - 1;
    return q >= 3 && q % 4 == 3 && is_prime_power(q, nullptr, nullptr);
}

bool reachable(int n) {
    if (n == 1 || n == 2) return true;
    if (n % 4 != 0) return false;
    return reachable(n / 2) || paley_order(n);
}

HadamardMatrix kron(const HadamardMatrix& a, const HadamardMatrix& b) {
    HadamardMatrix r;
    r.n = a.n * b.n;
    r.h.resize(static_cast<size_t>(r.n) * r.n);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            r.at(i, j) = static_cast<int8_t>(a.at(i / b.n, j / b.n) * b.at(i % b.n, j % b.n));
    return r;
}

// Negate rows then columns so the first row and column are all +1.
void normalize(HadamardMatrix& h) {
    for (int i = 0; i < h.n; ++i)
        if (h.at(i, 0) < 0)
            for (int j = 0; j < h.n; ++j) h.at(i, j) = static_cast<int8_t>(-h.at(i, j));
    for (int j = 0; j < h.n; ++j)
        if (h.at(0, j) < 0)
            for (int i = 0; i < h.n; ++i) h.at(i, j) = static_cast<int8_t>(-h.at(i, j));
}

// Order q+1 from the quadratic character of GF(q), q = 3 mod 4.  Rows and
// columns are indexed by a formal point followed by the field elements; the
// skewness of the character table under q = 3 mod 4 gives the identity.
HadamardMatrix paley(int q) {
    Field f(q);
    std::vector<int> chi(q, 0);
    for (int x = 1; x < q; ++x) chi[x] = (f.dlog(x) % 2 == 0) ? 1 : -1;

    HadamardMatrix h;
    h.n = q + 1;
    h.h.assign(static_cast<size_t>(h.n) * h.n, 0);
    h.at(0, 0) = 1;
    for (int j = 1; j <= q; ++j) h.at(0, j) = 1;
    for (int i = 1; i <= q; ++i) h.at(i, 0) = -1;
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            h.at(i, j) = static_cast<int8_t>(i == j ? 1 : chi[f.sub(i - 1, j - 1)]);
    normalize(h);
    return h;
}

}  // namespace

bool hadamard_ok(const HadamardMatrix& h) {
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j) {
            long long dot = 0;
            for (int k = 0; k < h.n; ++k) dot += h.at(i, k) * h.at(j, k);
            if (dot != (i == j ? h.n : 0)) return false;
        }
    return true;
}

HadamardMatrix hadamard(int n) {
    if (n < 1 || (n > 2 && n % 4 != 0) || !reachable(n))
        throw UnsupportedOrder("no Hadamard matrix construction for order " + std::to_string(n));
    HadamardMatrix h;
    if (n == 1) {
        h.n = 1;
        h.h = {1};
    } else if (n == 2) {
        h.n = 2;
        h.h = {1, 1, 1, -1};
    } else if (reachable(n / 2)) {
        h = kron(hadamard(2), hadamard(n / 2));
    } else {
        h = paley(n - 1);
    }
    normalize(h);
    return h;
}

IMat OrthArray::as_imat() const {
    IMat r(n_runs, m);
    for (int i = 0; i < n_runs; ++i)
        for (int j = 0; j < m; ++j) r.at(i, j) = at(i, j);
    return r;
}

OrthArray oa_rao(int s, int n) {
    if (n < 2) throw ConstraintViolation("oa_rao needs n >= 2");
    Field f(s);
    long long runs = 1;
    for (int i = 0; i < n; ++i) {
        runs *= s;
        if (runs > kOaRunCap)
            throw SizeCapExceeded("oa_rao run count above " + std::to_string(kOaRunCap));
    }

    // Canonical projective representatives, ascending by packed value.
    std::vector<std::vector<int>> cols;
    for (long long packed = 1; packed < runs; ++packed) {
        std::vector<int> c(n);
        long long v = packed;
        for (int i = 0; i < n; ++i) {
            c[i] = static_cast<int>(v % s);
            v /= s;
        }
        int lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] == 1) cols.push_back(c);
    }

    OrthArray oa;
    oa.n_runs = static_cast<int>(runs);
    oa.m = static_cast<int>(cols.size());
    oa.s = s;
    oa.cells.resize(static_cast<size_t>(oa.n_runs) * oa.m);
    for (long long packed = 0; packed < runs; ++packed) {
        std::vector<int> x(n);
        long long v = packed;
        for (int i = 0; i < n; ++i) {
            x[i] = static_cast<int>(v % s);
            v /= s;
        }
        for (int j = 0; j < oa.m; ++j) {
            int dot = 0;
            for (int i = 0; i < n; ++i) dot = f.add(dot, f.mul(x[i], cols[j][i]));
            oa.at(static_cast<int>(packed), j) = dot;
        }
    }
    return oa;
}

OrthArray oa_from_hadamard(const HadamardMatrix& h) {
    OrthArray oa;
    oa.n_runs = h.n;
    oa.m = h.n - 1;
    oa.s = 2;
    oa.cells.resize(static_cast<size_t>(oa.n_runs) * oa.m);
    for (int i = 0; i < h.n; ++i)
        for (int j = 1; j < h.n; ++j) oa.at(i, j - 1) = h.at(i, j) > 0 ? 0 : 1;
    return oa;
}

OrthArray q_augment(const OrthArray& oa) {
    if (oa.is_augmented) throw AlreadyAugmented("array already carries the zero column");
    OrthArray q;
    q.n_runs = oa.n_runs;
    q.m = oa.m + 1;
    q.s = oa.s;
    q.is_augmented = true;
    q.cells.assign(static_cast<size_t>(q.n_runs) * q.m, 0);
    for (int i = 0; i < oa.n_runs; ++i)
        for (int j = 0; j < oa.m; ++j) q.at(i, j + 1) = oa.at(i, j);
    return q;
}

OrthArray q_array_2(int n) { return q_augment(oa_from_hadamard(hadamard(n))); }

Strength2Witness verify_strength2(const OrthArray& oa) {
    for (int v : oa.cells)
        if (v < 0 || v >= oa.s) throw IndexOutOfRange("array cell outside 0..s-1");

    Strength2Witness w;
    int first = 0;
    if (oa.is_augmented) {
        first = 1;
        for (int i = 0; i < oa.n_runs; ++i)
            if (oa.at(i, 0) != 0) {
                w.ok = false;
                w.col_a = 0;
                w.col_b = -1;
                return w;
            }
    }

    int applicable = oa.m - first;
    if (applicable < 2) {
        // Degenerate width: fall back to symbol balance per column.
        for (int j = first; j < oa.m; ++j) {
            IMat counts(oa.s, 1);
            for (int i = 0; i < oa.n_runs; ++i) ++counts.at(oa.at(i, j), 0);
            for (int v = 0; v < oa.s; ++v)
                if (counts.at(v, 0) * oa.s != oa.n_runs) {
                    w.ok = false;
                    w.col_a = w.col_b = j;
                    w.pair_counts = counts;
                    return w;
                }
        }
        return w;
    }

    long long expect = oa.n_runs / (static_cast<long long>(oa.s) * oa.s);
    if (expect * oa.s * oa.s != oa.n_runs) {
        w.ok = false;
        w.col_a = w.col_b = first;
        return w;
    }
    for (int a = first; a < oa.m; ++a)
        for (int b = a + 1; b < oa.m; ++b) {
            IMat counts(oa.s, oa.s);
            for (int i = 0; i < oa.n_runs; ++i) ++counts.at(oa.at(i, a), oa.at(i, b));
            if (counts != constant(oa.s, oa.s, expect)) {
                w.ok = false;
                w.col_a = a;
                w.col_b = b;
                w.pair_counts = counts;
                return w;
            }
        }
    return w;
}

}  // namespace potb
