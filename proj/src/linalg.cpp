#include "potb/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "potb/errors.hpp"

namespace potb {

IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat constant(int rows, int cols, long long v) {
    IMat m(rows, cols);
    std::fill(m.a.begin(), m.a.end(), v);
    return m;
}

IMat mul(const IMat& x, const IMat& y) {
    if (x.cols != y.rows) throw DimensionMismatch("mul: inner dimensions differ");
    IMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

IMat transpose(const IMat& x) {
    IMat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

IMat sub(const IMat& x, const IMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("sub: shapes differ");
    IMat r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

IMat scaled(const IMat& x, long long c) {
    IMat r = x;
    for (auto& v : r.a) v *= c;
    return r;
}

bool is_zero(const IMat& x) {
    return std::all_of(x.a.begin(), x.a.end(), [](long long v) { return v == 0; });
}

std::vector<long long> row_sums(const IMat& x) {
    std::vector<long long> s(x.rows, 0);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) s[i] += x.at(i, j);
    return s;
}

std::vector<long long> col_sums(const IMat& x) {
    std::vector<long long> s(x.cols, 0);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) s[j] += x.at(i, j);
    return s;
}

std::string to_text(const IMat& x) {
    size_t w = 1;
    for (long long v : x.a) w = std::max(w, std::to_string(v).size());
    std::ostringstream out;
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) {
            std::string s = std::to_string(x.at(i, j));
            out << std::string(w - s.size() + (j ? 1 : 0), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace potb
