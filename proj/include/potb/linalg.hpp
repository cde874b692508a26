#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace potb {

// Dense row-major integer matrix.  Sizes here are desk scale (a few hundred
// rows at most), all arithmetic is exact in int64.
struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const IMat&) const = default;
};

IMat identity(int n);
IMat constant(int rows, int cols, long long v);
IMat mul(const IMat& x, const IMat& y);
IMat transpose(const IMat& x);
IMat sub(const IMat& x, const IMat& y);
IMat scaled(const IMat& x, long long c);
bool is_zero(const IMat& x);
std::vector<long long> row_sums(const IMat& x);
std::vector<long long> col_sums(const IMat& x);

// Aligned one-line-per-row rendering, for witnesses and the oracle CLI.
std::string to_text(const IMat& x);

}  // namespace potb
