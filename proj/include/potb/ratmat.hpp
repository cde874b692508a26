#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "potb/linalg.hpp"

namespace potb {

using Rat = boost::multiprecision::cpp_rational;

// Dense rational matrix for the exact rank and Schur-complement work.
struct RMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RMat() = default;
    RMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const RMat&) const = default;
};

RMat to_rmat(const IMat& x);
bool is_zero(const RMat& x);

// Exact rank by Gaussian elimination over the rationals (destructive copy).
int rank(RMat a);
int exact_rank(const IMat& x);

// For a symmetric positive semidefinite g, eliminate the leading na rows and
// columns and return the trailing Schur complement.  A zero pivot forces its
// entire row to vanish (PSD); a nonzero entry there means g was not PSD and
// raises ConstraintViolation.
RMat psd_sweep_leading(RMat g, int na);

}  // namespace potb
