#pragma once

#include <cstdint>
#include <vector>

#include "potb/errors.hpp"
#include "potb/linalg.hpp"

namespace potb {

// +1/-1 matrix of order n with H * H' = n * I, normalized so the first row
// and first column are all +1.
struct HadamardMatrix {
    int n = 0;
    std::vector<int8_t> h;

    int at(int i, int j) const { return h[static_cast<size_t>(i) * n + j]; }
    int8_t& at(int i, int j) { return h[static_cast<size_t>(i) * n + j]; }
};

// Builds a Hadamard matrix of order n, or throws UnsupportedOrder.
// Reachable orders: 1, 2, and any n divisible by 4 obtainable by halving
// (Sylvester doubling) and/or a Paley construction at some stage (n = q+1
// with q a prime power, q = 3 mod 4).  Order 6 is a canonical unreachable
// example; 92 is the smallest order divisible by 4 this recursion misses.
HadamardMatrix hadamard(int n);

// Exact check of the defining identity H * H' == n * I.
bool hadamard_ok(const HadamardMatrix& h);

// Orthogonal array with runs as rows: n_runs x m over symbols 0..s-1.
// Strength 2 means every ordered symbol pair appears n_runs/s^2 times in
// every column pair.  When is_augmented is set, column 0 is an all-zero
// column prepended to a strength-2 array and is exempt from pair counting;
// downstream the rows then serve as shift vectors.
struct OrthArray {
    int n_runs = 0;
    int m = 0;
    int s = 0;
    bool is_augmented = false;
    std::vector<int> cells;  // row-major

    int at(int r, int c) const { return cells[static_cast<size_t>(r) * m + c]; }
    int& at(int r, int c) { return cells[static_cast<size_t>(r) * m + c]; }

    // Rows as an integer matrix, for the diamond combinator.
    IMat as_imat() const;
};

// Points/hyperplanes construction: OA(s^n, (s^n-1)/(s-1), s, 2) for s a
// prime power and n >= 2.  Runs are the vectors of GF(s)^n in packed index
// order; columns are the canonical projective representatives (first nonzero
// coordinate equal to 1) in packed order; the cell is their dot product.
// Throws NotPrimePower, or SizeCapExceeded when s^n > 4096.
OrthArray oa_rao(int s, int n);

// OA(n, n-1, 2, 2) from a Hadamard matrix: drop the all-ones column of the
// normalized matrix and map +1 -> 0, -1 -> 1.
OrthArray oa_from_hadamard(const HadamardMatrix& h);

// Prepends the all-zero column.  Throws AlreadyAugmented.
OrthArray q_augment(const OrthArray& oa);

// Convenience: q_augment(oa_from_hadamard(hadamard(n))), the n x n array
// whose rows act as shift vectors downstream.
OrthArray q_array_2(int n);

// Failure evidence from strength verification: the offending column pair
// and its joint count table.
struct Strength2Witness {
    bool ok = true;
    int col_a = -1, col_b = -1;
    IMat pair_counts;
};

// Checks every applicable unordered column pair for uniform joint counts.
// Augmented arrays have column 0 checked to be identically zero instead.
// Arrays with fewer than two applicable columns are checked for per-column
// symbol balance only.
Strength2Witness verify_strength2(const OrthArray& oa);

}  // namespace potb
