#include "potb/ratmat.hpp"

#include "potb/errors.hpp"

namespace potb {

RMat to_rmat(const IMat& x) {
    RMat r(x.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    return r;
}

bool is_zero(const RMat& x) {
    for (const Rat& v : x.a)
        if (v != 0) return false;
    return true;
}

int rank(RMat m) {
    int rk = 0;
    for (int col = 0; col < m.cols && rk < m.rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rk)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(rk, c), m.at(pivot, c));
        for (int r = rk + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col) / m.at(rk, col);
            m.at(r, col) = 0;
            for (int c = col + 1; c < m.cols; ++c) m.at(r, c) -= f * m.at(rk, c);
        }
        ++rk;
    }
    return rk;
}

int exact_rank(const IMat& x) { return rank(to_rmat(x)); }

RMat psd_sweep_leading(RMat g, int na) {
    if (g.rows != g.cols) throw DimensionMismatch("sweep needs a square matrix");
    if (na < 0 || na > g.rows) throw IndexOutOfRange("sweep block size");
    for (int c = 0; c < na; ++c) {
        if (g.at(c, c) == 0) {
            for (int j = c; j < g.cols; ++j)
                if (g.at(c, j) != 0)
                    throw ConstraintViolation("zero pivot with nonzero row: not PSD");
            continue;
        }
        const Rat piv = g.at(c, c);
        for (int r = c + 1; r < g.rows; ++r) {
            if (g.at(r, c) == 0) continue;
            const Rat f = g.at(r, c) / piv;
            for (int j = c; j < g.cols; ++j) g.at(r, j) -= f * g.at(c, j);
        }
    }
    RMat out(g.rows - na, g.cols - na);
    for (int i = na; i < g.rows; ++i)
        for (int j = na; j < g.cols; ++j) out.at(i - na, j - na) = g.at(i, j);
    return out;
}

}  // namespace potb
