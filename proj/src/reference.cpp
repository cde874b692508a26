#include "potb/reference.hpp"

#include <cmath>

namespace potb::ref {

IncidenceSet recount(const Plan& p) {
    p.validate();
    const int m = p.m();
    const int b = p.b();

    IncidenceSet inc;
    inc.s.resize(m);
    for (int i = 0; i < m; ++i) inc.s[i] = p.factors[i].levels.size();
    inc.L.resize(m);
    inc.N.assign(m, std::vector<IMat>(m));
    inc.r.resize(m);
    for (int i = 0; i < m; ++i) {
        inc.L[i] = IMat(inc.s[i], b);
        inc.r[i].assign(inc.s[i], 0);
        for (int j = 0; j < m; ++j) inc.N[i][j] = IMat(inc.s[i], inc.s[j]);
    }

    std::vector<int> li(m);
    for (int blk = 0; blk < b; ++blk) {
        for (const Run& run : p.blocks[blk]) {
            for (int i = 0; i < m; ++i) li[i] = p.factors[i].levels.index_of(run[i]);
            for (int i = 0; i < m; ++i) {
                ++inc.L[i].at(li[i], blk);
                ++inc.r[i][li[i]];
                for (int j = 0; j < m; ++j) ++inc.N[i][j].at(li[i], li[j]);
            }
        }
    }
    return inc;
}

int float_rank(std::vector<std::vector<double>> a, double tol) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a.front().size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = rank;
        for (int r = rank + 1; r < rows; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) <= tol) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            const double f = a[r][col] / a[rank][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace potb::ref
