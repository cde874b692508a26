#include "potb/incidence.hpp"

namespace potb {

namespace {

// Level indices for every run, factor-major: idx[i][run] for run in
// block-major order.  Computed once so the counting loops stay branch-free.
std::vector<std::vector<int>> level_indices(const Plan& p) {
    const int m = p.m();
    std::vector<std::vector<int>> idx(m);
    for (int i = 0; i < m; ++i) {
        idx[i].reserve(p.n_runs());
        const LevelSet& ls = p.factors[i].levels;
        for (const Block& blk : p.blocks)
            for (const Run& run : blk) idx[i].push_back(ls.index_of(run[i]));
    }
    return idx;
}

}  // namespace

IncidenceSet incidence(const Plan& p) {
    p.validate();
    const int m = p.m();
    const int b = p.b();
    const int k = p.k();
    const auto idx = level_indices(p);

    IncidenceSet inc;
    inc.s.resize(m);
    for (int i = 0; i < m; ++i) inc.s[i] = p.factors[i].levels.size();
    inc.L.resize(m);
    inc.N.assign(m, std::vector<IMat>(m));
    inc.r.resize(m);

    // One independent counting job per L_i and per unordered factor pair.
    const int n_pairs = m * (m + 1) / 2;
    const int n_jobs = m + n_pairs;
#pragma omp parallel for schedule(dynamic)
    for (int job = 0; job < n_jobs; ++job) {
        if (job < m) {
            const int i = job;
            IMat Li(inc.s[i], b);
            for (int blk = 0; blk < b; ++blk)
                for (int t = 0; t < k; ++t) ++Li.at(idx[i][blk * k + t], blk);
            inc.L[i] = std::move(Li);
        } else {
            // Unrank job - m into the pair (i, j), i <= j.
            int rest = job - m;
            int i = 0;
            while (rest >= m - i) rest -= m - i, ++i;
            const int j = i + rest;
            IMat Nij(inc.s[i], inc.s[j]);
            const int n = b * k;
            for (int run = 0; run < n; ++run) ++Nij.at(idx[i][run], idx[j][run]);
            inc.N[i][j] = std::move(Nij);
        }
    }
    for (int i = 0; i < m; ++i) {
        inc.r[i] = row_sums(inc.L[i]);
        for (int j = 0; j < i; ++j) inc.N[i][j] = transpose(inc.N[j][i]);
    }
    return inc;
}

}  // namespace potb
