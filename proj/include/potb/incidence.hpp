#pragma once

#include <vector>

#include "potb/linalg.hpp"
#include "potb/plan.hpp"

namespace potb {

// Exact integer incidence summary of a plan.  All matrices index levels in
// declared order: finite labels ascending, then infinity.  Declared levels
// that no run uses contribute zero rows, not missing rows.
struct IncidenceSet {
    std::vector<int> s;                      // declared level count per factor
    std::vector<std::vector<IMat>> N;        // N[i][j]: s_i x s_j level pair counts
    std::vector<IMat> L;                     // L[i]: s_i x b level-in-block counts
    std::vector<std::vector<long long>> r;   // r[i]: replication per level

    bool operator==(const IncidenceSet&) const = default;
};

// Pair-major counting: each (i, j) factor pair and each L_i is filled by its
// own scan over the runs, and independent fills run in parallel when OpenMP
// is available.  r is derived from L row sums.
IncidenceSet incidence(const Plan& p);

}  // namespace potb
