#pragma once

#include <vector>

#include "potb/incidence.hpp"
#include "potb/plan.hpp"

namespace potb::ref {

// Independent serial oracle for incidence(): a single run-major sweep that
// accumulates every matrix at once, structured deliberately unlike the
// pair-major kernel so the two cannot share a bug.  Used by the metamorphic
// tests and as the baseline in the benchmark.
IncidenceSet recount(const Plan& p);

// Advisory floating-point rank via partial-pivot elimination.  The exact
// rational rank is authoritative; this one only cross-checks it.
int float_rank(std::vector<std::vector<double>> a, double tol = 1e-8);

}  // namespace potb::ref
