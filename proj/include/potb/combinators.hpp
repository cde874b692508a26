#pragma once

#include <map>
#include <vector>

#include "potb/arrays.hpp"
#include "potb/plan.hpp"

namespace potb {

// Plan combinators.  All of them return a fresh valid plan and leave their
// inputs untouched.  Block order in the results is deterministic and is part
// of each operation's contract, since downstream golden comparisons depend
// on it.

// Shift one level by one finite amount under the factor's declared kind.
// Infinity absorbs every shift.  Cyclic adds mod s, Field adds in GF(q) on
// canonical element indices, Labels rejects any shift.  The amount must lie
// in [0, modulus).
Level shift_level(const LevelSet& ls, Level l, int32_t amount);

// Shift every coordinate of every run: run + v, coordinate-wise.
Plan shift_plan(const Plan& p, const ShiftVector& v);

// Developed plan: one shifted copy of p per amount u = 0..s-1, every factor
// shifted by the same u.  Requires each factor to carry a full Cyclic or
// Field level set of modulus s.  Blocks: outer loop over u ascending, inner
// over p's blocks.
Plan oplus(const Plan& p, int s);

// One shifted copy of p per shift vector in V, in V's order (outer V, inner
// blocks of p).  Duplicates in V are honoured.
Plan add_along(const Plan& p, const std::vector<ShiftVector>& V);

// Side-by-side product: equal block counts and sizes required; run j of
// block i concatenates both plans' run j of block i.  Factor names pass
// through unchanged.
Plan join(const Plan& p1, const Plan& p2);

// t-fold self-join.  For t == 1 the plan comes back unchanged; for t >= 2
// every copy is renamed, copy c of factor "A" becoming "A#c" (1-based), and
// runs repeat t times side by side.
Plan power(const Plan& p, int t);

// Shift-pattern product: H is a p x q matrix of shift amounts.  The result
// has q copies of every factor (renamed when q >= 2) and p * b(p0) blocks:
// row i of H contributes the blocks of power(p0, q) with copy c shifted by
// H(i, c).  Outer loop over H's rows, inner over p0's blocks.  The overload
// reads an orthogonal array's runs as the rows of H.
Plan diamond(const std::vector<std::vector<int32_t>>& H, const Plan& p0);
Plan diamond(const OrthArray& h, const Plan& p0);

// Blocks of p1 followed by blocks of p2 over merged level declarations.
// Factor counts and block sizes must agree; factor names are taken from p1.
// A factor's merged level set keeps its kind only when both declarations
// are identical, otherwise it demotes to Labels over the union.
Plan union_merge(const Plan& p1, const Plan& p2);

// Relabel levels factor by factor.  Every finite label a factor declares
// must have an image (UnmappedLevel otherwise); infinity maps to itself.
// Images may collide, which merges levels.  Result level sets are Labels.
Plan map_levels(const Plan& p, const std::vector<std::map<int32_t, int32_t>>& maps);

}  // namespace potb
