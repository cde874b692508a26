#pragma once

#include <map>
#include <string>
#include <vector>

#include "potb/arrays.hpp"
#include "potb/plan.hpp"

namespace potb {

// Named integer parameters for a catalog recipe, e.g. {{"s", 9}, {"a", 1}}.
using Params = std::map<std::string, long long>;

// A constructed plan together with the properties it is declared to satisfy.
// Every claim is a string in the grammar accepted by evaluate_claim, so a
// result can be checked mechanically: construct, then evaluate each claim.
struct RecipeResult {
    Plan plan;
    std::vector<std::string> claims;
};

// One row of the static catalog listing.
struct CatalogEntry {
    std::string id;
    std::string summary;      // what the recipe builds, one line
    std::string params;       // accepted parameters with defaults
    std::string constraints;  // validated before construction
    std::string claims;       // claim template, parameters symbolic
    std::string preset;       // noted parameter choice with extra claims, or ""
};

// Static recipe listing; ids are the vocabulary of construct().
const std::vector<CatalogEntry>& catalog();

// Builds the plan for a catalog recipe.  Unknown ids and unknown or missing
// parameter names throw ParseError; parameter values outside a recipe's
// constraints throw ConstraintViolation naming the violated constraint.
// Defaults when a recipe accepts them: a=1, b=2, c=3, d=4, delta = smallest
// non-square, variant=1.
RecipeResult construct(const std::string& id, const Params& params = {});

// Generic form of the three-level recipe family: any column-orthogonal array
// with three symbols expands the two seed block pairs into a plan on 2N
// blocks of size four covering 3(2m+1) factors.  construct("thm5.3a", ...)
// wraps this with the recursive-array input.
Plan three_level_pair_join(const OrthArray& oa);

// Sorts runs within each block, then blocks, both lexicographically with
// infinity ordered last.  Factors keep their order.  Idempotent; use it to
// compare plans up to run/block ordering.
Plan canonicalize(const Plan& p);

}  // namespace potb
