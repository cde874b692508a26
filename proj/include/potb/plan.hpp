#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potb/errors.hpp"

namespace potb {

// A factor level: a finite non-negative label, or the absorbing infinity
// level.  Ordering puts finite labels ascending with infinity after all of
// them; that ordering fixes row/column indexing of every incidence matrix.
struct Level {
    static constexpr int32_t kInfRaw = -1;
    int32_t raw = 0;

    static Level inf() { return Level{kInfRaw}; }
    static Level fin(int32_t v) { return Level{v}; }
    bool is_inf() const { return raw == kInfRaw; }
    int32_t label() const { return raw; }

    bool operator==(const Level&) const = default;
    bool operator<(const Level& o) const { return sort_key() < o.sort_key(); }
    long long sort_key() const { return is_inf() ? static_cast<long long>(1) << 40 : raw; }
};

// How shift amounts act on a factor's finite labels.
enum class LevelKind {
    Cyclic,  // label + u mod modulus
    Field,   // GF(modulus) addition on canonical element indices
    Labels,  // plain symbols, no shifting
};

// Declared level set of one factor.  Finite labels are sorted ascending and
// may include labels that no run currently uses; infinity, when declared,
// indexes last.  Shifting requires a Cyclic or Field kind with the full
//0..modulus-1 range declared, so a shifted plan stays within its declaration.
struct LevelSet {
    LevelKind kind = LevelKind::Labels;
    int modulus = 0;  // s for Cyclic, q for Field, 0 for Labels
    std::vector<int32_t> finite;
    bool has_inf = false;

    int size() const { return static_cast<int>(finite.size()) + (has_inf ? 1 : 0); }
    bool contains(Level l) const;
    int index_of(Level l) const;  // throws LevelOutOfRange
    Level at(int idx) const;      // throws IndexOutOfRange

    bool operator==(const LevelSet&) const = default;
};

LevelSet cyclic_levels(int s, bool with_inf = false);
LevelSet field_levels(int q, bool with_inf = false);
LevelSet label_levels(std::vector<int32_t> finite, bool with_inf = false);

struct Factor {
    std::string name;
    LevelSet levels;

    bool operator==(const Factor&) const = default;
};

using Run = std::vector<Level>;    // one level per factor
using Block = std::vector<Run>;    // runs in block order

// A blocked main-effect plan: ordered factors and equally sized blocks of
// runs.  Run order within a block and block order are part of the value;
// canonicalize() in the constructions module normalizes both.
struct Plan {
    std::vector<Factor> factors;
    std::vector<Block> blocks;
    std::string meta;  // provenance note: recipe id and parameters

    int m() const { return static_cast<int>(factors.size()); }
    int b() const { return static_cast<int>(blocks.size()); }
    int k() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
    int n_runs() const { return b() * k(); }

    // Shape and membership checks; throws ShapeMismatch / DimensionMismatch /
    // LevelOutOfRange.  Every constructor and combinator leaves plans valid;
    // parsed documents are validated on entry.
    void validate() const;

    bool operator==(const Plan& o) const {
        return factors == o.factors && blocks == o.blocks;
    }
};

// Finite shift amounts, one per factor.
using ShiftVector = std::vector<int32_t>;

}  // namespace potb
