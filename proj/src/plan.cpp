#include "potb/plan.hpp"

#include <algorithm>
#include <numeric>

#include "potb/gf.hpp"

namespace potb {

bool LevelSet::contains(Level l) const {
    if (l.is_inf()) return has_inf;
    return std::binary_search(finite.begin(), finite.end(), l.label());
}

int LevelSet::index_of(Level l) const {
    if (l.is_inf()) {
        if (!has_inf) throw LevelOutOfRange("infinity level not declared");
        return static_cast<int>(finite.size());
    }
    auto it = std::lower_bound(finite.begin(), finite.end(), l.label());
    if (it == finite.end() || *it != l.label())
        throw LevelOutOfRange("level " + std::to_string(l.label()) + " not declared");
    return static_cast<int>(it - finite.begin());
}

Level LevelSet::at(int idx) const {
    if (idx < 0 || idx >= size()) throw IndexOutOfRange("level index " + std::to_string(idx));
    if (idx == static_cast<int>(finite.size())) return Level::inf();
    return Level::fin(finite[idx]);
}

LevelSet cyclic_levels(int s, bool with_inf) {
    if (s < 1) throw ConstraintViolation("cyclic level set needs modulus >= 1");
    LevelSet ls;
    ls.kind = LevelKind::Cyclic;
    ls.modulus = s;
    ls.finite.resize(s);
    std::iota(ls.finite.begin(), ls.finite.end(), 0);
    ls.has_inf = with_inf;
    return ls;
}

LevelSet field_levels(int q, bool with_inf) {
    int p = 0, e = 0;
    if (!is_prime_power(q, &p, &e))
        throw NotPrimePower("field level set needs a prime power, got " + std::to_string(q));
    LevelSet ls;
    ls.kind = LevelKind::Field;
    ls.modulus = q;
    ls.finite.resize(q);
    std::iota(ls.finite.begin(), ls.finite.end(), 0);
    ls.has_inf = with_inf;
    return ls;
}

LevelSet label_levels(std::vector<int32_t> finite, bool with_inf) {
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    for (int32_t v : finite)
        if (v < 0) throw LevelOutOfRange("finite labels must be non-negative");
    LevelSet ls;
    ls.kind = LevelKind::Labels;
    ls.modulus = 0;
    ls.finite = std::move(finite);
    ls.has_inf = with_inf;
    if (ls.size() == 0) throw ConstraintViolation("empty level set");
    return ls;
}

void Plan::validate() const {
    if (factors.empty()) throw ShapeMismatch("plan has no factors");
    if (blocks.empty()) throw ShapeMismatch("plan has no blocks");
    const size_t kk = blocks.front().size();
    if (kk == 0) throw ShapeMismatch("empty block");
    for (const Block& blk : blocks) {
        if (blk.size() != kk)
            throw ShapeMismatch("unequal block sizes: " + std::to_string(blk.size()) +
                                " vs " + std::to_string(kk));
        for (const Run& run : blk) {
            if (run.size() != factors.size())
                throw DimensionMismatch("run length " + std::to_string(run.size()) +
                                        " does not match factor count " +
                                        std::to_string(factors.size()));
            for (size_t i = 0; i < run.size(); ++i) {
                if (!factors[i].levels.contains(run[i]))
                    throw LevelOutOfRange("factor " + factors[i].name + " does not declare level " +
                                          (run[i].is_inf() ? std::string("inf")
                                                           : std::to_string(run[i].label())));
            }
        }
    }
    for (const Factor& f : factors)
        if (f.levels.size() == 0) throw ShapeMismatch("factor " + f.name + " has no levels");
}

}  // namespace potb
