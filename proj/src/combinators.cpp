#include "potb/combinators.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "potb/gf.hpp"

namespace potb {

namespace {

// Per-factor shifting engine: validates amounts against the declared kind
// once, keeps the field object alive across a whole plan rewrite.
struct Shifter {
    const LevelSet* ls;
    std::optional<Field> fld;

    explicit Shifter(const LevelSet& levels) : ls(&levels) {
        if (ls->kind == LevelKind::Field) fld.emplace(field_new(ls->modulus));
    }

    Level apply(Level l, int32_t amount) const {
        if (amount == 0) return l;  // zero shift is identity on every kind
        if (ls->kind == LevelKind::Labels)
            throw ShiftOutOfRange("label-kind levels admit only the zero shift");
        if (amount < 0 || amount >= ls->modulus)
            throw ShiftOutOfRange("shift " + std::to_string(amount) + " outside [0, " +
                                  std::to_string(ls->modulus) + ")");
        if (l.is_inf()) return l;  // infinity absorbs every shift
        int32_t moved = ls->kind == LevelKind::Cyclic
                            ? static_cast<int32_t>((l.label() + amount) % ls->modulus)
                            : static_cast<int32_t>(fld->add(l.label(), amount));
        Level out = Level::fin(moved);
        if (!ls->contains(out))
            throw LevelOutOfRange("shift leaves declared level set at label " +
                                  std::to_string(moved));
        return out;
    }
};

std::vector<Shifter> make_shifters(const Plan& p) {
    std::vector<Shifter> sh;
    sh.reserve(p.factors.size());
    for (const Factor& f : p.factors) sh.emplace_back(f.levels);
    return sh;
}

Block shift_block(const std::vector<Shifter>& sh, const Block& blk, const ShiftVector& v) {
    Block out = blk;
    for (Run& run : out)
        for (size_t i = 0; i < run.size(); ++i) run[i] = sh[i].apply(run[i], v[i]);
    return out;
}

}  // namespace

Level shift_level(const LevelSet& ls, Level l, int32_t amount) {
    return Shifter(ls).apply(l, amount);
}

Plan shift_plan(const Plan& p, const ShiftVector& v) {
    if (v.size() != static_cast<size_t>(p.m()))
        throw DimensionMismatch("shift vector length " + std::to_string(v.size()) +
                                " vs " + std::to_string(p.m()) + " factors");
    auto sh = make_shifters(p);
    Plan out = p;
    for (Block& blk : out.blocks) blk = shift_block(sh, blk, v);
    return out;
}

Plan oplus(const Plan& p, int s) {
    if (s < 1) throw ConstraintViolation("oplus cycle must be >= 1");
    if (s == 1) return p;  // only the zero shift, identity on every kind
    for (const Factor& f : p.factors) {
        if (f.levels.kind == LevelKind::Labels)
            throw ConstraintViolation("oplus needs a cyclic or field factor: " + f.name);
        if (f.levels.modulus != s)
            throw ConstraintViolation("factor " + f.name + " has cycle " +
                                      std::to_string(f.levels.modulus) + ", oplus got " +
                                      std::to_string(s));
    }
    auto sh = make_shifters(p);
    Plan out;
    out.factors = p.factors;
    out.meta = p.meta;
    out.blocks.reserve(p.blocks.size() * s);
    ShiftVector v(p.m());
    for (int u = 0; u < s; ++u) {
        std::fill(v.begin(), v.end(), u);
        for (const Block& blk : p.blocks) out.blocks.push_back(shift_block(sh, blk, v));
    }
    return out;
}

Plan add_along(const Plan& p, const std::vector<ShiftVector>& V) {
    if (V.empty()) throw ConstraintViolation("empty shift-vector list");
    for (const ShiftVector& v : V)
        if (v.size() != static_cast<size_t>(p.m()))
            throw DimensionMismatch("shift vector length " + std::to_string(v.size()) +
                                    " vs " + std::to_string(p.m()) + " factors");
    auto sh = make_shifters(p);
    Plan out;
    out.factors = p.factors;
    out.meta = p.meta;
    out.blocks.reserve(p.blocks.size() * V.size());
    for (const ShiftVector& v : V)
        for (const Block& blk : p.blocks) out.blocks.push_back(shift_block(sh, blk, v));
    return out;
}

Plan join(const Plan& p1, const Plan& p2) {
    if (p1.b() != p2.b())
        throw ShapeMismatch("join needs equal block counts: " + std::to_string(p1.b()) +
                            " vs " + std::to_string(p2.b()));
    if (p1.k() != p2.k())
        throw ShapeMismatch("join needs equal block sizes: " + std::to_string(p1.k()) +
                            " vs " + std::to_string(p2.k()));
    Plan out;
    out.factors = p1.factors;
    out.factors.insert(out.factors.end(), p2.factors.begin(), p2.factors.end());
    out.meta = p1.meta;
    out.blocks.resize(p1.b());
    for (int i = 0; i < p1.b(); ++i) {
        Block& blk = out.blocks[i];
        blk.resize(p1.k());
        for (int j = 0; j < p1.k(); ++j) {
            blk[j] = p1.blocks[i][j];
            const Run& tail = p2.blocks[i][j];
            blk[j].insert(blk[j].end(), tail.begin(), tail.end());
        }
    }
    return out;
}

Plan power(const Plan& p, int t) {
    if (t < 1) throw ConstraintViolation("power needs t >= 1");
    if (t == 1) return p;
    Plan out;
    out.meta = p.meta;
    out.factors.reserve(p.factors.size() * t);
    for (int c = 1; c <= t; ++c)
        for (const Factor& f : p.factors)
            out.factors.push_back(Factor{f.name + "#" + std::to_string(c), f.levels});
    out.blocks.resize(p.b());
    for (int i = 0; i < p.b(); ++i) {
        Block& blk = out.blocks[i];
        blk.resize(p.k());
        for (int j = 0; j < p.k(); ++j) {
            const Run& base = p.blocks[i][j];
            Run& run = blk[j];
            run.reserve(base.size() * t);
            for (int c = 0; c < t; ++c) run.insert(run.end(), base.begin(), base.end());
        }
    }
    return out;
}

Plan diamond(const std::vector<std::vector<int32_t>>& H, const Plan& p0) {
    if (H.empty() || H.front().empty()) throw ShapeMismatch("empty shift array");
    const size_t q = H.front().size();
    for (const auto& row : H)
        if (row.size() != q) throw ShapeMismatch("ragged shift array");
    const int m = p0.m();
    Plan base = power(p0, static_cast<int>(q));
    std::vector<ShiftVector> V;
    V.reserve(H.size());
    for (const auto& row : H) {
        ShiftVector v;
        v.reserve(q * m);
        for (int32_t amount : row) v.insert(v.end(), m, amount);
        V.push_back(std::move(v));
    }
    return add_along(base, V);
}

Plan diamond(const OrthArray& h, const Plan& p0) {
    std::vector<std::vector<int32_t>> H(h.n_runs, std::vector<int32_t>(h.m));
    for (int i = 0; i < h.n_runs; ++i)
        for (int j = 0; j < h.m; ++j) H[i][j] = h.at(i, j);
    return diamond(H, p0);
}

Plan union_merge(const Plan& p1, const Plan& p2) {
    if (p1.m() != p2.m())
        throw ShapeMismatch("union needs equal factor counts: " + std::to_string(p1.m()) +
                            " vs " + std::to_string(p2.m()));
    if (p1.k() != p2.k())
        throw ShapeMismatch("union needs equal block sizes: " + std::to_string(p1.k()) +
                            " vs " + std::to_string(p2.k()));
    Plan out;
    out.meta = p1.meta;
    out.factors.resize(p1.m());
    for (int i = 0; i < p1.m(); ++i) {
        const LevelSet& a = p1.factors[i].levels;
        const LevelSet& bset = p2.factors[i].levels;
        Factor& f = out.factors[i];
        f.name = p1.factors[i].name;
        if (a == bset) {
            f.levels = a;
        } else {
            std::vector<int32_t> merged = a.finite;
            merged.insert(merged.end(), bset.finite.begin(), bset.finite.end());
            f.levels = label_levels(std::move(merged), a.has_inf || bset.has_inf);
        }
    }
    out.blocks = p1.blocks;
    out.blocks.insert(out.blocks.end(), p2.blocks.begin(), p2.blocks.end());
    return out;
}

Plan map_levels(const Plan& p, const std::vector<std::map<int32_t, int32_t>>& maps) {
    if (maps.size() != static_cast<size_t>(p.m()))
        throw DimensionMismatch("need one level map per factor");
    Plan out;
    out.meta = p.meta;
    out.factors.resize(p.m());
    for (int i = 0; i < p.m(); ++i) {
        const LevelSet& ls = p.factors[i].levels;
        std::vector<int32_t> image;
        image.reserve(ls.finite.size());
        for (int32_t lab : ls.finite) {
            auto it = maps[i].find(lab);
            if (it == maps[i].end())
                throw UnmappedLevel("factor " + p.factors[i].name + " level " +
                                    std::to_string(lab) + " has no image");
            image.push_back(it->second);
        }
        out.factors[i].name = p.factors[i].name;
        out.factors[i].levels = label_levels(std::move(image), ls.has_inf);
    }
    out.blocks = p.blocks;
    for (Block& blk : out.blocks)
        for (Run& run : blk)
            for (int i = 0; i < p.m(); ++i)
                if (!run[i].is_inf()) run[i] = Level::fin(maps[i].at(run[i].label()));
    return out;
}

}  // namespace potb
