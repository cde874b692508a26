#include "potb/constructions.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>

#include "potb/combinators.hpp"
#include "potb/gf.hpp"

namespace potb {

namespace {

int32_t md(long long x, long long s) {
    long long r = x % s;
    if (r < 0) r += s;
    return static_cast<int32_t>(r);
}

std::string num(long long v) { return std::to_string(v); }

// Consumes parameters by name so leftovers can be rejected.  Value errors are
// ConstraintViolation (the recipe checks those); name errors are ParseError.
class ParamReader {
  public:
    ParamReader(std::string id, Params ps) : id_(std::move(id)), left_(std::move(ps)) {}

    long long req(const std::string& name) {
        auto it = left_.find(name);
        if (it == left_.end())
            throw ParseError(id_ + ": missing required parameter '" + name + "'");
        long long v = it->second;
        left_.erase(it);
        return v;
    }

    long long opt(const std::string& name, long long dflt) {
        auto it = left_.find(name);
        if (it == left_.end()) return dflt;
        long long v = it->second;
        left_.erase(it);
        return v;
    }

    void done() const {
        if (!left_.empty())
            throw ParseError(id_ + ": unknown parameter '" + left_.begin()->first + "'");
    }

  private:
    std::string id_;
    Params left_;
};

void need(bool ok, const std::string& constraint) {
    if (!ok) throw ConstraintViolation(constraint);
}

Run finite_run(std::initializer_list<int> xs) {
    Run r;
    for (int x : xs) r.push_back(Level::fin(x));
    return r;
}

// The four two-symbol seed runs 000, 011, 101, 110 shared by the three-level
// recipes; symbols are valid labels in any level set containing {0, 1}.
Block seed_block_o4() {
    const OrthArray base = oa_rao(2, 2);
    Block blk;
    for (int r = 0; r < base.n_runs; ++r) {
        Run run;
        for (int c = 0; c < base.m; ++c) run.push_back(Level::fin(base.at(r, c)));
        blk.push_back(run);
    }
    return blk;
}

Block relabel_block(const Block& blk, const std::map<int32_t, int32_t>& map) {
    Block out = blk;
    for (Run& run : out)
        for (Level& lv : run) {
            auto it = map.find(lv.label());
            if (it != map.end()) lv = Level::fin(it->second);
        }
    return out;
}

// Factors arrive from diamond() grouped copy-major; gives copy c of seed
// factor i the name bases[i] + (first + c).
void rename_copies(Plan& p, const std::vector<std::string>& bases, int first) {
    const int t = static_cast<int>(bases.size());
    for (int f = 0; f < p.m(); ++f)
        p.factors[f].name = bases[f % t] + num(first + f / t);
}

std::string shape_claim(long long b, long long k) {
    return "block_shape(" + num(b) + "," + num(k) + ")";
}
std::string factors_claim(long long m) { return "factors(" + num(m) + ")"; }
std::string levels_claim(long long s) { return "levels(" + num(s) + ")"; }

RecipeResult make_ex21() {
    Plan p;
    p.factors = {{"A1", cyclic_levels(4)}, {"A2", cyclic_levels(4)}};
    p.blocks = {
        {finite_run({0, 1}), finite_run({2, 3})}, {finite_run({1, 0}), finite_run({3, 2})},
        {finite_run({0, 2}), finite_run({3, 1})}, {finite_run({1, 3}), finite_run({2, 0})},
        {finite_run({0, 3}), finite_run({1, 2})}, {finite_run({3, 0}), finite_run({2, 1})},
    };
    p.meta = "ex2.1";
    return {p, {"potb", "balanced", "saturated", shape_claim(6, 2), factors_claim(2),
                levels_claim(4)}};
}

RecipeResult make_thm31a(ParamReader& pr) {
    const long long s = pr.req("s");
    const long long a = pr.opt("a", 1), b = pr.opt("b", 2);
    pr.done();
    need(s >= 5, "thm3.1a: s >= 5");
    const int32_t am = md(a, s), bm = md(b, s);
    need(am != 0 && bm != 0 && am != bm, "thm3.1a: a, b distinct nonzero mod s");
    const int si = static_cast<int>(s);
    auto L = [&](long long v) { return Level::fin(md(v, s)); };

    Plan p0;
    p0.factors = {{"A1", cyclic_levels(si)}, {"A2", cyclic_levels(si)}};
    p0.blocks = {
        {{L(a), L(b)}, {L(-a), L(-b)}},
        {{L(b), L(-a)}, {L(-b), L(a)}},
    };
    Plan plan = oplus(p0, si);
    plan.meta = "thm3.1a(s=" + num(s) + ", a=" + num(a) + ", b=" + num(b) + ")";

    std::vector<std::string> claims = {"potb", shape_claim(2 * s, 2), factors_claim(2),
                                       levels_claim(s)};
    if (s == 5 && am == 1 && bm == 2) claims.push_back("balanced");
    return {plan, claims};
}

RecipeResult make_thm31b1(ParamReader& pr) {
    const long long s = pr.req("s");
    const long long a = pr.opt("a", 1), b = pr.opt("b", 2);
    pr.done();
    need(s >= 5, "thm3.1b1: s >= 5");
    const int32_t am = md(a, s), bm = md(b, s);
    need(am != 0 && bm != 0 && am != bm, "thm3.1b1: a, b distinct nonzero mod s");
    const int si = static_cast<int>(s);
    auto L = [&](long long v) { return Level::fin(md(v, s)); };

    Plan p0;
    p0.factors = {{"A1", cyclic_levels(si)}, {"A2", cyclic_levels(si)},
                  {"A3", cyclic_levels(si)}, {"A4", cyclic_levels(si)}};
    p0.blocks = {
        {{L(0), L(a), L(0), L(b)}, {L(a), L(-a), L(b), L(-b)}},
        {{L(a), L(0), L(b), L(0)}, {L(-a), L(-a), L(-b), L(-b)}},
        {{L(0), L(-b), L(-a), L(a)}, {L(-b), L(b), L(0), L(-a)}},
        {{L(-b), L(0), L(a), L(a)}, {L(b), L(b), L(-a), L(0)}},
    };
    Plan plan = oplus(p0, si);
    plan.meta = "thm3.1b1(s=" + num(s) + ", a=" + num(a) + ", b=" + num(b) + ")";

    std::vector<std::string> claims = {"potb", shape_claim(4 * s, 2), factors_claim(4),
                                       levels_claim(s)};
    if (s == 10 && am == 1 && bm == 3) claims.push_back("gdd(0,1)");
    return {plan, claims};
}

RecipeResult make_thm31b2(ParamReader& pr) {
    const long long s = pr.req("s");
    const long long a = pr.opt("a", 1), b = pr.opt("b", 2);
    const long long c = pr.opt("c", 3), d = pr.opt("d", 4);
    pr.done();
    need(s >= 9, "thm3.1b2: s >= 9");
    const int32_t vals[4] = {md(a, s), md(b, s), md(c, s), md(d, s)};
    for (int i = 0; i < 4; ++i) {
        need(vals[i] != 0, "thm3.1b2: a, b, c, d nonzero mod s");
        for (int j = i + 1; j < 4; ++j)
            need(vals[i] != vals[j], "thm3.1b2: a, b, c, d distinct mod s");
    }
    const int si = static_cast<int>(s);
    auto L = [&](long long v) { return Level::fin(md(v, s)); };

    Plan p0;
    p0.factors = {{"A1", cyclic_levels(si)}, {"A2", cyclic_levels(si)},
                  {"A3", cyclic_levels(si)}, {"A4", cyclic_levels(si)}};
    p0.blocks = {
        {{L(a), L(b), L(c), L(d)}, {L(-a), L(-b), L(-c), L(-d)}},
        {{L(b), L(-a), L(d), L(-c)}, {L(-b), L(a), L(-d), L(c)}},
        {{L(c), L(-d), L(-a), L(b)}, {L(-c), L(d), L(a), L(-b)}},
        {{L(-d), L(-c), L(b), L(a)}, {L(d), L(c), L(-b), L(-a)}},
    };
    Plan plan = oplus(p0, si);
    plan.meta = "thm3.1b2(s=" + num(s) + ", a=" + num(a) + ", b=" + num(b) + ", c=" + num(c) +
                ", d=" + num(d) + ")";

    std::vector<std::string> claims = {"potb", shape_claim(4 * s, 2), factors_claim(4),
                                       levels_claim(s)};
    if (s == 9 && vals[0] == 1 && vals[1] == 2 && vals[2] == 3 && vals[3] == 4)
        claims.push_back("balanced");
    return {plan, claims};
}

RecipeResult make_thm31c(ParamReader& pr) {
    const long long s = pr.req("s");
    const long long a = pr.opt("a", 1), b = pr.opt("b", 2), c = pr.opt("c", 3);
    pr.done();
    need(s >= 7, "thm3.1c: s >= 7");
    const int32_t vals[3] = {md(a, s), md(b, s), md(c, s)};
    for (int i = 0; i < 3; ++i) {
        need(vals[i] != 0, "thm3.1c: a, b, c nonzero mod s");
        for (int j = i + 1; j < 3; ++j)
            need(vals[i] != vals[j], "thm3.1c: a, b, c distinct mod s");
    }
    const int si = static_cast<int>(s);
    auto L = [&](long long v) { return Level::fin(md(v, s)); };
    const Level o = Level::inf();

    Plan p0;
    p0.factors = {{"A1", cyclic_levels(si, true)}, {"A2", cyclic_levels(si, true)},
                  {"A3", cyclic_levels(si, true)}, {"A4", cyclic_levels(si, true)}};
    p0.blocks = {
        {{L(0), L(a), L(b), L(c)}, {o, L(-a), L(-b), L(-c)}},
        {{L(a), L(0), L(c), L(-b)}, {L(-a), o, L(-c), L(b)}},
        {{L(b), L(c), L(0), L(a)}, {L(-b), L(-c), o, L(-a)}},
        {{L(c), L(-b), L(a), L(0)}, {L(-c), L(b), L(-a), o}},
        {{L(a), L(a), L(-c), L(-c)}, {L(-a), L(-a), L(c), L(c)}},
        {{L(a), L(-a), L(-c), L(c)}, {L(-a), L(a), L(c), L(-c)}},
    };
    Plan plan = oplus(p0, si);
    plan.meta = "thm3.1c(s=" + num(s) + ", a=" + num(a) + ", b=" + num(b) + ", c=" + num(c) + ")";
    return {plan, {"potb", shape_claim(6 * s, 2), factors_claim(4), levels_claim(s + 1)}};
}

RecipeResult make_thm32(ParamReader& pr) {
    const long long s = pr.req("s");
    pr.done();
    need(s >= 5, "thm3.2: s >= 5");
    const int si = static_cast<int>(s);
    auto L = [&](long long v) { return Level::fin(md(v, s)); };
    const Level o = Level::inf();

    Plan p0;
    p0.factors = {{"A0", cyclic_levels(si, true)}, {"A1", cyclic_levels(si, true)},
                  {"A2", cyclic_levels(si, true)}};
    p0.blocks = {
        {{o, L(0), L(-1)}, {L(0), L(1), L(1)}},
        {{L(-1), o, L(0)}, {L(1), L(0), L(1)}},
        {{L(0), L(-1), o}, {L(1), L(1), L(0)}},
        {{o, L(0), L(1)}, {L(0), L(2), L(2)}},
        {{L(1), o, L(0)}, {L(2), L(0), L(2)}},
        {{L(0), L(1), o}, {L(2), L(2), L(0)}},
    };
    Plan plan = oplus(p0, si);
    plan.meta = "thm3.2(s=" + num(s) + ")";

    std::vector<std::string> claims = {"potb", shape_claim(6 * s, 2), factors_claim(3),
                                       levels_claim(s + 1)};
    if (s == 5) claims.push_back("balanced");
    return {plan, claims};
}

RecipeResult make_thm33(ParamReader& pr) {
    const long long s = pr.req("s");
    int p = 0, e = 0;
    need(s >= 5 && s % 2 == 1 && is_prime_power(static_cast<int>(s), &p, &e),
         "thm3.3: s odd prime power >= 5");
    const int si = static_cast<int>(s);
    const Field f(si);
    const CosetPair cs = cosets(f);
    const long long delta = pr.opt("delta", cs.c1.front());
    pr.done();
    need(delta >= 0 && delta < s &&
             std::find(cs.c1.begin(), cs.c1.end(), static_cast<int>(delta)) != cs.c1.end(),
         "thm3.3: delta must be a nonzero non-square of GF(s)");
    const int d = static_cast<int>(delta);
    const int dinv = f.inv(d);

    Block b0 = {{Level::inf(), Level::fin(0)}};
    Block b1 = {{Level::fin(0), Level::inf()}};
    Block b2 = {{Level::fin(0), Level::inf()}};
    for (int y : cs.c0) {
        b0.push_back({Level::fin(y), Level::fin(f.mul(d, y))});
        b1.push_back({Level::fin(y), Level::fin(f.mul(dinv, y))});
        b2.push_back({Level::fin(f.mul(dinv, y)), Level::fin(y)});
    }

    Plan p0;
    p0.factors = {{"A1", field_levels(si, true)}, {"A2", field_levels(si, true)}};
    p0.blocks = (cs.t % 2 == 0) ? std::vector<Block>{b0, b1} : std::vector<Block>{b0, b2};
    Plan plan = oplus(p0, si);
    plan.meta = "thm3.3(s=" + num(s) + ", delta=" + num(delta) + ")";
    return {plan, {"potb", "balanced", shape_claim(2 * s, (s + 1) / 2), factors_claim(2),
                   levels_claim(s + 1)}};
}

RecipeResult make_thm51(ParamReader& pr) {
    const long long h = pr.req("h");
    pr.done();
    const OrthArray q = q_array_2(static_cast<int>(h));

    Plan p0;
    p0.factors = {{"A", cyclic_levels(2)}, {"B", cyclic_levels(2)}, {"C", cyclic_levels(2)}};
    p0.blocks = {seed_block_o4()};
    Plan p1 = diamond(q, p0);
    rename_copies(p1, {"A", "B", "C"}, 1);
    const std::vector<std::map<int32_t, int32_t>> up(static_cast<size_t>(p1.m()),
                                                     {{0, 0}, {1, 2}});
    Plan plan = union_merge(p1, map_levels(p1, up));
    plan.meta = "thm5.1(h=" + num(h) + ")";
    return {plan, {"potb", "connected", "saturated", shape_claim(2 * h, 4),
                   factors_claim(3 * h), levels_claim(3)}};
}

// Seed pair shared by the two-block and expanded three-level recipes: the
// runs 000, 011, 101, 110 with the second block's symbol 1 raised to 2, and
// its twin with 0 and 2 exchanged in the second block.
void three_level_seeds(Plan& rho1, Plan& rho2) {
    const Block o4 = seed_block_o4();
    const Block t4 = relabel_block(o4, {{1, 2}});
    const Block tt4 = relabel_block(t4, {{0, 2}, {2, 0}});
    rho1.factors = {{"A", cyclic_levels(3)}, {"B", cyclic_levels(3)}, {"C", cyclic_levels(3)}};
    rho2.factors = rho1.factors;
    rho1.blocks = {o4, t4};
    rho2.blocks = {o4, tt4};
}

RecipeResult make_thm52(ParamReader& pr) {
    const long long variant = pr.opt("variant", 1);
    pr.done();
    need(variant == 1 || variant == 2, "thm5.2: variant must be 1 or 2");
    Plan rho1, rho2;
    three_level_seeds(rho1, rho2);
    Plan plan = variant == 1 ? rho1 : rho2;
    plan.meta = "thm5.2(variant=" + num(variant) + ")";
    return {plan, {"potb", shape_claim(2, 4), factors_claim(3), levels_claim(3)}};
}

RecipeResult make_thm53a(ParamReader& pr) {
    const long long n = pr.req("n");
    pr.done();
    need(n >= 2, "thm5.3a: n >= 2");
    const OrthArray oa = oa_rao(3, static_cast<int>(n));
    Plan plan = three_level_pair_join(oa);
    plan.meta = "thm5.3a(n=" + num(n) + ")";
    const long long runs = oa.n_runs, m = oa.m;
    return {plan, {"potb", "connected", "saturated", shape_claim(2 * runs, 4),
                   factors_claim(3 * (2 * m + 1)), levels_claim(3)}};
}

RecipeResult make_thm53b(ParamReader& pr) {
    pr.done();
    OrthArray o;
    o.n_runs = 3;
    o.m = 1;
    o.s = 3;
    o.cells = {0, 1, 2};
    Plan plan = three_level_pair_join(o);
    plan.meta = "thm5.3b";
    return {plan, {"potb", "connected", "saturated", shape_claim(6, 4), factors_claim(9),
                   levels_claim(3)}};
}

std::string two_level_base_name(int i) {
    return i < 26 ? std::string(1, static_cast<char>('A' + i)) : "F" + num(i + 1);
}

RecipeResult make_thm61(ParamReader& pr) {
    const long long m = pr.req("m"), n = pr.req("n");
    pr.done();
    const OrthArray qm = q_array_2(static_cast<int>(m));
    const OrthArray qn = q_array_2(static_cast<int>(n));

    Plan p0;
    std::vector<std::string> bases;
    for (int i = 0; i < qm.m; ++i) {
        bases.push_back(two_level_base_name(i));
        p0.factors.push_back({bases.back(), cyclic_levels(2)});
    }
    Block blk;
    for (int r = 0; r < qm.n_runs; ++r) {
        Run run;
        for (int c = 0; c < qm.m; ++c) run.push_back(Level::fin(qm.at(r, c)));
        blk.push_back(run);
    }
    blk.push_back(Run(static_cast<size_t>(qm.m), Level::fin(1)));
    p0.blocks = {blk};

    Plan plan = diamond(qn, p0);
    rename_copies(plan, bases, 1);
    plan.meta = "thm6.1(m=" + num(m) + ", n=" + num(n) + ")";

    std::string classes = "piotb(";
    for (int c = 1; c <= qn.n_runs; ++c) {
        if (c > 1) classes += ";";
        for (size_t i = 0; i < bases.size(); ++i) {
            if (i > 0) classes += ",";
            classes += bases[i] + num(c);
        }
    }
    classes += ")";
    return {plan, {classes, "saturated", shape_claim(n, m + 1), factors_claim(m * n),
                   levels_claim(2)}};
}

RecipeResult make_thm62(ParamReader& pr) {
    pr.done();
    Plan p;
    for (const char* name : {"A1", "B1", "C1", "A2", "B2", "C2"})
        p.factors.push_back({name, cyclic_levels(3)});
    p.blocks = {
        {finite_run({0, 0, 0, 0, 0, 0}), finite_run({0, 1, 1, 1, 1, 0}),
         finite_run({1, 0, 2, 0, 1, 1}), finite_run({2, 2, 0, 1, 0, 1})},
        {finite_run({0, 0, 0, 0, 0, 0}), finite_run({0, 2, 2, 2, 2, 0}),
         finite_run({2, 0, 1, 0, 2, 2}), finite_run({1, 1, 0, 2, 0, 2})},
        {finite_run({0, 1, 0, 0, 1, 1}), finite_run({0, 0, 2, 1, 0, 1}),
         finite_run({1, 2, 1, 0, 0, 0}), finite_run({2, 0, 0, 1, 1, 0})},
        {finite_run({0, 2, 0, 0, 2, 2}), finite_run({0, 0, 1, 2, 0, 2}),
         finite_run({2, 1, 2, 0, 0, 0}), finite_run({1, 0, 0, 2, 2, 0})},
    };
    p.meta = "thm6.2";
    return {p, {"piotb(A1,A2;B1,B2;C1,C2)", "saturated", shape_claim(4, 4), factors_claim(6),
                levels_claim(3)}};
}

}  // namespace

Plan three_level_pair_join(const OrthArray& oa) {
    need(oa.s == 3, "three_level_pair_join: array must use three symbols");
    need(oa.m >= 1 && oa.n_runs >= 1, "three_level_pair_join: array must be nonempty");
    Plan rho1, rho2;
    three_level_seeds(rho1, rho2);
    Plan p1 = diamond(q_augment(oa), rho1);
    rename_copies(p1, {"A", "B", "C"}, 0);
    Plan p2 = diamond(oa, rho2);
    rename_copies(p2, {"At", "Bt", "Ct"}, 1);
    return join(p1, p2);
}

Plan canonicalize(const Plan& p) {
    Plan out = p;
    for (Block& blk : out.blocks) std::sort(blk.begin(), blk.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

RecipeResult construct(const std::string& id, const Params& params) {
    ParamReader pr(id, params);
    if (id == "ex2.1") {
        pr.done();
        return make_ex21();
    }
    if (id == "thm3.1a") return make_thm31a(pr);
    if (id == "thm3.1b1") return make_thm31b1(pr);
    if (id == "thm3.1b2") return make_thm31b2(pr);
    if (id == "thm3.1c") return make_thm31c(pr);
    if (id == "thm3.2") return make_thm32(pr);
    if (id == "thm3.3") return make_thm33(pr);
    if (id == "thm5.1") return make_thm51(pr);
    if (id == "thm5.2") return make_thm52(pr);
    if (id == "thm5.3a") return make_thm53a(pr);
    if (id == "thm5.3b") return make_thm53b(pr);
    if (id == "thm6.1") return make_thm61(pr);
    if (id == "thm6.2") return make_thm62(pr);
    throw ParseError("unknown recipe id '" + id + "'");
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"ex2.1", "hand-checked plan for two four-level factors on six blocks of two", "none",
         "none", "potb, balanced, saturated, block_shape(6,2), factors(2), levels(4)", ""},
        {"thm3.1a", "two s-level factors on 2s blocks of two", "s, a=1, b=2",
         "s >= 5; a, b distinct nonzero mod s",
         "potb, block_shape(2s,2), factors(2), levels(s)", "s=5, a=1, b=2 adds balanced"},
        {"thm3.1b1", "four s-level factors on 4s blocks of two", "s, a=1, b=2",
         "s >= 5; a, b distinct nonzero mod s",
         "potb, block_shape(4s,2), factors(4), levels(s)", "s=10, a=1, b=3 adds gdd(0,1)"},
        {"thm3.1b2", "four s-level factors on 4s blocks of two, second family",
         "s, a=1, b=2, c=3, d=4", "s >= 9; a, b, c, d distinct nonzero mod s",
         "potb, block_shape(4s,2), factors(4), levels(s)",
         "s=9, a=1, b=2, c=3, d=4 adds balanced"},
        {"thm3.1c", "four (s+1)-level factors on 6s blocks of two", "s, a=1, b=2, c=3",
         "s >= 7; a, b, c distinct nonzero mod s",
         "potb, block_shape(6s,2), factors(4), levels(s+1)", ""},
        {"thm3.2", "three (s+1)-level factors on 6s blocks of two", "s", "s >= 5",
         "potb, block_shape(6s,2), factors(3), levels(s+1)", "s=5 adds balanced"},
        {"thm3.3", "two (s+1)-level factors on 2s blocks of (s+1)/2", "s, delta=least non-square",
         "s odd prime power >= 5; delta a nonzero non-square of GF(s)",
         "potb, balanced, block_shape(2s,(s+1)/2), factors(2), levels(s+1)", ""},
        {"thm5.1", "3h three-level factors on 2h blocks of four", "h", "h a Hadamard order",
         "potb, connected, saturated, block_shape(2h,4), factors(3h), levels(3)", ""},
        {"thm5.2", "three three-level factors on two blocks of four", "variant=1",
         "variant 1 or 2", "potb, block_shape(2,4), factors(3), levels(3)", ""},
        {"thm5.3a", "3(2m+1) three-level factors on 2*3^n blocks of four, m=(3^n-1)/2", "n",
         "n >= 2",
         "potb, connected, saturated, block_shape(2*3^n,4), factors(3(2m+1)), levels(3)", ""},
        {"thm5.3b", "nine three-level factors on six blocks of four", "none", "none",
         "potb, connected, saturated, block_shape(6,4), factors(9), levels(3)", ""},
        {"thm6.1", "mn two-level factors on n blocks of m+1", "m, n",
         "m, n Hadamard orders",
         "piotb(copy classes), saturated, block_shape(n,m+1), factors(mn), levels(2)", ""},
        {"thm6.2", "six three-level factors on four blocks of four", "none", "none",
         "piotb(A1,A2;B1,B2;C1,C2), saturated, block_shape(4,4), factors(6), levels(3)", ""},
    };
    return entries;
}

}  // namespace potb
