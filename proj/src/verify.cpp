#include "potb/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "potb/ratmat.hpp"

namespace potb {

namespace {

void require_pair(int m, int i, int j) {
    if (i < 0 || i >= m || j < 0 || j >= m)
        throw IndexOutOfRange("factor index out of range: (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") with " + std::to_string(m) + " factors");
    if (i == j) throw ConstraintViolation("orthogonality needs two distinct factors");
}

// Union-find over factor indices.
struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> classes_from_edges(int m,
                                                 const std::vector<std::pair<int, int>>& edges) {
    DSU dsu(m);
    for (auto [a, b] : edges) dsu.unite(a, b);
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < m; ++i) buckets[dsu.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(buckets.size());
    for (auto& [root, members] : buckets) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

// Block-adjusted Gram matrix of all factor-level effects, scaled by the
// block size to stay integral: entry ((i,p),(j,q)) = k*N_ij(p,q) -
// (L_i L_j')(p,q).  Its diagonal blocks are the within-factor information
// matrices, its off-diagonal blocks the orthogonality residuals.
IMat scaled_adjusted_gram(const IncidenceSet& inc, int block_size,
                          std::vector<int>* offsets_out) {
    const int m = static_cast<int>(inc.s.size());
    std::vector<int> off(m + 1, 0);
    for (int i = 0; i < m; ++i) off[i + 1] = off[i] + inc.s[i];
    IMat g(off[m], off[m]);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const IMat cross = mul(inc.L[i], transpose(inc.L[j]));
            for (int p = 0; p < inc.s[i]; ++p)
                for (int q = 0; q < inc.s[j]; ++q) {
                    const long long v =
                        block_size * inc.N[i][j].at(p, q) - cross.at(p, q);
                    g.at(off[i] + p, off[j] + q) = v;
                    g.at(off[j] + q, off[i] + p) = v;
                }
        }
    }
    if (offsets_out) *offsets_out = std::move(off);
    return g;
}

IMat drop_block(const IMat& g, int lo, int hi) {
    const int keep = g.rows - (hi - lo);
    IMat out(keep, keep);
    auto src = [&](int x) { return x < lo ? x : x + (hi - lo); };
    for (int i = 0; i < keep; ++i)
        for (int j = 0; j < keep; ++j) out.at(i, j) = g.at(src(i), src(j));
    return out;
}

std::vector<int> adjusted_ranks(const Plan& p, const IncidenceSet& inc) {
    const int m = p.m();
    for (int i = 0; i < m; ++i)
        for (int lev = 0; lev < inc.s[i]; ++lev)
            if (inc.r[i][lev] == 0)
                throw DegenerateModel("factor " + p.factors[i].name + " declares level index " +
                                      std::to_string(lev) + " but never runs it");
    std::vector<int> off;
    const IMat g = scaled_adjusted_gram(inc, p.k(), &off);
    const int full = exact_rank(g);
    std::vector<int> ranks(m);
    for (int i = 0; i < m; ++i)
        ranks[i] = full - exact_rank(drop_block(g, off[i], off[i + 1]));
    return ranks;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& s) {
    const std::string t = trim(s);
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + t + "'");
    }
    if (used != t.size()) throw ParseError("expected an integer, got '" + t + "'");
    return v;
}

// "name(args)" -> {name, args}; plain "name" -> {name, ""}.
std::pair<std::string, std::string> split_claim(const std::string& claim) {
    const std::string c = trim(claim);
    const size_t open = c.find('(');
    if (open == std::string::npos) return {c, ""};
    if (c.back() != ')') throw ParseError("malformed claim '" + claim + "'");
    return {trim(c.substr(0, open)), c.substr(open + 1, c.size() - open - 2)};
}

}  // namespace

OtbStatus check_otb(const IncidenceSet& inc, int block_size, int i, int j) {
    require_pair(static_cast<int>(inc.s.size()), i, j);
    OtbStatus st;
    st.i = i;
    st.j = j;
    st.residual =
        sub(scaled(inc.N[i][j], block_size), mul(inc.L[i], transpose(inc.L[j])));
    st.holds = is_zero(st.residual);
    return st;
}

OtbStatus check_otb(const Plan& p, int i, int j) {
    require_pair(p.m(), i, j);
    return check_otb(incidence(p), p.k(), i, j);
}

std::pair<bool, std::vector<std::pair<int, int>>> check_potb(const Plan& p) {
    const IncidenceSet inc = incidence(p);
    std::vector<std::pair<int, int>> failing;
    for (int i = 0; i < p.m(); ++i)
        for (int j = i + 1; j < p.m(); ++j)
            if (!check_otb(inc, p.k(), i, j).holds) failing.emplace_back(i, j);
    return {failing.empty(), failing};
}

std::vector<std::vector<int>> derive_classes(const Plan& p) {
    return classes_from_edges(p.m(), check_potb(p).second);
}

BlockDesignClass classify_block_design(const IMat& L, long long block_size) {
    for (int j = 0; j < L.cols; ++j) {
        long long sum = 0;
        for (int i = 0; i < L.rows; ++i) sum += L.at(i, j);
        if (sum != block_size)
            throw ColumnSumMismatch("column " + std::to_string(j) + " sums to " +
                                    std::to_string(sum) + ", expected " +
                                    std::to_string(block_size));
    }
    BlockDesignClass out;
    out.v = L.rows;
    out.b = L.cols;
    out.k = block_size;
    const IMat cc = mul(L, transpose(L));
    const int v = L.rows;

    bool equireplicate = true;
    for (int i = 1; i < v; ++i)
        if (cc.at(i, i) != cc.at(0, 0)) equireplicate = false;
    if (!equireplicate) {
        out.kind = BlockDesignClass::Kind::Other;
        return out;
    }
    out.r = cc.at(0, 0);

    std::vector<long long> offdiag;
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (i != j) offdiag.push_back(cc.at(i, j));
    std::sort(offdiag.begin(), offdiag.end());
    offdiag.erase(std::unique(offdiag.begin(), offdiag.end()), offdiag.end());

    if (offdiag.size() == 1 && offdiag[0] >= 1 && offdiag[0] < out.r) {
        out.kind = BlockDesignClass::Kind::BIBD;
        out.lambda = offdiag[0];
        return out;
    }
    if (offdiag.size() == 2) {
        const long long l1 = offdiag[0], l2 = offdiag[1];
        // Group p with q when their concurrence is the smaller value; the
        // relation must cut the levels into equal-size complete classes.
        std::vector<int> group_of(v, -1);
        std::vector<std::vector<int>> groups;
        bool ok = true;
        for (int i = 0; i < v && ok; ++i) {
            if (group_of[i] >= 0) continue;
            std::vector<int> grp{i};
            for (int j = i + 1; j < v; ++j)
                if (cc.at(i, j) == l1) {
                    if (group_of[j] >= 0) ok = false;
                    grp.push_back(j);
                }
            for (int x : grp) group_of[x] = static_cast<int>(groups.size());
            groups.push_back(grp);
        }
        if (ok)
            for (int i = 0; i < v && ok; ++i)
                for (int j = 0; j < v && ok; ++j) {
                    if (i == j) continue;
                    const bool same = group_of[i] == group_of[j];
                    if (cc.at(i, j) != (same ? l1 : l2)) ok = false;
                }
        if (ok)
            for (const auto& grp : groups)
                if (grp.size() != groups.front().size() || grp.size() < 2) ok = false;
        if (ok && groups.size() >= 2) {
            out.kind = BlockDesignClass::Kind::GDD;
            out.lambda1 = l1;
            out.lambda2 = l2;
            out.groups = std::move(groups);
            return out;
        }
    }
    out.kind = BlockDesignClass::Kind::EquireplicateOther;
    return out;
}

std::optional<std::pair<long long, long long>> check_pergola(const IMat& N) {
    if (N.rows != N.cols) throw DimensionMismatch("pergola test needs a square matrix");
    const int n = N.rows;
    const IMat a = mul(N, transpose(N));
    const IMat b = mul(transpose(N), N);
    if (!(a == b)) return std::nullopt;
    if (n == 1) return std::make_pair(0LL, a.at(0, 0));
    const long long g = a.at(0, 1);
    const long long f = a.at(0, 0) - g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.at(i, j) != (i == j ? f + g : g)) return std::nullopt;
    return std::make_pair(f, g);
}

std::vector<int> check_connected(const Plan& p) {
    return adjusted_ranks(p, incidence(p));
}

SaturationStatus check_saturated(const Plan& p) {
    const IncidenceSet inc = incidence(p);
    SaturationStatus st;
    st.n = p.n_runs();
    st.b = p.b();
    st.model_df = st.n - st.b;
    st.factor_df = 0;
    for (int i = 0; i < p.m(); ++i) {
        long long present = 0;
        for (long long r : inc.r[i])
            if (r > 0) ++present;
        st.factor_df += present - 1;
    }
    st.saturated = st.model_df == st.factor_df;
    return st;
}

std::string describe(const BlockDesignClass& c) {
    std::ostringstream os;
    switch (c.kind) {
        case BlockDesignClass::Kind::BIBD:
            os << "BIBD(v=" << c.v << ", b=" << c.b << ", r=" << c.r << ", k=" << c.k
               << ", lambda=" << c.lambda << ")";
            break;
        case BlockDesignClass::Kind::GDD:
            os << "GDD(" << c.groups.size() << " groups of " << c.groups.front().size()
               << ", lambda1=" << c.lambda1 << ", lambda2=" << c.lambda2 << ")";
            break;
        case BlockDesignClass::Kind::EquireplicateOther:
            os << "equireplicate (r=" << c.r << ")";
            break;
        case BlockDesignClass::Kind::Other:
            os << "other";
            break;
    }
    return os.str();
}

namespace {

std::vector<std::vector<int>> parse_classes(const Plan& p, const std::string& args) {
    std::map<std::string, int> index;
    for (int i = 0; i < p.m(); ++i) index[p.factors[i].name] = i;
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(p.m(), false);
    for (const std::string& cls : split(args, ';')) {
        std::vector<int> members;
        for (const std::string& name : split(cls, ',')) {
            const std::string n = trim(name);
            auto it = index.find(n);
            if (it == index.end()) throw ParseError("unknown factor name '" + n + "'");
            if (seen[it->second]) throw ParseError("factor '" + n + "' listed twice");
            seen[it->second] = true;
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    for (int i = 0; i < p.m(); ++i)
        if (!seen[i]) classes.push_back({i});  // unlisted factors form singletons
    std::sort(classes.begin(), classes.end());
    return classes;
}

ClaimResult evaluate_claim(const Plan& p, const VerificationReport& rep,
                           const std::string& claim) {
    ClaimResult res;
    res.claim = claim;
    auto [name, args] = split_claim(claim);
    std::ostringstream detail;

    if (name == "potb") {
        res.pass = rep.potb;
        if (!res.pass) {
            detail << "non-orthogonal pairs:";
            for (const OtbStatus& st : rep.otb)
                if (!st.holds)
                    detail << " (" << p.factors[st.i].name << "," << p.factors[st.j].name << ")";
        }
    } else if (name == "piotb") {
        // Declared classes are valid iff every cross-class pair is
        // orthogonal, i.e. the derived partition refines the declared one.
        const auto declared = parse_classes(p, args);
        std::vector<int> class_of(p.m(), -1);
        for (size_t c = 0; c < declared.size(); ++c)
            for (int x : declared[c]) class_of[x] = static_cast<int>(c);
        res.pass = true;
        for (const OtbStatus& st : rep.otb)
            if (!st.holds && class_of[st.i] != class_of[st.j]) {
                res.pass = false;
                detail << "cross-class pair (" << p.factors[st.i].name << ","
                       << p.factors[st.j].name << ") not orthogonal; ";
            }
    } else if (name == "connected") {
        res.pass = rep.connected;
        if (rep.degenerate) detail << "degenerate: some declared level never runs";
        for (const FactorReport& fr : rep.per_factor)
            if (!rep.degenerate && !fr.connected)
                detail << "rank " << fr.adjusted_rank << " < " << fr.levels_declared - 1 << "; ";
    } else if (name == "saturated") {
        res.pass = rep.saturation.saturated;
        detail << "n-b=" << rep.saturation.model_df << " vs sum(s_i-1)="
               << rep.saturation.factor_df;
    } else if (name == "balanced") {
        res.pass = rep.potb && rep.connected;
        for (const FactorReport& fr : rep.per_factor)
            if (fr.design.kind != BlockDesignClass::Kind::BIBD) {
                res.pass = false;
                detail << "a factor is " << describe(fr.design) << "; ";
            }
    } else if (name == "gdd") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw ParseError("gdd claim needs (lambda1,lambda2)");
        const long long l1 = parse_int(parts[0]), l2 = parse_int(parts[1]);
        res.pass = true;
        for (const FactorReport& fr : rep.per_factor)
            if (fr.design.kind != BlockDesignClass::Kind::GDD || fr.design.lambda1 != l1 ||
                fr.design.lambda2 != l2) {
                res.pass = false;
                detail << "a factor is " << describe(fr.design) << "; ";
            }
    } else if (name == "block_shape") {
        const auto parts = split(args, ',');
        if (parts.size() != 2) throw ParseError("block_shape claim needs (b,k)");
        res.pass = p.b() == parse_int(parts[0]) && p.k() == parse_int(parts[1]);
        detail << "have b=" << p.b() << ", k=" << p.k();
    } else if (name == "factors") {
        res.pass = p.m() == parse_int(args);
        detail << "have m=" << p.m();
    } else if (name == "levels") {
        const long long want = parse_int(args);
        res.pass = true;
        for (const Factor& f : p.factors)
            if (f.levels.size() != want) {
                res.pass = false;
                detail << f.name << " has " << f.levels.size() << " levels; ";
            }
    } else {
        throw ParseError("unknown claim '" + name + "'");
    }
    res.detail = detail.str();
    return res;
}

}  // namespace

VerificationReport full_report(const Plan& p, const std::vector<std::string>& claims) {
    const IncidenceSet inc = incidence(p);
    const int m = p.m();
    VerificationReport rep;

    std::vector<std::pair<int, int>> failing;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            rep.otb.push_back(check_otb(inc, p.k(), i, j));
            if (!rep.otb.back().holds) failing.emplace_back(i, j);
            PergolaStatus pg;
            pg.i = i;
            pg.j = j;
            if (inc.s[i] == inc.s[j]) {
                if (auto fg = check_pergola(inc.N[i][j])) {
                    pg.holds = true;
                    pg.f = fg->first;
                    pg.g = fg->second;
                }
            }
            rep.pergola.push_back(pg);
        }
    rep.potb = failing.empty();
    rep.classes = classes_from_edges(m, failing);
    rep.saturation = check_saturated(p);

    rep.per_factor.resize(m);
    for (int i = 0; i < m; ++i) {
        FactorReport& fr = rep.per_factor[i];
        fr.design = classify_block_design(inc.L[i], p.k());
        fr.levels_declared = inc.s[i];
        fr.levels_present = 0;
        for (long long r : inc.r[i])
            if (r > 0) ++fr.levels_present;
    }
    try {
        const std::vector<int> ranks = adjusted_ranks(p, inc);
        rep.connected = true;
        for (int i = 0; i < m; ++i) {
            rep.per_factor[i].adjusted_rank = ranks[i];
            rep.per_factor[i].connected = ranks[i] == inc.s[i] - 1;
            if (!rep.per_factor[i].connected) rep.connected = false;
        }
    } catch (const DegenerateModel&) {
        rep.degenerate = true;
        rep.connected = false;
    }

    for (const std::string& claim : claims) rep.claims.push_back(evaluate_claim(p, rep, claim));
    return rep;
}

}  // namespace potb
