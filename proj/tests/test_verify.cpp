#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "potb/combinators.hpp"
#include "potb/incidence.hpp"
#include "potb/ratmat.hpp"
#include "potb/reference.hpp"
#include "potb/verify.hpp"
#include "random_plans.hpp"

using namespace potb;

namespace {

Run rn(std::initializer_list<int> xs) {
    Run r;
    for (int x : xs) r.push_back(x < 0 ? Level::inf() : Level::fin(x));
    return r;
}

Plan two_factor_cycle4() {
    Plan p;
    p.factors = {{"A1", cyclic_levels(4)}, {"A2", cyclic_levels(4)}};
    p.blocks = {
        {rn({0, 1}), rn({2, 3})}, {rn({1, 0}), rn({3, 2})}, {rn({0, 2}), rn({3, 1})},
        {rn({1, 3}), rn({2, 0})}, {rn({0, 3}), rn({1, 2})}, {rn({3, 0}), rn({2, 1})},
    };
    return p;
}

Plan diagonal_pair_block() {
    Plan p;
    p.factors = {{"A", cyclic_levels(2)}, {"B", cyclic_levels(2)}};
    p.blocks = {{rn({0, 0}), rn({1, 1})}};
    return p;
}

// Single 4-level factor whose blocks pair the groups {0,1} and {2,3}.
Plan group_divisible_single_factor() {
    Plan p;
    p.factors = {{"G", label_levels({0, 1, 2, 3})}};
    p.blocks = {{rn({0}), rn({2})}, {rn({0}), rn({3})}, {rn({1}), rn({2})}, {rn({1}), rn({3})}};
    return p;
}

// Gram matrix of the run indicator columns: blocks first, then every
// factor's level indicators.  An independent route to the block-adjusted
// information matrices used by the verifier.
IMat model_gram(const Plan& p) {
    const int m = p.m();
    std::vector<int> off(m + 1, 0);
    for (int i = 0; i < m; ++i) off[i + 1] = off[i] + static_cast<int>(p.factors[i].levels.size());
    const int b = p.b();
    IMat x(static_cast<int>(p.n_runs()), b + off[m]);
    int row = 0;
    for (int beta = 0; beta < b; ++beta)
        for (const Run& run : p.blocks[beta]) {
            x.at(row, beta) = 1;
            for (int i = 0; i < m; ++i)
                x.at(row, b + off[i] + p.factors[i].levels.index_of(run[i])) = 1;
            ++row;
        }
    return mul(transpose(x), x);
}

}  // namespace

TEST_CASE("rational rank and schur sweep basics") {
    CHECK(rank(to_rmat(identity(3))) == 3);
    CHECK(rank(to_rmat(constant(3, 5, 2))) == 1);
    CHECK(exact_rank(sub(scaled(identity(4), 4), constant(4, 4, 1))) == 3);
    CHECK(exact_rank(IMat(2, 2)) == 0);

    // Eliminating the first coordinate of [[2,1],[1,2]] leaves 3/2.
    RMat g(2, 2);
    g.at(0, 0) = 2;
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    g.at(1, 1) = 2;
    RMat s = psd_sweep_leading(g, 1);
    CHECK(s.rows == 1);
    CHECK(s.at(0, 0) == Rat(3) / 2);

    // A zero pivot with a nonzero row certifies the input was not PSD.
    RMat bad(2, 2);
    bad.at(0, 1) = 1;
    bad.at(1, 0) = 1;
    CHECK_THROWS_AS((void)psd_sweep_leading(bad, 1), ConstraintViolation);

    // Rank-deficient PSD input sweeps cleanly: zero pivot, zero row.
    RMat flat = to_rmat(constant(3, 3, 1));
    RMat tail = psd_sweep_leading(flat, 2);
    CHECK(tail.rows == 1);
    CHECK(tail.at(0, 0) == 0);
}

TEST_CASE("pairwise orthogonality through blocks on hand-checked plans") {
    const Plan ex = two_factor_cycle4();
    OtbStatus st = check_otb(ex, 0, 1);
    CHECK(st.holds);
    CHECK(is_zero(st.residual));
    auto [ok, failing] = check_potb(ex);
    CHECK(ok);
    CHECK(failing.empty());

    // A single block pairing (0,0) with (1,1): twice the run concurrence is
    // 2I but the block concurrence is all-ones, so orthogonality fails with
    // residual 2I - J.
    const Plan diag = diagonal_pair_block();
    OtbStatus bad = check_otb(diag, 0, 1);
    CHECK(!bad.holds);
    CHECK(bad.residual == sub(scaled(identity(2), 2), constant(2, 2, 1)));

    Plan two = diag;
    two.blocks.push_back({rn({0, 1}), rn({0, 0})});
    CHECK(!check_otb(two, 0, 1).holds);

    CHECK_THROWS_AS((void)check_otb(ex, 0, 0), ConstraintViolation);
    CHECK_THROWS_AS((void)check_otb(ex, 0, 2), IndexOutOfRange);
}

TEST_CASE("derived orthogonality classes") {
    CHECK(derive_classes(two_factor_cycle4()) ==
          std::vector<std::vector<int>>{{0}, {1}});
    CHECK(derive_classes(diagonal_pair_block()) == std::vector<std::vector<int>>{{0, 1}});

    // Doubling the plan keeps cross-position pairs orthogonal while the two
    // copies of each factor stay tied to each other.
    const Plan doubled = power(two_factor_cycle4(), 2);
    CHECK(derive_classes(doubled) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

    std::mt19937_64 rng(2024);
    for (int t = 0; t < 40; ++t) {
        const Plan p = random_cyclic_plan(rng, 3);
        const auto classes = derive_classes(p);
        bool all_singletons = true;
        for (const auto& c : classes)
            if (c.size() != 1) all_singletons = false;
        CHECK(all_singletons == check_potb(p).first);
    }
}

TEST_CASE("block design classification from level-in-block incidence") {
    // Shifted triple {0,1,3} mod 7: the classic symmetric design.
    IMat dev(7, 7);
    for (int beta = 0; beta < 7; ++beta)
        for (int d : {0, 1, 3}) dev.at((beta + d) % 7, beta) = 1;
    BlockDesignClass c = classify_block_design(dev, 3);
    CHECK(c.kind == BlockDesignClass::Kind::BIBD);
    CHECK(c.v == 7);
    CHECK(c.b == 7);
    CHECK(c.r == 3);
    CHECK(c.k == 3);
    CHECK(c.lambda == 1);
    CHECK(describe(c) == "BIBD(v=7, b=7, r=3, k=3, lambda=1)");

    const IncidenceSet inc = incidence(two_factor_cycle4());
    for (int i : {0, 1}) {
        BlockDesignClass e = classify_block_design(inc.L[i], 2);
        CHECK(e.kind == BlockDesignClass::Kind::BIBD);
        CHECK(describe(e) == "BIBD(v=4, b=6, r=3, k=2, lambda=1)");
    }

    const IncidenceSet ginc = incidence(group_divisible_single_factor());
    BlockDesignClass g = classify_block_design(ginc.L[0], 2);
    CHECK(g.kind == BlockDesignClass::Kind::GDD);
    CHECK(g.lambda1 == 0);
    CHECK(g.lambda2 == 1);
    CHECK(g.groups == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(describe(g) == "GDD(2 groups of 2, lambda1=0, lambda2=1)");

    // Complete blocks: every off-diagonal concurrence equals r, which the
    // proper-design bound 1 <= lambda < r excludes.
    IMat full = constant(3, 2, 1);
    BlockDesignClass f = classify_block_design(full, 3);
    CHECK(f.kind == BlockDesignClass::Kind::EquireplicateOther);
    CHECK(f.r == 2);
    CHECK(describe(f) == "equireplicate (r=2)");

    // Disconnected pairing {0,1},{2,3} as blocks: two concurrence values
    // but the zero-relation does not split into complete groups.
    IMat split(4, 2);
    split.at(0, 0) = split.at(1, 0) = split.at(2, 1) = split.at(3, 1) = 1;
    CHECK(classify_block_design(split, 2).kind == BlockDesignClass::Kind::EquireplicateOther);

    IMat uneven(2, 2);
    uneven.at(0, 0) = 2;
    uneven.at(0, 1) = uneven.at(1, 1) = 1;
    CHECK(classify_block_design(uneven, 2).kind == BlockDesignClass::Kind::Other);
    CHECK(describe(classify_block_design(uneven, 2)) == "other");

    CHECK_THROWS_AS((void)classify_block_design(uneven, 3), ColumnSumMismatch);
}

TEST_CASE("proportional concurrence test for pair incidence matrices") {
    auto fg = check_pergola(identity(4));
    REQUIRE(fg.has_value());
    CHECK(fg->first == 1);
    CHECK(fg->second == 0);

    for (int n : {3, 4, 5, 7}) {
        IMat n_off = sub(constant(n, n, 1), identity(n));
        auto v = check_pergola(n_off);
        REQUIRE(v.has_value());
        CHECK(v->first == 1);
        CHECK(v->second == n - 2);
    }

    IMat lop(2, 2);
    lop.at(0, 0) = 2;
    lop.at(0, 1) = lop.at(1, 1) = 1;
    CHECK(!check_pergola(lop).has_value());
    CHECK_THROWS_AS((void)check_pergola(constant(2, 3, 1)), DimensionMismatch);
}

TEST_CASE("connectedness ranks via exact elimination") {
    CHECK(check_connected(two_factor_cycle4()) == std::vector<int>{3, 3});
    CHECK(check_connected(group_divisible_single_factor()) == std::vector<int>{3});

    // One complete block carries full information on its factor.
    Plan complete;
    complete.factors = {{"A", cyclic_levels(5)}};
    complete.blocks = {{rn({0}), rn({1}), rn({2}), rn({3}), rn({4})}};
    CHECK(check_connected(complete) == std::vector<int>{4});

    // Two level groups that never share a block cannot all be compared.
    Plan apart;
    apart.factors = {{"X", label_levels({0, 1, 2, 3})}};
    apart.blocks = {{rn({0}), rn({1})}, {rn({2}), rn({3})}};
    CHECK(check_connected(apart) == std::vector<int>{2});

    Plan broken = apart;
    broken.factors[0].levels = label_levels({0, 1, 2, 3, 9});
    CHECK_THROWS_AS((void)check_connected(broken), DegenerateModel);

    // Merging plans over disjoint level alphabets leaves the merged factor
    // split no matter how the blocks are arranged.
    Plan left, right;
    left.factors = {{"X", label_levels({0, 1})}};
    left.blocks = {{rn({0}), rn({1})}};
    right.factors = {{"X", label_levels({2, 3})}};
    right.blocks = {{rn({2}), rn({3})}};
    CHECK(check_connected(union_merge(left, right)) == std::vector<int>{2});
}

TEST_CASE("saturation accounting") {
    SaturationStatus st = check_saturated(two_factor_cycle4());
    CHECK(st.saturated);
    CHECK(st.n == 12);
    CHECK(st.b == 6);
    CHECK(st.model_df == 6);
    CHECK(st.factor_df == 6);

    // Declared-but-absent levels do not enter the degree count.
    Plan sparse;
    sparse.factors = {{"A", cyclic_levels(4)}, {"B", cyclic_levels(2)}};
    sparse.blocks = {{rn({0, 0}), rn({1, 1}), rn({2, 0})}};
    SaturationStatus sp = check_saturated(sparse);
    CHECK(sp.model_df == 2);
    CHECK(sp.factor_df == 3);
    CHECK(!sp.saturated);
}

TEST_CASE("adjusted information matrices agree with the indicator gram route") {
    std::mt19937_64 rng(77);
    std::vector<Plan> pool;
    for (int t = 0; t < 25; ++t) pool.push_back(random_cyclic_plan(rng, 2 + t % 3, false));
    pool.push_back(two_factor_cycle4());
    pool.push_back(power(two_factor_cycle4(), 2));
    pool.push_back(diagonal_pair_block());
    pool.push_back(oplus(gendetail::random_two_factor(rng, 3, 2, 2), 3));

    for (const Plan& p : pool) {
        const IncidenceSet inc = ref::recount(p);
        const int m = p.m();
        const int b = p.b();
        const long long k = p.k();
        std::vector<int> off(m + 1, 0);
        for (int i = 0; i < m; ++i) off[i + 1] = off[i] + inc.s[i];

        const RMat schur = psd_sweep_leading(to_rmat(model_gram(p)), b);
        REQUIRE(schur.rows == off[m]);

        // k times the swept gram must equal k*N_ij - L_i L_j' blockwise,
        // and its off-diagonal blocks vanish exactly on orthogonal pairs.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const IMat cross = mul(inc.L[i], transpose(inc.L[j]));
                bool block_zero = true;
                for (int pl = 0; pl < inc.s[i]; ++pl)
                    for (int ql = 0; ql < inc.s[j]; ++ql) {
                        const long long want = k * inc.N[i][j].at(pl, ql) - cross.at(pl, ql);
                        CHECK(Rat(k) * schur.at(off[i] + pl, off[j] + ql) == Rat(want));
                        if (want != 0) block_zero = false;
                    }
                if (i < j) CHECK(block_zero == check_otb(inc, static_cast<int>(k), i, j).holds);
            }
    }
}

TEST_CASE("float rank screen matches exact rank on adjusted grams") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        const Plan p = random_cyclic_plan(rng, 2 + t % 3, false);
        const RMat schur = psd_sweep_leading(to_rmat(model_gram(p)), p.b());
        std::vector<std::vector<double>> approx(schur.rows, std::vector<double>(schur.cols));
        IMat exact(schur.rows, schur.cols);
        const long long k = p.k();
        for (int i = 0; i < schur.rows; ++i)
            for (int j = 0; j < schur.cols; ++j) {
                const Rat scaledv = Rat(k) * schur.at(i, j);
                exact.at(i, j) = static_cast<long long>(numerator(scaledv));
                REQUIRE(denominator(scaledv) == 1);
                approx[i][j] = static_cast<double>(exact.at(i, j));
            }
        CHECK(ref::float_rank(approx) == exact_rank(exact));
    }
}

TEST_CASE("shift family hypotheses keep derived plans orthogonal") {
    std::mt19937_64 rng(0x5eed);
    auto run_suite = [&](auto&& gen) {
        int passed = 0;
        for (int t = 0; t < 50; ++t) {
            const OtbCase c = gen(rng);
            const IncidenceSet inc = incidence(c.plan);
            bool all = true;
            for (auto [i, j] : c.pairs)
                if (!check_otb(inc, static_cast<int>(c.plan.k()), i, j).holds) all = false;
            if (all) ++passed;
        }
        return passed;
    };
    CHECK(run_suite([](auto& r) { return gen_sweep_second_coordinate(r); }) == 50);
    CHECK(run_suite([](auto& r) { return gen_sweep_full_product(r); }) == 50);
    CHECK(run_suite([](auto& r) { return gen_sweep_diagonal_pairs(r); }) == 50);
    CHECK(run_suite([](auto& r) { return gen_sweep_covering_family(r); }) == 50);
}

TEST_CASE("copy expansion along an orthogonal array separates the copies") {
    std::mt19937_64 rng(0xd1a);
    for (const int order : {4, 8}) {
        const OrthArray q = q_array_2(order);
        for (int t = 0; t < 12; ++t) {
            const OtbCase c = gen_cross_copy(rng, q);
            const IncidenceSet inc = incidence(c.plan);
            for (auto [i, j] : c.pairs)
                CHECK(check_otb(inc, static_cast<int>(c.plan.k()), i, j).holds);
        }
    }
}

TEST_CASE("full report on the hand-checked plan") {
    const Plan ex = two_factor_cycle4();
    const VerificationReport rep = full_report(
        ex, {"potb", "connected", "saturated", "balanced", "block_shape(6,2)", "factors(2)",
             "levels(4)"});
    CHECK(rep.potb);
    CHECK(rep.connected);
    CHECK(!rep.degenerate);
    CHECK(rep.classes == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(rep.saturation.saturated);
    REQUIRE(rep.otb.size() == 1);
    CHECK(rep.otb[0].holds);
    REQUIRE(rep.pergola.size() == 1);
    CHECK(rep.pergola[0].holds);
    CHECK(rep.pergola[0].f == 1);
    CHECK(rep.pergola[0].g == 2);
    REQUIRE(rep.per_factor.size() == 2);
    for (const FactorReport& fr : rep.per_factor) {
        CHECK(fr.design.kind == BlockDesignClass::Kind::BIBD);
        CHECK(fr.adjusted_rank == 3);
        CHECK(fr.levels_declared == 4);
        CHECK(fr.levels_present == 4);
        CHECK(fr.connected);
    }
    REQUIRE(rep.claims.size() == 7);
    for (const ClaimResult& cr : rep.claims) CHECK(cr.pass);

    const VerificationReport bad = full_report(diagonal_pair_block(), {"potb", "balanced"});
    CHECK(!bad.potb);
    CHECK(!bad.claims[0].pass);
    CHECK(bad.claims[0].detail.find("A") != std::string::npos);
    CHECK(!bad.claims[1].pass);
}

TEST_CASE("degenerate plans are reported, not crashed on") {
    Plan broken;
    broken.factors = {{"A", cyclic_levels(3)}};
    broken.blocks = {{rn({0}), rn({1})}};
    const VerificationReport rep = full_report(broken, {"connected"});
    CHECK(rep.degenerate);
    CHECK(!rep.connected);
    CHECK(!rep.claims[0].pass);
    CHECK(rep.per_factor[0].levels_present == 2);
    CHECK(rep.per_factor[0].adjusted_rank == -1);
}

TEST_CASE("inter-class orthogonality claims") {
    const Plan doubled = power(two_factor_cycle4(), 2);
    const VerificationReport rep =
        full_report(doubled, {"piotb(A1#1,A1#2;A2#1,A2#2)", "piotb(A1#1,A2#1;A1#2,A2#2)",
                              "piotb(A1#1,A1#2)", "potb"});
    CHECK(rep.claims[0].pass);
    CHECK(!rep.claims[1].pass);
    CHECK(rep.claims[1].detail.find("not orthogonal") != std::string::npos);
    // Unlisted factors count as singleton classes, so leaving the tied pair
    // A2#1, A2#2 off the list makes the claim fail.
    CHECK(!rep.claims[2].pass);
    CHECK(!rep.claims[3].pass);

    // A genuinely orthogonal plan satisfies any partition into classes.
    const VerificationReport fine =
        full_report(two_factor_cycle4(), {"piotb(A1;A2)", "piotb(A1,A2)"});
    CHECK(fine.claims[0].pass);
    CHECK(fine.claims[1].pass);
}

TEST_CASE("group divisible claims and claim parsing errors") {
    const Plan g = group_divisible_single_factor();
    const VerificationReport rep = full_report(g, {"gdd(0,1)", "gdd(1,2)", "balanced", "connected"});
    CHECK(rep.claims[0].pass);
    CHECK(!rep.claims[1].pass);
    CHECK(!rep.claims[2].pass);
    CHECK(rep.claims[3].pass);

    CHECK_THROWS_AS((void)full_report(g, {"definitely_not_a_claim"}), ParseError);
    CHECK_THROWS_AS((void)full_report(g, {"gdd(1)"}), ParseError);
    CHECK_THROWS_AS((void)full_report(g, {"gdd(a,b)"}), ParseError);
    CHECK_THROWS_AS((void)full_report(g, {"block_shape(4,2"}), ParseError);
    CHECK_THROWS_AS((void)full_report(g, {"piotb(G,NoSuchFactor)"}), ParseError);
    CHECK_THROWS_AS((void)full_report(g, {"piotb(G;G)"}), ParseError);
    CHECK_THROWS_AS((void)full_report(g, {"factors(two)"}), ParseError);

    const VerificationReport shape = full_report(g, {"block_shape(4,2)", "block_shape(2,4)",
                                                     "factors(1)", "levels(4)", "levels(2)"});
    CHECK(shape.claims[0].pass);
    CHECK(!shape.claims[1].pass);
    CHECK(shape.claims[2].pass);
    CHECK(shape.claims[3].pass);
    CHECK(!shape.claims[4].pass);
}
