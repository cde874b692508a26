#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "potb/combinators.hpp"
#include "potb/plan.hpp"

// Randomized instances of the four shift-family hypotheses under which a
// derived plan is orthogonal through the block factor, for the property
// suites.  Each generator returns the derived plan plus the factor pairs
// the hypothesis promises to be orthogonal.

struct OtbCase {
    potb::Plan plan;
    std::vector<std::pair<int, int>> pairs;
};

namespace gendetail {

inline potb::Plan random_two_factor(std::mt19937_64& rng, int s, int b, int k) {
    potb::Plan p;
    p.factors = {{"A", potb::cyclic_levels(s)}, {"B", potb::cyclic_levels(s)}};
    std::uniform_int_distribution<int> lev(0, s - 1);
    p.blocks.assign(b, potb::Block(k, potb::Run(2)));
    for (auto& blk : p.blocks)
        for (auto& run : blk) {
            run[0] = potb::Level::fin(lev(rng));
            run[1] = potb::Level::fin(lev(rng));
        }
    return p;
}

}  // namespace gendetail

// Initial plan whose first factor runs every level, expanded by the shift
// family {(0, u) : u in Z_s} that sweeps the second coordinate.
inline OtbCase gen_sweep_second_coordinate(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> s_d(2, 5), b_d(1, 2);
    const int s = s_d(rng);
    const int b = b_d(rng);
    const int k = (s + b - 1) / b + 1;  // enough runs to place every level
    potb::Plan p0 = gendetail::random_two_factor(rng, s, b, k);
    // Surjective first coordinate: deal a shuffled copy of 0..s-1 across
    // the runs, leaving the remaining cells random.
    std::vector<int> deal(s);
    std::iota(deal.begin(), deal.end(), 0);
    std::shuffle(deal.begin(), deal.end(), rng);
    for (int t = 0; t < s; ++t)
        p0.blocks[t % b][t / b][0] = potb::Level::fin(deal[t]);
    std::vector<potb::ShiftVector> family;
    for (int u = 0; u < s; ++u) family.push_back({0, u});
    return {potb::add_along(p0, family), {{0, 1}}};
}

// Arbitrary initial plan expanded by the full product family Z_s x Z_s.
inline OtbCase gen_sweep_full_product(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> s_d(2, 4), b_d(1, 2), k_d(1, 3);
    const int s = s_d(rng);
    potb::Plan p0 = gendetail::random_two_factor(rng, s, b_d(rng), k_d(rng));
    std::vector<potb::ShiftVector> family;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v) family.push_back({u, v});
    return {potb::add_along(p0, family), {{0, 1}}};
}

// Two seed blocks {(i,i),(j,j)} and {(k,l),(l,k)} with l-k = +-(j-i),
// expanded by the diagonal family {(u, u) : u in Z_s}.
inline OtbCase gen_sweep_diagonal_pairs(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> s_d(3, 8);
    const int s = s_d(rng);
    std::uniform_int_distribution<int> lev(0, s - 1), d_d(1, s - 1), coin(0, 1);
    const int i = lev(rng);
    const int d = d_d(rng);
    const int j = (i + d) % s;
    const int k = lev(rng);
    const int l = (k + (coin(rng) ? d : s - d)) % s;
    auto fin = [](int x) { return potb::Level::fin(x); };
    potb::Plan p0;
    p0.factors = {{"A", potb::cyclic_levels(s)}, {"B", potb::cyclic_levels(s)}};
    p0.blocks = {{{fin(i), fin(i)}, {fin(j), fin(j)}}, {{fin(k), fin(l)}, {fin(l), fin(k)}}};
    std::vector<potb::ShiftVector> family;
    for (int u = 0; u < s; ++u) family.push_back({u, u});
    return {potb::add_along(p0, family), {{0, 1}}};
}

// Orthogonal initial plan (a full product expansion) grown by an arbitrary
// family that covers every level in every coordinate; every factor pair of
// the result stays orthogonal.
inline OtbCase gen_sweep_covering_family(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> s_d(2, 3), b_d(1, 2), k_d(1, 3), extra_d(0, 2);
    const int s = s_d(rng);
    potb::Plan base = gendetail::random_two_factor(rng, s, b_d(rng), k_d(rng));
    std::vector<potb::ShiftVector> product;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v) product.push_back({u, v});
    potb::Plan p0 = potb::add_along(base, product);
    std::uniform_int_distribution<int> lev(0, s - 1);
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<potb::ShiftVector> family;
    for (int u = 0; u < s; ++u) family.push_back({u, perm[u]});
    for (int t = extra_d(rng); t > 0; --t) family.push_back({lev(rng), lev(rng)});
    OtbCase c;
    c.plan = potb::add_along(p0, family);
    for (int a = 0; a < c.plan.m(); ++a)
        for (int b2 = a + 1; b2 < c.plan.m(); ++b2) c.pairs.emplace_back(a, b2);
    return c;
}

// Copy expansion along a column-orthogonal array: factors landing in
// different copies must be pairwise orthogonal no matter the seed plan.
inline OtbCase gen_cross_copy(std::mt19937_64& rng, const potb::OrthArray& q) {
    std::uniform_int_distribution<int> m_d(1, 2), b_d(1, 2), k_d(1, 3), lev(0, q.s - 1);
    const int m0 = m_d(rng);
    potb::Plan p0;
    for (int i = 0; i < m0; ++i)
        p0.factors.push_back({std::string(1, static_cast<char>('A' + i)),
                              potb::cyclic_levels(q.s)});
    p0.blocks.assign(b_d(rng), potb::Block(k_d(rng), potb::Run(m0)));
    for (auto& blk : p0.blocks)
        for (auto& run : blk)
            for (auto& cell : run) cell = potb::Level::fin(lev(rng));
    OtbCase c;
    c.plan = potb::diamond(q, p0);
    for (int f1 = 0; f1 < c.plan.m(); ++f1)
        for (int f2 = f1 + 1; f2 < c.plan.m(); ++f2)
            if (f1 / m0 != f2 / m0) c.pairs.emplace_back(f1, f2);
    return c;
}
