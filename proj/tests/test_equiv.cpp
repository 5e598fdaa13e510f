/*
   Copyright 2026 The lpsets Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <algorithm>

#include "lpsets/equiv.hpp"
#include "lpsets/oracles.hpp"

using namespace lpsets;

namespace {

std::vector<Elem> valid_thetas(const FieldTower& F) {
    std::vector<Elem> out;
    for (std::uint64_t v = 1; v < F.order(); ++v)
        if (lp_valid(F, {1, Elem{v}})) out.push_back(Elem{v});
    return out;
}

bool transports(const LinearizedPoly& f, const LinearizedPoly& g, const SemilinearMap& phi) {
    return apply_map(points_of(f), phi).same_points(points_of(g));
}

}  // namespace

TEST(Equiv, NormalizeS) {
    const auto F5 = FieldTower::build(3, 1, 5);
    const Elem t = F5->generator();
    const auto a = normalize_s(*F5, {1, t});
    EXPECT_EQ(a.s, 1u);
    EXPECT_EQ(a.theta, t);
    const auto b = normalize_s(*F5, {4, t});
    EXPECT_EQ(b.s, 1u);
    EXPECT_EQ(b.theta, F5->inv(t));
    const auto F4 = FieldTower::build(3, 1, 4);
    const auto c = normalize_s(*F4, {3, F4->generator()});
    EXPECT_EQ(c.s, 1u);
    EXPECT_EQ(c.theta, F4->inv(F4->generator()));
    EXPECT_THROW(normalize_s(*F4, {2, F4->generator()}), std::invalid_argument);
}

TEST(Equiv, AlphaConditionAgainstScan) {
    for (auto [p, r, n] : {std::tuple{3, 1, 3}, std::tuple{3, 1, 4}, std::tuple{2, 2, 3}}) {
        const auto F = FieldTower::build(p, r, n);
        const auto ts = valid_thetas(*F);
        for (std::size_t i = 0; i < ts.size(); i += 3)
            for (std::size_t j = 0; j < ts.size(); j += 2)
                EXPECT_EQ(alpha_condition(*F, 1, ts[i], ts[j]), oracle::alpha_scan(*F, 1, ts[i], ts[j]));
        EXPECT_TRUE(alpha_condition(*F, 1, ts[0], ts[0]));
    }
}

TEST(Equiv, DSolutionCountsAtDeltaEqualsTheta) {
    for (auto [p, r, n] : {std::tuple{3, 1, 3}, std::tuple{2, 2, 3}, std::tuple{3, 1, 4}, std::tuple{5, 1, 3},
                           std::tuple{2, 2, 5}}) {
        const auto F = FieldTower::build(p, r, n);
        const std::uint64_t expect = n % 2 == 0 ? F->q() + 1 : (F->q() % 2 == 0 ? 1 : 2);
        for (const Elem t : valid_thetas(*F)) {
            const auto ds = d_solutions(*F, 1, t, t);
            EXPECT_EQ(ds.size(), expect);
            EXPECT_EQ(ds, oracle::d_equation_scan(*F, 1, t, t));
        }
    }
}

TEST(Equiv, DSolutionsEmptyWhenNotAPower) {
    const auto F = FieldTower::build(3, 1, 4);
    const auto ts = valid_thetas(*F);
    std::size_t empty = 0;
    for (const Elem t : ts)
        for (const Elem d : ts) {
            const auto ds = d_solutions(*F, 1, t, d);
            EXPECT_EQ(ds, oracle::d_equation_scan(*F, 1, t, d));
            empty += ds.empty();
        }
    EXPECT_GT(empty, 0u);
}

TEST(Equiv, ExistsDAgainstScan) {
    const auto F3 = FieldTower::build(3, 1, 3);
    for (const Elem t : valid_thetas(*F3)) {
        EXPECT_TRUE(exists_d(*F3, 1, t, t));
        EXPECT_TRUE(exists_d(*F3, 1, t, F3->inv(t)));
        for (const Elem d : valid_thetas(*F3))
            EXPECT_EQ(exists_d(*F3, 1, t, d), !oracle::d_scan(F3, 1, t, d).empty());
    }
    const auto F4 = FieldTower::build(3, 1, 4);
    for (const Elem t : valid_thetas(*F4))
        for (const Elem d : valid_thetas(*F4))
            EXPECT_EQ(exists_d(*F4, 1, t, d, EvenBranch::twisted), !oracle::d_scan(F4, 1, t, d).empty());
}

TEST(Equiv, CrossMapAtN4) {
    const auto F = FieldTower::build(3, 1, 4);
    const auto ts = valid_thetas(*F);
    for (const Elem t : ts) {
        const auto self = n4_cross(F, t, t);
        EXPECT_TRUE(self.exists);
        EXPECT_EQ(self.c.size(), F->q() + 1);
        EXPECT_TRUE(self.rejected.empty());
    }
    for (std::size_t i = 0; i < ts.size(); i += 5)
        for (const Elem d : ts) {
            const auto f = lp_poly(F, {1, ts[i]}), g = lp_poly(F, {1, d});
            const auto cs = n4_cross(F, ts[i], d);
            const auto scan = oracle::c_scan(f, g);
            EXPECT_EQ(cs.exists, !scan.empty());
            EXPECT_EQ(cs.c, scan);
            if (cs.exists) EXPECT_EQ(cs.c.size(), F->q() + 1);
            for (const Elem c : cs.c) EXPECT_TRUE(cross_relation_holds(f, g, c));
        }
    const auto F5 = FieldTower::build(3, 1, 5);
    EXPECT_THROW(n4_cross(F5, F5->generator(), F5->generator()), std::invalid_argument);
}

TEST(Equiv, NoCrossAboveFour) {
    const auto F = FieldTower::build(2, 2, 5);
    const auto ts = valid_thetas(*F);
    for (std::size_t i = 0; i < 6; ++i) {
        const Elem t = ts[i * 37 % ts.size()], d = ts[i * 101 % ts.size()];
        if (!is_bijective_lp(F, {1, t}).by_kernel) continue;
        const auto f = lp_poly(F, {1, t}), g = lp_poly(F, {1, d});
        EXPECT_TRUE(no_cross_above_4(f, g));
        EXPECT_TRUE(oracle::c_scan(f, g).empty());
    }
}

TEST(Equiv, LpEquivalentBasics) {
    const auto F = FieldTower::build(2, 2, 5);
    const Elem t = valid_thetas(*F).front();
    const auto same = lp_equivalent(F, {1, t}, {1, t});
    EXPECT_TRUE(same.equivalent);
    EXPECT_TRUE(same.checked);
    ASSERT_TRUE(same.witness.has_value());
    EXPECT_EQ(*same.witness, SemilinearMap::identity());
    EXPECT_FALSE(lp_equivalent(F, {1, t}, {2, t}).equivalent);
    const auto inv = lp_equivalent(F, {1, t}, {1, F->inv(t)});
    EXPECT_TRUE(inv.equivalent);
    EXPECT_TRUE(inv.checked);
    EXPECT_EQ(inv.which, EquivVerdict::Case::odd_n);
    EXPECT_TRUE(transports(lp_poly(F, {1, t}), lp_poly(F, {1, F->inv(t)}), *inv.witness));
    EXPECT_THROW(lp_equivalent(F, {3, t}, {1, t}), std::invalid_argument);
}

TEST(Equiv, AgreesWithBruteForceAtQ3N4) {
    const auto F = FieldTower::build(3, 1, 4);
    const auto ts = valid_thetas(*F);
    for (std::size_t i = 0; i < ts.size(); i += 7)
        for (std::size_t j = 0; j < ts.size(); j += 3) {
            const auto f = lp_poly(F, {1, ts[i]}), g = lp_poly(F, {1, ts[j]});
            const auto v = lp_equivalent(F, {1, ts[i]}, {1, ts[j]});
            const auto bf = brute_force_equivalent(f, g);
            EXPECT_EQ(v.equivalent, bf.has_value()) << ts[i].v << " " << ts[j].v;
            if (v.equivalent) {
                EXPECT_TRUE(v.checked);
                EXPECT_TRUE(transports(f, g, *v.witness));
            }
            if (bf) EXPECT_TRUE(transports(f, g, *bf));
        }
}

TEST(Equiv, BruteForceBasics) {
    const auto F = FieldTower::build(3, 1, 3);
    const auto f = lp_poly(F, {1, F->generator()});
    EXPECT_EQ(brute_force_equivalent(f, f), SemilinearMap::identity());
    EXPECT_EQ(brute_force_equivalent(f, adjoint(f)), SemilinearMap::identity());
    BruteForceOptions small;
    small.ceiling = 8;
    EXPECT_THROW(brute_force_equivalent(f, f, small), CeilingExceeded);
    // A search restricted to maps found by the naive scan at F_9.
    const auto F9 = FieldTower::build(3, 1, 2);
    const LinearSet a = points_of(LinearizedPoly::monomial(F9, 1, F9->one()));
    const LinearSet b = points_of(LinearizedPoly::monomial(F9, 1, F9->generator()));
    EXPECT_EQ(all_equivalences(a, b), oracle::naive_equivalences(a, b));
}

TEST(Equiv, AutomorphismsAtQ3N4) {
    const auto F = FieldTower::build(3, 1, 4);
    const auto ts = valid_thetas(*F);
    for (std::size_t i = 0; i < ts.size(); i += 9) {
        const auto aut = automorphisms(F, {1, ts[i]});
        EXPECT_TRUE(std::binary_search(aut.elements.begin(), aut.elements.end(), SemilinearMap::identity()));
        EXPECT_FALSE(aut.c_part.empty());
        EXPECT_EQ(aut.predicted_size, 2 * (F->q() + 1) * aut.n_tau);
        EXPECT_TRUE(aut.size_matches_formula);
        EXPECT_TRUE(aut.not_stabilizing.empty());
        const auto stab = brute_force_stabilizer(lp_poly(F, {1, ts[i]}));
        EXPECT_EQ(aut.elements, stab);
        EXPECT_TRUE(is_group(*F, stab));
    }
}

TEST(Equiv, AutomorphismSizeCases) {
    const auto F43 = FieldTower::build(2, 2, 3);
    for (const Elem t : valid_thetas(*F43)) {
        const auto aut = automorphisms(F43, {1, t});
        EXPECT_EQ(aut.elements.size(), aut.n_tau);
    }
    const auto F33 = FieldTower::build(3, 1, 3);
    for (const Elem t : valid_thetas(*F33)) EXPECT_EQ(automorphisms(F33, {1, t}).elements.size(), 2 * n_tau(*F33, t));
    const auto F36 = FieldTower::build(3, 1, 6);
    const auto aut = automorphisms(F36, {1, F36->generator()});
    EXPECT_EQ(aut.elements.size(), (F36->q() + 1) * aut.n_tau);
    EXPECT_TRUE(aut.c_part.empty());
    EXPECT_TRUE(is_group(*F36, aut.elements));
}
