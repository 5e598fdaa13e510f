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

#include <random>

#include "lpsets/linset.hpp"

using namespace lpsets;

namespace {

Elem theta_with_norm(const FieldTower& F, Elem norm) {
    for (std::uint64_t v = 1; v < F.order(); ++v)
        if (F.norm_q(Elem{v}) == norm) return Elem{v};
    return Elem{0};
}

}  // namespace

TEST(LinSet, ZeroPolynomial) {
    const auto F = FieldTower::build(3, 1, 3);
    const LinearSet L = points_of(LinearizedPoly::zero(F));
    ASSERT_EQ(L.size(), 1u);
    EXPECT_EQ(L.entries()[0].point, (ProjPoint{Elem{1}, Elem{0}}));
    EXPECT_EQ(L.entries()[0].weight, 3u);
}

TEST(LinSet, Pseudoregulus) {
    const auto F = FieldTower::build(3, 1, 3);
    const LinearSet L = points_of(LinearizedPoly::monomial(F, 1, F->one()));
    EXPECT_EQ(L.size(), 13u);
    for (const auto& e : L.entries()) EXPECT_EQ(e.weight, 1u);
    EXPECT_TRUE(is_scattered(L));
    EXPECT_EQ(L.weight_mass(), F->order() - 1);
    const auto F5 = FieldTower::build(2, 2, 5);
    for (unsigned s = 1; s < 5; ++s) EXPECT_TRUE(is_scattered(LinearizedPoly::monomial(F5, s, F5->one())));
}

TEST(LinSet, NormOneIsNotScattered) {
    for (auto [p, r, n] : {std::tuple{3, 1, 3}, std::tuple{3, 1, 4}, std::tuple{2, 2, 3}}) {
        const auto F = FieldTower::build(p, r, n);
        const Elem t = theta_with_norm(*F, F->one());
        const LinearSet L = points_of(lp_poly(F, {1, t}, true));
        EXPECT_LT(L.size(), L.size_bound());
        bool heavy = false;
        for (const auto& e : L.entries()) heavy |= e.weight >= 2;
        EXPECT_TRUE(heavy);
        EXPECT_FALSE(is_scattered(L));
    }
}

TEST(LinSet, ValidLpIsScattered) {
    const auto F = FieldTower::build(3, 1, 4);
    for (std::uint64_t v = 1; v < F->order(); ++v)
        if (lp_valid(*F, {1, Elem{v}})) EXPECT_TRUE(is_scattered(lp_poly(F, {1, Elem{v}})));
}

TEST(LinSet, MapsActOnPoints) {
    const auto F = FieldTower::build(3, 1, 3);
    const auto f = lp_poly(F, {1, F->generator()});
    const LinearSet L = points_of(f);
    EXPECT_EQ(apply_map(L, SemilinearMap::identity()), L);
    const Elem d = F->pow_u(F->generator(), 5);
    const auto diag = SemilinearMap::make(*F, F->one(), F->zero(), F->zero(), d, 0);
    EXPECT_EQ(apply_map(L, diag), points_of(f.scaled(d)));
}

TEST(LinSet, AntidiagonalUsesInverse) {
    // Every valid θ over F_27 has N(θ) = -1, so a bijective f needs q = 5.
    const auto F = FieldTower::build(5, 1, 3);
    const auto f = lp_poly(F, {1, theta_with_norm(*F, Elem{2})});
    const Elem c = F->pow_u(F->generator(), 3);
    // (0,1;c,0) sends ⟨(x, f(x))⟩ to ⟨(f(x), c x)⟩.
    const auto anti = SemilinearMap::make(*F, F->zero(), F->one(), c, F->zero(), 0);
    const auto finv = inverse(f);
    ASSERT_TRUE(finv.has_value());
    std::vector<LinearSet::Entry> expect;
    std::vector<std::uint8_t> seen(F->order() + 1, 0);
    for (std::uint64_t v = 1; v < F->order(); ++v) {
        const Elem x{v};
        const auto P = ProjPoint::normalize(*F, x, F->mul(c, evaluate(*finv, x)));
        if (!seen[P.index()]++) expect.push_back({P, 1});
    }
    EXPECT_TRUE(apply_map(points_of(f), anti).same_points(LinearSet(F, 3, expect)));
}

TEST(LinSet, CompositionConvention) {
    const auto F = FieldTower::build(2, 2, 3);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
    std::uniform_int_distribution<unsigned> frob(0, F->degree() - 1);
    auto random_map = [&] {
        for (;;) {
            const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)}, d{pick(rng)};
            if (F->sub(F->mul(a, d), F->mul(b, c)).v != 0) return SemilinearMap::make(*F, a, b, c, d, frob(rng));
        }
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto phi = random_map(), psi = random_map();
        const auto both = compose(*F, phi, psi);
        const auto back = compose(*F, phi, inverse(*F, phi));
        EXPECT_EQ(back, SemilinearMap::identity());
        for (std::uint64_t i = 0; i <= F->order(); ++i) {
            const auto P = ProjPoint::from_index(i);
            EXPECT_EQ(apply(*F, both, P), apply(*F, phi, apply(*F, psi, P)));
        }
    }
    EXPECT_THROW(SemilinearMap::make(*F, F->one(), F->one(), F->one(), F->one(), 0), std::invalid_argument);
}

TEST(LinSet, CoefficientIdentities) {
    const auto F = FieldTower::build(3, 1, 3);
    const auto f = lp_poly(F, {1, F->generator()});
    EXPECT_TRUE(check_coefficient_identities(f, f).all());
    EXPECT_TRUE(check_coefficient_identities(f, adjoint(f)).all());
    EXPECT_TRUE(points_of(f).same_points(points_of(adjoint(f))));
}

TEST(LinSet, PointOrder) {
    const auto F = FieldTower::build(3, 1, 2);
    EXPECT_LT(ProjPoint::from_index(0), ProjPoint::from_index(1));
    for (std::uint64_t i = 0; i <= F->order(); ++i) EXPECT_EQ(ProjPoint::from_index(i).index(), i);
    EXPECT_THROW(ProjPoint::normalize(*F, F->zero(), F->zero()), std::invalid_argument);
    const auto P = ProjPoint::normalize(*F, Elem{2}, Elem{4});
    EXPECT_EQ(P.x, F->one());
}
