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

#include "lpsets/linpoly.hpp"
#include "lpsets/oracles.hpp"

using namespace lpsets;

namespace {

std::vector<Elem> thetas_with_norm(const FieldTower& F, Elem norm) {
    std::vector<Elem> out;
    for (std::uint64_t v = 1; v < F.order(); ++v)
        if (F.norm_q(Elem{v}) == norm) out.push_back(Elem{v});
    return out;
}

LinearizedPoly random_poly(const FieldPtr& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
    std::vector<Elem> c(F->n());
    for (auto& e : c) e = Elem{pick(rng)};
    return LinearizedPoly(F, c);
}

}  // namespace

TEST(LinPoly, LpPlacement) {
    const auto F4 = FieldTower::build(3, 1, 4);
    const Elem t = F4->generator();
    const auto f = lp_poly(F4, {1, t});
    EXPECT_EQ(std::vector<Elem>(f.coeffs().begin(), f.coeffs().end()),
              (std::vector<Elem>{Elem{0}, Elem{1}, Elem{0}, t}));
    const auto F5 = FieldTower::build(2, 1, 5);
    const auto g = lp_poly(F5, {2, Elem{0}}, true);
    EXPECT_EQ(g, LinearizedPoly::monomial(F5, 2, F5->one()));
    const auto F53 = FieldTower::build(3, 1, 5);
    const auto h = lp_poly(F53, {2, F53->generator()});
    for (unsigned i = 0; i < 5; ++i) EXPECT_EQ(h.coeff(i).v != 0, i == 2 || i == 3);
    EXPECT_THROW(lp_poly(F4, {2, t}), std::invalid_argument);
    EXPECT_THROW(lp_poly(F4, {1, F4->one()}), std::invalid_argument);
}

TEST(LinPoly, Evaluate) {
    const auto F = FieldTower::build(5, 1, 3);
    const auto Xq = LinearizedPoly::monomial(F, 1, F->one());
    const Elem t = F->generator();
    const auto f = lp_poly(F, {1, t});
    for (std::uint64_t v = 0; v < F->order(); ++v) EXPECT_EQ(evaluate(Xq, Elem{v}), F->pow_u(Elem{v}, 5));
    EXPECT_EQ(evaluate(f, F->zero()), F->zero());
    EXPECT_EQ(evaluate(f, F->one()), F->add(F->one(), t));
}

TEST(LinPoly, ComposeAgainstPointwise) {
    const auto F = FieldTower::build(3, 1, 3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_poly(F, rng), g = random_poly(F, rng);
        const auto fg = compose(f, g);
        for (std::uint64_t v = 0; v < F->order(); ++v)
            EXPECT_EQ(evaluate(fg, Elem{v}), evaluate(f, evaluate(g, Elem{v})));
        EXPECT_EQ(compose(f, LinearizedPoly::identity(F)), f);
    }
    const auto F2 = FieldTower::build(3, 1, 2);
    const auto Xq = LinearizedPoly::monomial(F2, 1, F2->one());
    EXPECT_EQ(compose(Xq, Xq), LinearizedPoly::identity(F2));
}

TEST(LinPoly, CrossMapInverseAtN4) {
    const auto F = FieldTower::build(3, 1, 4);
    for (const Elem t : {F->generator(), F->pow_u(F->generator(), 7)}) {
        const Elem tq3inv = F->inv(F->frobenius(t, 3));
        const auto f = lp_poly(F, {1, t}, true);
        const auto h = LinearizedPoly(F, {Elem{0}, F->one(), Elem{0}, F->neg(tq3inv)});
        const Elem k = F->sub(F->frobenius(t, 1), tq3inv);
        EXPECT_EQ(compose(h, f), LinearizedPoly::monomial(F, 0, k));
        const auto inv = inverse(f);
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(*inv, h.scaled(F->inv(k)));
    }
}

TEST(LinPoly, Adjoint) {
    const auto F = FieldTower::build(2, 2, 3);
    const Elem a = F->generator();
    EXPECT_EQ(adjoint(LinearizedPoly::monomial(F, 0, a)), LinearizedPoly::monomial(F, 0, a));
    EXPECT_EQ(adjoint(LinearizedPoly::monomial(F, 1, F->one())), LinearizedPoly::monomial(F, 2, F->one()));
    // adjoint(X^σ + θX^{σ^{n-1}}) = θ^σ X^σ + X^{σ^{n-1}}
    const auto F5 = FieldTower::build(3, 1, 5);
    const Elem t = F5->generator();
    for (unsigned s : {1u, 2u}) {
        const auto f = lp_poly(F5, {s, t});
        const auto expect =
            LinearizedPoly::from_sigma(F5, s, {Elem{0}, F5->frobenius(t, s), Elem{0}, Elem{0}, F5->one()});
        EXPECT_EQ(adjoint(f), expect);
    }
}

TEST(LinPoly, AdjointTraceIdentity) {
    const auto F = FieldTower::build(3, 1, 3);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_poly(F, rng);
        const auto fh = adjoint(f);
        EXPECT_EQ(adjoint(fh), f);
        for (std::uint64_t y = 0; y < F->order(); y += 2)
            for (std::uint64_t z = 0; z < F->order(); z += 3)
                EXPECT_EQ(F->trace_q(F->mul(Elem{y}, evaluate(f, Elem{z}))),
                          F->trace_q(F->mul(Elem{z}, evaluate(fh, Elem{y}))));
        EXPECT_EQ(value_multiset(f), value_multiset(fh));
    }
}

TEST(LinPoly, ValueMultiset) {
    const auto F = FieldTower::build(3, 1, 4);
    const auto id = value_multiset(LinearizedPoly::identity(F));
    EXPECT_EQ(id[F->one()], F->order() - 1);
    EXPECT_EQ(id.support_size(), 1u);
    const auto pr = value_multiset(LinearizedPoly::monomial(F, 1, F->one()));
    EXPECT_EQ(pr.total(), F->order() - 1);
    for (auto c : pr.counts) EXPECT_TRUE(c == 0 || c == F->q() - 1);
}

TEST(LinPoly, InverseOfMonomials) {
    const auto F = FieldTower::build(2, 2, 3);
    EXPECT_EQ(inverse(LinearizedPoly::identity(F)), LinearizedPoly::identity(F));
    for (unsigned s : {1u, 2u})
        EXPECT_EQ(inverse(LinearizedPoly::monomial(F, s, F->one())), LinearizedPoly::monomial(F, 3 - s, F->one()));
    EXPECT_FALSE(inverse(LinearizedPoly::zero(F)).has_value());
}

TEST(LinPoly, Bijectivity) {
    const auto F = FieldTower::build(5, 1, 3);
    for (const Elem t : thetas_with_norm(*F, F->minus_one())) {
        const auto b = is_bijective_lp(F, {1, t});
        EXPECT_FALSE(b.closed_form);
        EXPECT_FALSE(b.by_kernel);
        EXPECT_EQ(b.kernel_size, F->q());
    }
    for (std::uint64_t v = 1; v < F->order(); ++v) {
        const Elem nrm = F->norm_q(Elem{v});
        if (nrm == F->one() || nrm == F->minus_one()) continue;
        const auto b = is_bijective_lp(F, {1, Elem{v}});
        EXPECT_TRUE(b.closed_form && b.by_kernel);
    }
    const auto F4 = FieldTower::build(3, 1, 4);
    for (std::uint64_t v = 1; v < F4->order(); ++v)
        if (lp_valid(*F4, {1, Elem{v}})) EXPECT_TRUE(is_bijective_lp(F4, {1, Elem{v}}).by_kernel);
}

TEST(LinPoly, NormPowerCoefficient) {
    for (auto [p, r, n] : {std::tuple{3, 1, 3}, std::tuple{2, 2, 3}, std::tuple{3, 1, 4}}) {
        const auto F = FieldTower::build(p, r, n);
        EXPECT_EQ(norm_power_coefficient(*F, {1, Elem{0}}), F->one());
        for (std::uint64_t v = 0; v < F->order(); ++v) {
            const LPParams pr{1, Elem{v}};
            EXPECT_EQ(norm_power_coefficient(*F, pr), oracle::norm_power_field_sum(lp_poly(F, pr, true))) << v;
            if (n % 2) EXPECT_EQ(norm_power_coefficient(*F, pr), F->add(F->one(), F->norm_q(Elem{v})));
        }
    }
}
