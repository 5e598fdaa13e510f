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

#include <numeric>
#include <set>

#include "lpsets/field.hpp"

using namespace lpsets;

namespace {

// Roots-only test is enough for degree <= 3.
bool has_root(std::uint64_t p, const std::vector<std::uint64_t>& c) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

TEST(Field, PrimeFieldModulus) {
    const auto F = FieldTower::build(2, 1, 1);
    EXPECT_EQ(F->order(), 2u);
    EXPECT_EQ(F->modulus(), (std::vector<std::uint64_t>{0, 1}));
    EXPECT_EQ(F->mul(Elem{1}, Elem{1}), F->one());
}

TEST(Field, CanonicalQuadraticOverF3) {
    std::vector<std::uint64_t> least;
    for (std::uint64_t enc = 0; enc < 9 && least.empty(); ++enc) {
        std::vector<std::uint64_t> c{enc % 3, enc / 3, 1};
        if (!has_root(3, c)) least = c;
    }
    const auto F = FieldTower::build(3, 1, 2);
    EXPECT_EQ(F->order(), 9u);
    EXPECT_EQ(F->modulus(), least);
}

TEST(Field, SubfieldOfF64) {
    const auto F = FieldTower::build(2, 2, 3);
    EXPECT_EQ(F->q(), 4u);
    std::set<std::uint64_t> fixed;
    for (std::uint64_t v = 0; v < F->order(); ++v)
        if (F->pow_u(Elem{v}, 4) == Elem{v}) fixed.insert(v);
    EXPECT_EQ(fixed.size(), 4u);
    for (auto v : fixed) EXPECT_TRUE(F->in_subfield(Elem{v}, 2));
    std::uint64_t members = 0;
    for (std::uint64_t v = 0; v < F->order(); ++v) members += F->in_subfield(Elem{v}, 2);
    EXPECT_EQ(members, 4u);
}

class FieldAxioms : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(FieldAxioms, TablesAgreeWithPolynomialArithmetic) {
    const auto [p, r, n] = GetParam();
    const auto T = FieldTower::build(p, r, n);
    FieldOptions slow;
    slow.tables = FieldOptions::Tables::never;
    const auto S = FieldTower::build(p, r, n, std::nullopt, slow);
    ASSERT_TRUE(T->has_tables());
    ASSERT_FALSE(S->has_tables());
    EXPECT_EQ(T->modulus(), S->modulus());
    EXPECT_EQ(T->generator(), S->generator());
    const std::uint64_t N = T->order();
    const std::uint64_t step = N > 256 ? N / 61 + 1 : 1;
    for (std::uint64_t a = 0; a < N; a += step)
        for (std::uint64_t b = 0; b < N; b += step) {
            EXPECT_EQ(T->add(Elem{a}, Elem{b}), S->add(Elem{a}, Elem{b}));
            EXPECT_EQ(T->mul(Elem{a}, Elem{b}), S->mul(Elem{a}, Elem{b}));
        }
}

TEST_P(FieldAxioms, InverseLagrangeAndGenerator) {
    const auto [p, r, n] = GetParam();
    const auto F = FieldTower::build(p, r, n);
    const std::uint64_t N = F->order();
    for (std::uint64_t v = 1; v < N; ++v) {
        const Elem x{v};
        EXPECT_EQ(F->mul(x, F->inv(x)), F->one());
        EXPECT_EQ(F->pow_u(x, N - 1), F->one());
        EXPECT_EQ(F->exp(F->log(x)), x);
    }
    EXPECT_EQ(F->multiplicative_order(F->generator()), N - 1);
    if (p != 2) EXPECT_EQ(F->pow_u(F->generator(), (N - 1) / 2), F->minus_one());
    EXPECT_THROW(F->inv(F->zero()), std::domain_error);
}

TEST_P(FieldAxioms, FrobeniusNormTrace) {
    const auto [p, r, n] = GetParam();
    const auto F = FieldTower::build(p, r, n);
    const unsigned m = F->degree();
    const std::uint64_t N = F->order();
    for (std::uint64_t v = 0; v < N; ++v) {
        const Elem x{v};
        EXPECT_EQ(F->frobenius(x, 0), x);
        EXPECT_EQ(F->frobenius(x, m), x);
        EXPECT_EQ(F->frobenius(x, 1), F->pow_u(x, F->p()));
        EXPECT_EQ(F->frobenius(F->frobenius(x, 1), -1), x);
        const Elem y{(v * 7 + 3) % N};
        EXPECT_EQ(F->frobenius(F->add(x, y), 1), F->add(F->frobenius(x, 1), F->frobenius(y, 1)));
    }
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d) continue;
        EXPECT_EQ(F->norm_to(F->one(), d), F->one());
        EXPECT_EQ(F->trace_to(F->zero(), d), F->zero());
        // The norm of a generator generates F_{p^d}^*.
        const Elem g = F->norm_to(F->generator(), d);
        EXPECT_TRUE(F->in_subfield(g, d));
        std::uint64_t pd = 1;
        for (unsigned i = 0; i < d; ++i) pd *= F->p();
        EXPECT_EQ(F->multiplicative_order(g), pd - 1);
        for (std::uint64_t v = 0; v < N; ++v) {
            const Elem x{v};
            if (!F->in_subfield(x, d)) continue;
            Elem sum = F->zero();
            for (unsigned i = 0; i < m / d; ++i) sum = F->add(sum, x);
            EXPECT_EQ(F->trace_to(x, d), sum);
        }
    }
    // x in F_q has N_{q^n/q}(x) = x^n.
    for (std::uint64_t v = 0; v < N; ++v)
        if (F->in_subfield(Elem{v}, F->r())) EXPECT_EQ(F->norm_q(Elem{v}), F->pow_u(Elem{v}, F->n()));
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(std::make_tuple(2, 1, 3), std::make_tuple(3, 1, 3), std::make_tuple(2, 2, 3),
                                           std::make_tuple(3, 1, 4), std::make_tuple(5, 1, 3),
                                           std::make_tuple(2, 2, 4), std::make_tuple(7, 1, 2)));

TEST(Field, ParseAndFormat) {
    const auto F = FieldTower::build(3, 1, 3);
    EXPECT_EQ(F->parse("g^1"), F->generator());
    EXPECT_EQ(F->parse("g^-1"), F->inv(F->generator()));
    EXPECT_EQ(F->parse("g^0"), F->one());
    EXPECT_EQ(F->parse("17"), Elem{17});
    EXPECT_EQ(F->format(Elem{17}), "17");
    EXPECT_THROW(F->parse("27"), std::invalid_argument);
    EXPECT_THROW(F->parse("banana"), std::invalid_argument);
}

TEST(Field, CoefficientsRoundTrip) {
    const auto F = FieldTower::build(5, 1, 3);
    for (std::uint64_t v = 0; v < F->order(); ++v) {
        const auto c = F->coefficients(Elem{v});
        ASSERT_EQ(c.size(), 3u);
        EXPECT_EQ(c[0] + 5 * c[1] + 25 * c[2], v);
        EXPECT_EQ(F->from_coefficients(c), Elem{v});
    }
}

TEST(Field, ModulusOverride) {
    // X^3 + 2X + 1 is irreducible over F_3.
    const auto F = FieldTower::build(3, 1, 3, std::vector<std::uint64_t>{1, 2, 0, 1});
    EXPECT_EQ(F->order(), 27u);
    EXPECT_THROW(FieldTower::build(3, 1, 3, std::vector<std::uint64_t>{0, 0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(FieldTower::build(4, 1, 2), std::invalid_argument);
}

TEST(Field, LargeFieldWithoutTables) {
    const auto F = FieldTower::build(2, 1, 24);
    EXPECT_FALSE(F->has_tables());
    const Elem g = F->generator();
    EXPECT_EQ(F->mul(g, F->inv(g)), F->one());
    EXPECT_EQ(F->frobenius(g, 24), g);
    EXPECT_EQ(F->exp(F->log(F->pow_u(g, 12345))), F->pow_u(g, 12345));
}
