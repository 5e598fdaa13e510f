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

#include <cmath>

#include "lpsets/census.hpp"
#include "lpsets/numtheory.hpp"
#include "lpsets/oracles.hpp"

using namespace lpsets;

TEST(Surd, ArithmeticAndSign) {
    const QuadSurd r3 = QuadSurd::half_power(3, 1);
    EXPECT_EQ((r3 * r3).to_string(), "3");
    EXPECT_EQ(QuadSurd::half_power(3, 3).to_string(), "3*sqrt(3)");
    EXPECT_EQ(QuadSurd::half_power(2, -2).to_string(), "1/2");
    const QuadSurd x(2, Rational(7, 5), -1);  // 7/5 - sqrt 2 < 0
    EXPECT_EQ(x.sign(), -1);
    const QuadSurd y(2, Rational(-3, 2), 1);  // sqrt 2 - 3/2 < 0
    EXPECT_EQ(y.sign(), -1);
    EXPECT_EQ(QuadSurd(2, 0, 0).sign(), 0);
    EXPECT_EQ(compare(QuadSurd(5, 2, 0), QuadSurd::half_power(5, 1)), -1);
    EXPECT_NEAR(QuadSurd(7, 1, 2).to_double(), 1 + 2 * std::sqrt(7.0), 1e-12);
    EXPECT_THROW(QuadSurd(2, 1, 1) + QuadSurd(3, 1, 1), std::invalid_argument);
}

TEST(Census, FKExamples) {
    for (std::uint64_t p : {3u, 5u, 7u}) EXPECT_EQ(k_size(p, 1), 2);
    EXPECT_EQ(k_size(2, 1), 1);
    EXPECT_EQ(k_size(3, 3), 0);
    EXPECT_EQ(k_size(3, 2), 2);
    EXPECT_EQ(f_size(2, 4), 12);
}

TEST(Census, FKAgainstEnumeration) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
        for (unsigned m = 1; ipow(p, m) <= 4096; ++m) {
            EXPECT_EQ(f_size(p, m), oracle::f_count(p, m)) << p << "^" << m;
            EXPECT_EQ(k_size(p, m), oracle::k_count(p, m)) << p << "^" << m;
        }
}

TEST(Census, ClosedFormExamples) {
    EXPECT_EQ(lambda_closed(7, 1, 5).lambda, 6);
    EXPECT_EQ(lambda_closed(2, 2, 3).lambda, 1);
    EXPECT_EQ(lambda_closed(5, 1, 3).lambda, 2);
    EXPECT_EQ(lambda_closed(2, 2, 4).lambda, 2);
    const auto q3n4 = lambda_closed(3, 1, 4);
    EXPECT_EQ(q3n4.lambda, 1);
    EXPECT_FALSE(q3n4.notes.empty());
    EXPECT_THROW(lambda_closed(2, 1, 5), QEqualsTwo);
}

TEST(Census, OrbitOracle) {
    EXPECT_EQ(lambda_orbit_oracle(5, 1, 3), 2u);
    EXPECT_EQ(lambda_orbit_oracle(3, 1, 4), 1u);
    EXPECT_EQ(lambda_orbit_oracle(2, 2, 3), 1u);
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned r = 1; r <= 4; ++r)
            for (unsigned n = 3; n <= 8; ++n) {
                if (ipow(p, r) == 2 || ipow(p, 2 * r) > 65536) continue;
                const auto rep = lambda_closed(p, r, n);
                EXPECT_EQ(rep.lambda, BigInt(lambda_orbit_oracle(p, r, n)) * euler_phi(n) / 2) << p << r << n;
            }
    EXPECT_THROW(lambda_orbit_oracle(3, 1, 4, 8), CeilingExceeded);
}

TEST(Census, BruteForcePartition) {
    EXPECT_EQ(lambda_brute_force(2, 2, 3), 1u);
    EXPECT_EQ(lambda_brute_force(3, 1, 4), 1u);
}

TEST(Census, Bounds) {
    const auto rep = lambda_closed(2, 4, 4);
    ASSERT_TRUE(rep.bounds.has_value());
    ASSERT_TRUE(rep.sandwich.has_value());
    EXPECT_TRUE(*rep.sandwich);
    const QuadSurd sum = QuadSurd(2, rep.orbit_total - rep.epsilon, 0);
    EXPECT_EQ(compare(rep.bounds->lower, sum), -1);
    EXPECT_EQ(compare(sum, rep.bounds->upper), -1);
    EXPECT_FALSE(lambda_closed(3, 1, 4).bounds.has_value());
}

TEST(Census, Gronwall) {
    EXPECT_NEAR(gronwall_ratio(3), 4.0 / (3.0 * std::log(std::log(3.0))), 1e-12);
    EXPECT_NEAR(gronwall_ratio(3), 14.18, 0.01);
    EXPECT_NEAR(gronwall_ratio(4), 7.0 / (4.0 * std::log(std::log(4.0))), 1e-12);
}

TEST(Census, CellVerification) {
    CensusOptions opt;
    opt.brute_force = true;
    const auto rep = census_cell(2, 2, 3, opt);
    ASSERT_TRUE(rep.orbit_lambda && rep.brute_force_lambda);
    EXPECT_EQ(*rep.oracle_lambda(), 1);
    EXPECT_TRUE(rep.verified());
    CensusOptions tight;
    tight.orbit_ceiling = 4;
    const auto bare = census_cell(3, 1, 4, tight);
    EXPECT_FALSE(bare.orbit_lambda.has_value());
    EXPECT_FALSE(bare.verified());
}
