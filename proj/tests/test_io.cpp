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

#include <sstream>

#include "lpsets/io.hpp"

using namespace lpsets;

TEST(Io, PolyRoundTrip) {
    const auto F = FieldTower::build(3, 1, 4);
    const auto f = io::parse_poly(F, "0,1,0,5");
    EXPECT_EQ(f, lp_poly(F, {1, Elem{5}}, true));
    EXPECT_EQ(io::format_poly(f), "0,1,0,5");
    const auto g = io::parse_poly(F, "lp:s=1,theta=g^1");
    EXPECT_EQ(g, lp_poly(F, {1, F->generator()}));
    EXPECT_THROW(io::parse_poly(F, "1,2"), std::invalid_argument);
    EXPECT_THROW(io::parse_poly(F, "lp:s=1,theta=1"), std::invalid_argument);
    EXPECT_NO_THROW(io::parse_poly(F, "lp:s=1,theta=1", true));
}

TEST(Io, Points) {
    const auto F = FieldTower::build(3, 1, 3);
    const auto P = io::parse_point(*F, "[2:4]");
    EXPECT_EQ(P, ProjPoint::normalize(*F, Elem{2}, Elem{4}));
    EXPECT_EQ(io::parse_point(*F, io::format_point(*F, P)), P);
    EXPECT_EQ(io::format_point(*F, ProjPoint::from_index(0)), "[0:1]");
    EXPECT_THROW(io::parse_point(*F, "[0:0]"), std::invalid_argument);
}

TEST(Io, LinsetJson) {
    const auto F = FieldTower::build(3, 1, 3);
    const auto j = io::linset_json(points_of(LinearizedPoly::monomial(F, 1, F->one())));
    EXPECT_EQ(j["rank"], 3);
    EXPECT_EQ(j["size"], 13);
    EXPECT_EQ(j["scattered"], true);
    EXPECT_EQ(j["weights"].size(), 13u);
}

TEST(Io, VerdictJson) {
    const auto F = FieldTower::build(3, 1, 4);
    const Elem t = F->generator();
    const auto j = io::verdict_json(lp_equivalent(F, {1, t}, {1, t}));
    EXPECT_EQ(j["equivalent"], true);
    EXPECT_EQ(j["checked"], true);
    EXPECT_EQ(j["tau_exponent"], 0);
    EXPECT_EQ(j["witness"]["matrix"], io::Json::array({1, 0, 0, 1}));
}

TEST(Io, CensusTsv) {
    const std::string header = io::census_tsv_header();
    std::istringstream hs(header);
    std::vector<std::string> cols;
    for (std::string c; std::getline(hs, c, '\t');) cols.push_back(c);
    ASSERT_GE(cols.size(), 9u);
    const std::vector<std::string> head{"p", "r", "n", "lambda", "epsilon", "lower", "upper", "oracle", "verified"};
    EXPECT_EQ(std::vector<std::string>(cols.begin(), cols.begin() + 9), head);
    CensusOptions opt;
    opt.orbit = false;
    const std::string row = io::census_tsv_row(census_cell(3, 1, 4, opt));
    EXPECT_NE(row.find("\t-\t"), std::string::npos);
    EXPECT_EQ(row.rfind("3\t1\t4\t1\t", 0), 0u);
    const auto j = io::census_json(census_cell(5, 1, 3));
    EXPECT_EQ(j["lambda"], "2");
}
