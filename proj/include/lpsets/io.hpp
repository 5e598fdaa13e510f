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

/**
 * @file io.hpp
 * @brief Text and JSON forms. Elements are written as decimal encodings and read
 * as decimal encodings or g^k.
 */

#ifndef LPSETS_IO_HPP
#define LPSETS_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "lpsets/census.hpp"
#include "lpsets/equiv.hpp"
#include "lpsets/linpoly.hpp"
#include "lpsets/linset.hpp"

namespace lpsets::io {

using Json = nlohmann::ordered_json;

/// "a0,a1,...,a{n-1}" or "lp:s=<s>,theta=<elem>".
LinearizedPoly parse_poly(const FieldPtr& field, std::string_view text, bool allow_invalid = false);
std::string format_poly(const LinearizedPoly& f);

/// "[x:y]".
ProjPoint parse_point(const FieldTower& field, std::string_view text);
std::string format_point(const FieldTower& field, const ProjPoint& p);

/// {matrix: [a,b,c,d], frobenius: k}.
Json map_json(const SemilinearMap& phi);

/// {rank, size, scattered, weights: [{point, w}]}.
Json linset_json(const LinearSet& set);

/// {equivalent, case, tau_exponent, witness, checked}.
Json verdict_json(const EquivVerdict& v);

Json census_json(const CensusReport& rep);
std::string census_tsv_header();
std::string census_tsv_row(const CensusReport& rep);

}  // namespace lpsets::io

#endif  // LPSETS_IO_HPP
