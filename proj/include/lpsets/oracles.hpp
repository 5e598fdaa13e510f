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
 * @file oracles.hpp
 * @brief Exhaustive reference computations. Each one scans the relevant finite
 * set directly and shares no closed form with the code it checks.
 */

#ifndef LPSETS_ORACLES_HPP
#define LPSETS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "lpsets/field.hpp"
#include "lpsets/linpoly.hpp"
#include "lpsets/linset.hpp"

namespace lpsets::oracle {

/// -Σ_{x != 0} (f(x)/x)^{(q^n-1)/(q-1)}.
Elem norm_power_field_sum(const LinearizedPoly& f);

/// ∃α != 0 with α^{q^{2s}-1} = (θ/δ)^{q^s}, by scanning α.
bool alpha_scan(const FieldTower& field, unsigned s, Elem theta, Elem delta);

/// All d != 0 with d^{q^s+1} = (θ/δ)^{q^s}, by scanning d.
std::vector<Elem> d_equation_scan(const FieldTower& field, unsigned s, Elem theta, Elem delta);

/// All d != 0 with L_f = L_{d g} as point sets, f = lp(s,θ), g = lp(s,δ).
std::vector<Elem> d_scan(const FieldPtr& field, unsigned s, Elem theta, Elem delta);

/// All c != 0 with {c x / f(x)} = {g(x)/x} as sets; x with f(x) = 0 are skipped.
std::vector<Elem> c_scan(const LinearizedPoly& f, const LinearizedPoly& g);

/// Every normalized (M, τ) of PΓL(2,q^n) with φ(source) = target, weights included. Θ(p^{3rn} rn).
std::vector<SemilinearMap> naive_equivalences(const LinearSet& source, const LinearSet& target);

/// #{x ∈ F_{p^m} : x in no proper subfield}, by subfield membership tests.
std::uint64_t f_count(std::uint64_t p, unsigned m);

/// #{x counted by f_count with x^{p^k+1} = 1 for some 0 <= k < m}.
std::uint64_t k_count(std::uint64_t p, unsigned m);

/// gcd(p^i + 1, p^j - 1) by Euclid on the integers.
std::uint64_t gcd_power(std::uint64_t p, unsigned i, unsigned j);

}  // namespace lpsets::oracle

#endif  // LPSETS_ORACLES_HPP
