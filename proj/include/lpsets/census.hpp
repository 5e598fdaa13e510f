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
 * @file census.hpp
 * @brief Counting PΓL-inequivalent LP linear sets on PG(1,q^n), q = p^r.
 *
 * F(m) is the set of elements of F_{p^m} in no proper subfield, and K(m) ⊆ F(m) those
 * with x^{p^k+1} = 1 for some 0 <= k < m. Λ(n,q) is a divisor sum over |F| ± |K|
 * plus a small prime-field correction ε, times φ(n)/2.
 */

#ifndef LPSETS_CENSUS_HPP
#define LPSETS_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpsets/equiv.hpp"
#include "lpsets/surd.hpp"

namespace lpsets {

/// q = 2 admits no valid θ, so every census entry point rejects it.
class QEqualsTwo : public std::invalid_argument {
public:
    QEqualsTwo() : std::invalid_argument("census: q = 2 has no LP linear sets") {}
};

BigInt f_size(std::uint64_t p, unsigned m);
BigInt k_size(std::uint64_t p, unsigned m);

struct CensusTerm {
    unsigned r_prime = 0;
    BigInt f;
    BigInt k;
    /// r' | r contributes (|F|+|K|)/(2r'); r' | 2r with r' ∤ r contributes (|F|-|K|)/(2r').
    bool divides_r = true;
    Rational contribution;
};

struct CensusBounds {
    QuadSurd lower;
    QuadSurd upper;
    std::string lower_case;
    std::string upper_case;
};

struct CensusReport {
    std::uint64_t p = 0;
    unsigned r = 0;
    unsigned n = 0;
    BigInt lambda;
    Rational epsilon;
    std::vector<CensusTerm> terms;
    /// Σ terms + ε, the orbit count the product is built from.
    Rational orbit_total;
    std::optional<CensusBounds> bounds;
    /// lower < orbit_total - ε < upper, exactly.
    std::optional<bool> sandwich;
    /// Orbit count × φ(n)/2.
    std::optional<BigInt> orbit_lambda;
    /// PΓL partition of all LP sets.
    std::optional<BigInt> brute_force_lambda;
    std::optional<double> gronwall;
    std::vector<std::string> notes;

    /// Preferred oracle value: brute force when present.
    std::optional<BigInt> oracle_lambda() const;
    /// Some oracle ran and every oracle that ran agrees with lambda.
    bool verified() const;
};

/// Closed form with per-divisor terms, bounds (r > 1) and the Gronwall ratio (r >= 3). No oracles.
CensusReport lambda_closed(std::uint64_t p, unsigned r, unsigned n);

/// Orbits of F*_{q^w} minus the norm-1 elements under x ↦ x^{±p^k}; w = 1 for odd n, 2 for even n.
std::uint64_t lambda_orbit_oracle(std::uint64_t p, unsigned r, unsigned n,
                                  std::uint64_t ceiling = std::uint64_t{1} << 20);

/// Number of PΓL classes among L_f over all valid (s, θ), 1 <= s < n/2.
std::uint64_t lambda_brute_force(std::uint64_t p, unsigned r, unsigned n, const BruteForceOptions& options = {});

/// Lower and upper bounds on orbit_total - ε; requires r > 1 and n >= 3.
CensusBounds lambda_bounds(std::uint64_t p, unsigned r, unsigned n);

/// σ(r) / (r ln ln r); requires r >= 3.
double gronwall_ratio(unsigned r);

struct CensusOptions {
    bool orbit = true;
    std::uint64_t orbit_ceiling = std::uint64_t{1} << 20;
    bool brute_force = false;
    BruteForceOptions brute;
};

/// lambda_closed plus whichever oracles fit their ceilings; infeasible oracles are left empty.
CensusReport census_cell(std::uint64_t p, unsigned r, unsigned n, const CensusOptions& options = {});

}  // namespace lpsets

#endif  // LPSETS_CENSUS_HPP
