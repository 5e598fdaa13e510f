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
 * @file verify.hpp
 * @brief Invariant sweeps. Each suite compares a closed form against an
 * exhaustive oracle over a fixed grid and counts checks and failures.
 */

#ifndef LPSETS_VERIFY_HPP
#define LPSETS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lpsets {

struct VerifyConfig {
    unsigned workers = 1;
    std::uint64_t seed = 1;
    /// Largest p^{rn} for PΓL scans.
    std::uint64_t ceiling = 4096;
    std::uint64_t orbit_ceiling = std::uint64_t{1} << 20;
    /// Progress and per-cell info lines; null for silence.
    std::ostream* log = nullptr;
};

/// (p, r, n).
struct FieldSpec {
    std::uint64_t p;
    unsigned r;
    unsigned n;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    /// Per-cell summaries, always kept.
    std::vector<std::string> info;
    /// The first few failure messages.
    std::vector<std::string> failure_messages;

    void check(bool ok, const std::function<std::string()>& message);
    void note(std::string line);
    void merge(const SuiteResult& other);
    bool passed() const noexcept { return failures == 0 && checks > 0; }
};

/// All (p, r, n) with p^{rn} <= limit, n in [n_min, n_max], q = p^r != 2 unless allow_q2.
std::vector<FieldSpec> fields_up_to(std::uint64_t limit, unsigned n_min, unsigned n_max, bool allow_q2);

/// Value multisets and weights of f and its adjoint agree; bilinear trace identity; involution.
SuiteResult verify_adjoint(const VerifyConfig& cfg, const std::vector<FieldSpec>& fields, unsigned polys_per_field);

/// Coefficient identities on every pair of polynomials with equal point sets.
SuiteResult verify_coeffs(const VerifyConfig& cfg);

/// Closed-form norm-power coefficient against the field sum, every θ; bijectivity against the kernel.
SuiteResult verify_normpower(const VerifyConfig& cfg, const std::vector<FieldSpec>& fields);

/// lp_equivalent against PΓL search; `unbucketed` fields compare every ordered pair directly.
SuiteResult verify_equiv(const VerifyConfig& cfg, const std::vector<FieldSpec>& unbucketed,
                         const std::vector<FieldSpec>& bucketed);

/// Constructed automorphism group against the brute-force stabilizer.
SuiteResult verify_aut(const VerifyConfig& cfg, const std::vector<FieldSpec>& exhaustive,
                       const std::vector<FieldSpec>& sampled, unsigned samples);

/// Closed-form Λ against the orbit oracle (p^{wr} <= orbit_limit, n <= 12) and the PΓL partition.
SuiteResult verify_census(const VerifyConfig& cfg, std::uint64_t orbit_limit, const std::vector<FieldSpec>& brute);

/// Strict bound sandwich over p ∈ {2,3,5,7}, 2 <= r <= 10, n ∈ {3,4,5,6}.
SuiteResult verify_bounds(const VerifyConfig& cfg);

/// f_size and k_size against enumeration for p^m <= limit.
SuiteResult verify_fk(const VerifyConfig& cfg, std::uint64_t limit);

/// |d_solutions(s,θ,θ)| against the parity table over all fields p^{rn} <= limit, n >= 3.
SuiteResult verify_dcounts(const VerifyConfig& cfg, std::uint64_t limit);

/// d-equation, α-condition and exists_d against their scans; realized d against the point-set scan.
SuiteResult verify_dsolutions(const VerifyConfig& cfg, const std::vector<FieldSpec>& fields);

/// n = 4 cross condition against the c-scan over `n4`; no cross witness on sampled pairs over `above4`.
SuiteResult verify_cross(const VerifyConfig& cfg, const std::vector<FieldSpec>& n4, const std::vector<FieldSpec>& above4,
                         unsigned samples);

/// Valid θ gives a maximum scattered set, N(θ) = 1 a non-scattered one, for every field in the list.
SuiteResult verify_scattered(const VerifyConfig& cfg, const std::vector<FieldSpec>& fields);

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or every suite for "all") on its default grid.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace lpsets

#endif  // LPSETS_VERIFY_HPP
