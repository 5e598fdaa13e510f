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
 * @file equiv.hpp
 * @brief Equivalence and automorphisms of LP linear sets L_f, f = X^{q^s} + θ X^{q^{n-s}}.
 *
 * Notation: σ = x ↦ x^{q^s}, N = N_{q^n/q}, N2 = N_{q^n/q^2}. A semilinear map
 * (diag(1,d), τ) sends L_f to L_{d f^τ}, where f^τ has θ replaced by θ^τ, and
 * (antidiag(1; c), τ) sends L_f to {⟨(1, c z / f^τ(z))⟩}.
 *
 * Brute-force searches use sharp 3-transitivity of PGL(2,q^n): three source
 * points and their images fix the matrix up to a scalar, so the scan runs over
 * τ and ordered target triples instead of all of PΓL.
 */

#ifndef LPSETS_EQUIV_HPP
#define LPSETS_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpsets/field.hpp"
#include "lpsets/linpoly.hpp"
#include "lpsets/linset.hpp"

namespace lpsets {

/// Returns (s, θ) when s < n/2, else (n - s, θ^{-1}). Requires n >= 3, gcd(s, n) = 1, θ != 0.
LPParams normalize_s(const FieldTower& field, const LPParams& params);

/// ∃α: α^{σ²-1} = (θ/δ)^σ, decided by N(θ) = N(δ) (odd n) or N2(θ) = N2(δ) (even n).
bool alpha_condition(const FieldTower& field, unsigned s, Elem theta, Elem delta);

/// All d with d^{σ+1} = (θ/δ)^σ, ascending by encoding.
std::vector<Elem> d_solutions(const FieldTower& field, unsigned s, Elem theta, Elem delta);

/// Which reading of the even-n inverse branch to evaluate.
enum class EvenBranch {
    twisted,   // N2(θ) = N2(1/δ)^σ
    untwisted  // N2(θ) = N2(1/δ)
};

/// ∃d with L_f = L_{d g}: N(θ) ∈ {N(δ), N(1/δ)} for odd n, N2(θ) ∈ {N2(δ), N2(1/δ)^σ} for even n.
bool exists_d(const FieldTower& field, unsigned s, Elem theta, Elem delta, EvenBranch branch = EvenBranch::twisted);

/// The subset of `candidates` with points_of(lp(s,θ)) = points_of(d · lp(s,δ)).
std::vector<Elem> realized_d(const FieldPtr& field, unsigned s, Elem theta, Elem delta,
                             const std::vector<Elem>& candidates);

struct CrossSolutions {
    bool exists = false;  // θ^{q²+1} ∈ {δ^{q²+1}, δ^{-(q³+q)}}
    /// c with {c x / f(x)} = {g(x)/x}, from the d-equation; each machine-checked.
    std::vector<Elem> c;
    /// Candidates from the d-equation that failed the value-multiset check.
    std::vector<Elem> rejected;
};

/// n = 4, s = 1: f = X^q + θX^{q³}, g = X^q + δX^{q³}. Throws std::invalid_argument for n != 4.
CrossSolutions n4_cross(const FieldPtr& field, Elem theta, Elem delta);

/// {c x / f(x) : x != 0} == {g(x)/x : x != 0} as multisets.
bool cross_relation_holds(const LinearizedPoly& f, const LinearizedPoly& g, Elem c);

/**
 * Exhaustive c-scan for a nonzero c with {c x / f(x)} = {g(x)/x}. True when none exists.
 * Requires n > 4 and f bijective.
 */
bool no_cross_above_4(const LinearizedPoly& f, const LinearizedPoly& g);

struct EquivVerdict {
    enum class Case { odd_n, even_n, not_equivalent };

    bool equivalent = false;
    Case which = Case::not_equivalent;
    std::optional<unsigned> tau_exponent;
    /// Maps L_f onto L_g. It is the inverse of (diag(1,d), τ) or (antidiag(1;c), τ), both sending L_g onto L_f.
    std::optional<SemilinearMap> witness;
    /// d or c of the underlying diagonal or antidiagonal map.
    std::optional<Elem> witness_scalar;
    bool antidiagonal = false;
    /// The witness was applied to L_f and reproduced L_g.
    bool checked = false;
};

std::string to_string(EquivVerdict::Case c);

/**
 * Closed-form test over all rn field automorphisms τ. Inputs must be normalized
 * (1 <= s, t < n/2) and valid; throws std::invalid_argument otherwise.
 */
EquivVerdict lp_equivalent(const FieldPtr& field, const LPParams& f, const LPParams& g);

struct BruteForceOptions {
    /// Largest p^{rn} the scans accept.
    std::uint64_t ceiling = 4096;
    unsigned workers = 1;
};

/// Some φ with φ(source) = target, or nullopt. Scan order is fixed, so the result is deterministic.
std::optional<SemilinearMap> find_equivalence(const LinearSet& source, const LinearSet& target,
                                              const BruteForceOptions& options = {});

/// All φ with φ(source) = target, sorted.
std::vector<SemilinearMap> all_equivalences(const LinearSet& source, const LinearSet& target,
                                            const BruteForceOptions& options = {});

/// The least φ (in SemilinearMap order) with φ(L_f) = L_g.
std::optional<SemilinearMap> brute_force_equivalent(const LinearizedPoly& f, const LinearizedPoly& g,
                                                    const BruteForceOptions& options = {});

/// Setwise stabilizer of L_f in PΓL(2,q^n), sorted.
std::vector<SemilinearMap> brute_force_stabilizer(const LinearizedPoly& f, const BruteForceOptions& options = {});

/// Class index of each set under PΓL, classes numbered by first occurrence.
std::vector<std::size_t> brute_force_partition(const std::vector<LinearSet>& sets,
                                               const BruteForceOptions& options = {});

struct AutGroup {
    /// 𝒟 ∪ 𝒞, sorted.
    std::vector<SemilinearMap> elements;
    std::vector<SemilinearMap> d_part;
    std::vector<SemilinearMap> c_part;
    /// N_τ(θ) by its definition (norms of θ^τ against N(θ) or 1/N(θ)).
    std::uint64_t n_tau = 0;
    /// The case formula N_τ, 2N_τ, (q+1)N_τ or 2(q+1)N_τ.
    std::uint64_t predicted_size = 0;
    bool size_matches_formula = false;
    /// Elements that failed to stabilize L_f; empty when the construction is sound.
    std::vector<SemilinearMap> not_stabilizing;
};

/// Requires normalized valid parameters and n >= 3.
AutGroup automorphisms(const FieldPtr& field, const LPParams& params);

/// N_τ(θ).
std::uint64_t n_tau(const FieldTower& field, Elem theta);

/// Group closure, identity and inverses, under the fixed composition convention.
bool is_group(const FieldTower& field, const std::vector<SemilinearMap>& sorted_elements);

}  // namespace lpsets

#endif  // LPSETS_EQUIV_HPP
