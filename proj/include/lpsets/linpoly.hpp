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
 * @file linpoly.hpp
 * @brief q-polynomials Σ a_i X^{q^i} over F_{q^n}, reduced mod X^{q^n} - X.
 *
 * Coefficients are always stored in the q-basis (slot i holds the coefficient of
 * X^{q^i}). A q^s-polynomial Σ b_j X^{q^{sj}} is stored by moving b_j to slot sj mod n.
 */

#ifndef LPSETS_LINPOLY_HPP
#define LPSETS_LINPOLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lpsets/field.hpp"

namespace lpsets {

class LinearizedPoly {
   public:
    /// `coeffs` must have exactly n entries.
    LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs);

    static LinearizedPoly zero(FieldPtr field);
    /// X
    static LinearizedPoly identity(FieldPtr field);
    /// a X^{q^i}
    static LinearizedPoly monomial(FieldPtr field, unsigned i, Elem a);
    /// Σ b_j X^{σ^j} with σ = x ↦ x^{q^s}, gcd(s, n) = 1.
    static LinearizedPoly from_sigma(FieldPtr field, unsigned s, const std::vector<Elem>& sigma_coeffs);

    const FieldTower& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    unsigned n() const noexcept { return static_cast<unsigned>(coeffs_.size()); }
    Elem coeff(unsigned i) const noexcept { return coeffs_[i % coeffs_.size()]; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    /// Largest i with a_i != 0.
    std::optional<unsigned> q_degree() const noexcept;
    /// d · f
    LinearizedPoly scaled(Elem d) const;

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) noexcept;

   private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// LP parameters: f = X^{q^s} + θ X^{q^{n-s}} with gcd(s, n) = 1.
struct LPParams {
    unsigned s = 1;
    Elem theta{};
};

/// N_{q^n/q}(θ) ∉ {0, 1}.
bool lp_valid(const FieldTower& field, const LPParams& params);

/// Throws std::invalid_argument when gcd(s, n) != 1, s out of [1, n), or θ invalid and !allow_invalid.
LinearizedPoly lp_poly(FieldPtr field, const LPParams& params, bool allow_invalid = false);

Elem evaluate(const LinearizedPoly& f, Elem x) noexcept;

/// f ∘ g mod X^{q^n} - X.
LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g);

/// The adjoint w.r.t. (x, y) ↦ Tr_{q^n/q}(xy): slot n-i receives a_i^{q^{n-i}}.
LinearizedPoly adjoint(const LinearizedPoly& f);

/// counts[b] = #{x ∈ F_{q^n}^* : f(x) = b x}, indexed by encoding of b.
struct ValueMultiset {
    std::vector<std::uint64_t> counts;

    std::uint64_t operator[](Elem b) const noexcept { return counts[b.v]; }
    std::uint64_t total() const noexcept;
    /// Number of b with nonzero count.
    std::uint64_t support_size() const noexcept;
    friend bool operator==(const ValueMultiset&, const ValueMultiset&) = default;
};

ValueMultiset value_multiset(const LinearizedPoly& f);

/// Two-sided compositional inverse, or nullopt when f is not bijective.
std::optional<LinearizedPoly> inverse(const LinearizedPoly& f);

struct Bijectivity {
    /// n even, or N_{q^n/q}(θ) != -1.
    bool closed_form = false;
    /// Kernel is {0}.
    bool by_kernel = false;
    std::uint64_t kernel_size = 0;
};

/// Requires θ != 0.
Bijectivity is_bijective_lp(FieldPtr field, const LPParams& params);

/**
 * Coefficient of X^{q^n - 1} in (f(X)/X)^{(q^n-1)/(q-1)} for the LP polynomial:
 * 1 + N_{q^n/q}(θ) for odd n, 1 + N_{q^n/q}(θ) + N_{q^n/q^2}(θ) + N_{q^n/q^2}(θ)^{q^s} for even n.
 */
Elem norm_power_coefficient(const FieldTower& field, const LPParams& params);

}  // namespace lpsets

#endif  // LPSETS_LINPOLY_HPP
