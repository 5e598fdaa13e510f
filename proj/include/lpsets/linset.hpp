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
 * @file linset.hpp
 * @brief Linear sets L_f on PG(1,q^n) and the action of PΓL(2,q^n) on them.
 *
 * Points are stored normalized (first nonzero coordinate 1) and ordered
 * lexicographically on encodings, so ⟨(0,1)⟩ precedes every ⟨(1,m)⟩. The
 * dense index of a point is 0 for ⟨(0,1)⟩ and m+1 for ⟨(1,m)⟩, which is
 * monotone in that order.
 */

#ifndef LPSETS_LINSET_HPP
#define LPSETS_LINSET_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "lpsets/field.hpp"
#include "lpsets/linpoly.hpp"

namespace lpsets {

struct ProjPoint {
    Elem x;
    Elem y;

    /// Throws std::invalid_argument for (0, 0).
    static ProjPoint normalize(const FieldTower& field, Elem x, Elem y);
    static ProjPoint from_index(std::uint64_t index) noexcept {
        return index == 0 ? ProjPoint{Elem{0}, Elem{1}} : ProjPoint{Elem{1}, Elem{index - 1}};
    }
    std::uint64_t index() const noexcept { return x.v == 0 ? 0 : y.v + 1; }

    friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

class LinearSet {
   public:
    struct Entry {
        ProjPoint point;
        unsigned weight = 0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    /// `entries` need not be sorted; duplicates are rejected.
    LinearSet(FieldPtr field, unsigned rank, std::vector<Entry> entries);

    const FieldTower& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    unsigned rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::vector<ProjPoint> points() const;
    /// 0 when P is not in the set.
    unsigned weight(const ProjPoint& p) const noexcept;
    bool contains(const ProjPoint& p) const noexcept { return weight(p) != 0; }
    /// (q^k - 1)/(q - 1)
    std::uint64_t size_bound() const;
    /// Σ (q^{w(P)} - 1) over the points.
    std::uint64_t weight_mass() const;

    /// Same points, weights ignored.
    bool same_points(const LinearSet& other) const noexcept;
    friend bool operator==(const LinearSet& a, const LinearSet& b) noexcept {
        return a.field_ == b.field_ && a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }

   private:
    FieldPtr field_;
    unsigned rank_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::uint8_t> dense_;  // weight by point index
};

/**
 * Element of PΓL(2,q^n): ⟨v⟩ ↦ ⟨M v^τ⟩ with M = [[a,b],[c,d]] and τ = x ↦ x^{p^k}.
 * Normalized so that the first nonzero of a, b, c, d is 1.
 */
struct SemilinearMap {
    Elem a{1}, b{0}, c{0}, d{1};
    unsigned k = 0;

    /// Throws std::invalid_argument when ad - bc = 0.
    static SemilinearMap make(const FieldTower& field, Elem a, Elem b, Elem c, Elem d, unsigned k);
    static SemilinearMap identity() noexcept { return {}; }

    friend constexpr auto operator<=>(const SemilinearMap&, const SemilinearMap&) = default;
};

/// (M,τ)∘(N,υ) = (M·N^τ, τυ); acting on points, apply(φ∘ψ, P) = apply(φ, apply(ψ, P)).
SemilinearMap compose(const FieldTower& field, const SemilinearMap& phi, const SemilinearMap& psi);
SemilinearMap inverse(const FieldTower& field, const SemilinearMap& phi);
ProjPoint apply(const FieldTower& field, const SemilinearMap& phi, const ProjPoint& p) noexcept;

/// L_f, built from the value multiset of f(x)/x. Rank n.
LinearSet points_of(const LinearizedPoly& f);

struct Scatteredness {
    bool all_weight_one = false;
    bool maximum_size = false;
};

Scatteredness scatteredness(const LinearSet& set);
/// Throws std::logic_error when the two characterizations disagree.
bool is_scattered(const LinearSet& set);
bool is_scattered(const LinearizedPoly& f);

/// Image of L under φ, weights carried along.
LinearSet apply_map(const LinearSet& set, const SemilinearMap& phi);

/// Necessary conditions for L_f = L_g on the coefficients α_i of f and β_i of g.
struct CoefficientIdentities {
    bool constant_term = false;  // α_0 = β_0
    bool paired = false;         // α_k α_{n-k}^{q^k} = β_k β_{n-k}^{q^k}, 1 <= k < n
    bool triple = false;         // the three-factor identity, 2 <= k < n
    bool all() const noexcept { return constant_term && paired && triple; }
};

CoefficientIdentities check_coefficient_identities(const LinearizedPoly& f, const LinearizedPoly& g);

}  // namespace lpsets

#endif  // LPSETS_LINSET_HPP
