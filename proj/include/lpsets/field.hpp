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
 * @file field.hpp
 * @brief The field chain F_p ⊂ F_q ⊂ F_{q^n}, q = p^r, realized as one field F_{p^{rn}}.
 *
 * Elements are stored by their canonical encoding: the integer Σ c_i p^i where
 * x = Σ c_i α^i in the power basis of the canonical modulus. Subfields are the
 * fixed fields {x : x^{p^d} = x}, so norms and traces are pure exponent formulas.
 *
 * When p^{rn} fits the table budget the field carries discrete log / antilog and
 * Zech tables and every operation is O(1). Above the budget it falls back to
 * polynomial arithmetic over F_p.
 *
 * A FieldTower is immutable after construction and may be shared read-only
 * between threads.
 */

#ifndef LPSETS_FIELD_HPP
#define LPSETS_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpsets {

/// Opaque scalar of a FieldTower; `v` is the canonical integer encoding.
struct Elem {
    std::uint64_t v = 0;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Thrown when a requested size exceeds a configured enumeration ceiling.
class CeilingExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct FieldOptions {
    enum class Tables { automatic, require, never };

    /// Log/antilog tables are built when p^{rn} is at most this.
    std::uint64_t table_budget = std::uint64_t{1} << 20;
    /// Hard limit on p^{rn}; polynomial arithmetic above the table budget.
    std::uint64_t max_order = std::uint64_t{1} << 40;
    Tables tables = Tables::automatic;
};

class FieldTower;
using FieldPtr = std::shared_ptr<const FieldTower>;

class FieldTower {
   public:
    /**
     * Build F_{p^{rn}} with the canonical modulus (the monic irreducible of degree rn
     * whose non-leading coefficients have least encoding) unless `modulus` is given.
     * `modulus` lists c_0..c_{rn} (low to high) and must be monic and irreducible.
     */
    static FieldPtr build(std::uint64_t p, unsigned r, unsigned n,
                          const std::optional<std::vector<std::uint64_t>>& modulus = std::nullopt,
                          const FieldOptions& options = {});

    std::uint64_t p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    unsigned n() const noexcept { return n_; }
    /// Degree rn of F_{q^n} over F_p.
    unsigned degree() const noexcept { return m_; }
    /// q = p^r.
    std::uint64_t q() const noexcept { return q_; }
    /// p^{rn}.
    std::uint64_t order() const noexcept { return order_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return generator_; }
    bool has_tables() const noexcept { return !log_.empty(); }

    Elem zero() const noexcept { return {0}; }
    Elem one() const noexcept { return {1}; }
    Elem minus_one() const noexcept { return {p_ - 1}; }
    Elem from_int(std::uint64_t encoding) const;
    /// The prime-field element c mod p.
    Elem from_prime_field(std::int64_t c) const noexcept;

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return {a.v ^ b.v};
        if (a.v == 0) return b;
        if (b.v == 0) return a;
        if (!log_.empty()) {
            const std::uint64_t la = log_[a.v];
            const std::uint64_t lb = log_[b.v];
            const std::uint64_t d = lb >= la ? lb - la : lb + (order_ - 1) - la;
            const std::uint32_t z = zech_[d];
            if (z == kNoLog) return {0};
            return {exp_[la + z]};
        }
        return add_slow(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a.v == 0) return a;
        if (!log_.empty()) return {exp_[log_[a.v] + (order_ - 1) / 2]};
        return neg_slow(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.v == 0 || b.v == 0) return {0};
        if (!log_.empty()) return {exp_[log_[a.v] + log_[b.v]]};
        return mul_slow(a, b);
    }
    /// Throws std::domain_error for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^e for any integer e; e is reduced mod p^{rn}-1 for a != 0. 0^0 = 1; 0^e throws for e < 0.
    Elem pow(Elem a, std::int64_t e) const;
    Elem pow_u(Elem a, std::uint64_t e) const noexcept;
    /// a^{p^k}, k taken mod rn (negative k allowed).
    Elem frobenius(Elem a, std::int64_t k) const noexcept;

    /// N to F_{p^d}: a^{(p^{rn}-1)/(p^d-1)}. Requires d | rn.
    Elem norm_to(Elem a, unsigned d) const;
    /// Tr to F_{p^d}: Σ_{i < rn/d} a^{p^{di}}. Requires d | rn.
    Elem trace_to(Elem a, unsigned d) const;
    /// N_{q^n/q}.
    Elem norm_q(Elem a) const { return norm_to(a, r_); }
    /// N_{q^n/q^2}; requires 2 | n.
    Elem norm_q2(Elem a) const { return norm_to(a, 2 * r_); }
    Elem trace_q(Elem a) const { return trace_to(a, r_); }
    bool in_subfield(Elem a, unsigned d) const;

    /// Discrete log to the canonical generator; a != 0.
    std::uint64_t log(Elem a) const;
    /// generator^k, k mod p^{rn}-1.
    Elem exp(std::uint64_t k) const noexcept;
    /// Multiplicative order of a != 0.
    std::uint64_t multiplicative_order(Elem a) const;

    /// Decimal encoding, or "g^k" with k an integer (negative allowed).
    Elem parse(std::string_view text) const;
    std::string format(Elem a) const;

    /// Power-basis coefficients of a, low to high, length rn.
    std::vector<std::uint64_t> coefficients(Elem a) const;
    Elem from_coefficients(const std::vector<std::uint64_t>& c) const;

    /// Frobenius multiplier p^k mod (p^{rn}-1) for 0 <= k < rn.
    std::uint64_t frobenius_multiplier(unsigned k) const noexcept { return frob_mult_[k]; }

    /// All elements in encoding order 0..p^{rn}-1 is the natural iteration; this is p^{rn}-1.
    std::uint64_t group_order() const noexcept { return order_ - 1; }

   private:
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    FieldTower() = default;

    Elem add_slow(Elem a, Elem b) const noexcept;
    Elem neg_slow(Elem a) const noexcept;
    Elem mul_slow(Elem a, Elem b) const noexcept;
    Elem pow_slow(Elem a, std::uint64_t e) const noexcept;
    std::uint64_t log_bsgs(Elem a) const;
    void build_tables();
    void find_generator();

    std::uint64_t p_ = 0;
    unsigned r_ = 0;
    unsigned n_ = 0;
    unsigned m_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> group_primes_;
    std::vector<std::uint64_t> frob_mult_;
    Elem generator_{};

    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> zech_;
};

/**
 * Checked value type for code that mixes elements of possibly different towers
 * (parsing, CLI glue, tests). Kernels use FieldTower::add/mul on Elem directly.
 */
class Element {
   public:
    Element(const FieldTower& field, Elem value) : field_(&field), value_(value) {}

    const FieldTower& field() const noexcept { return *field_; }
    Elem value() const noexcept { return value_; }
    std::uint64_t encoding() const noexcept { return value_.v; }

    Element inv() const { return {*field_, field_->inv(value_)}; }
    Element pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }
    Element frobenius(std::int64_t k) const { return {*field_, field_->frobenius(value_, k)}; }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator/(const Element& a, const Element& b);
    friend Element operator-(const Element& a) { return {*a.field_, a.field_->neg(a.value_)}; }
    friend bool operator==(const Element& a, const Element& b);

   private:
    const FieldTower* field_;
    Elem value_;
};

}  // namespace lpsets

#endif  // LPSETS_FIELD_HPP
