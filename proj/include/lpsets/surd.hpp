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
 * @file surd.hpp
 * @brief Exact arithmetic in Q(√p) for bound evaluation.
 *
 * The census bounds involve p^{e} with e ∈ ½Z, so every quantity has the form
 * a + b√p with rational a, b. Signs are decided exactly: a + b√p > 0 reduces to
 * comparing a² with b²p when a and b disagree in sign.
 */

#ifndef LPSETS_SURD_HPP
#define LPSETS_SURD_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpsets {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class QuadSurd {
public:
    explicit QuadSurd(std::uint64_t p, Rational a = 0, Rational b = 0);

    /// p^{h/2} for any integer h.
    static QuadSurd half_power(std::uint64_t p, std::int64_t h);

    std::uint64_t radicand() const noexcept { return p_; }
    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }

    QuadSurd operator+(const QuadSurd& o) const;
    QuadSurd operator-(const QuadSurd& o) const;
    QuadSurd operator*(const QuadSurd& o) const;
    QuadSurd operator*(const Rational& k) const;
    QuadSurd operator+(const Rational& k) const;
    QuadSurd operator-(const Rational& k) const;

    /// -1, 0 or 1.
    int sign() const;
    double to_double() const;
    /// "a" or "a + b*sqrt(p)" with reduced fractions.
    std::string to_string() const;

private:
    void check(const QuadSurd& o) const;

    std::uint64_t p_;
    Rational a_;
    Rational b_;
};

/// Sign of x - y.
int compare(const QuadSurd& x, const QuadSurd& y);

}  // namespace lpsets

#endif  // LPSETS_SURD_HPP
