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

#include "lpsets/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lpsets/numtheory.hpp"

namespace lpsets {

namespace {

int rsign(const Rational& x) { return x.sign(); }

}  // namespace

QuadSurd::QuadSurd(std::uint64_t p, Rational a, Rational b) : p_(p), a_(std::move(a)), b_(std::move(b)) {
    if (!is_prime(p)) throw std::invalid_argument("QuadSurd: radicand must be prime");
}

QuadSurd QuadSurd::half_power(std::uint64_t p, std::int64_t h) {
    const std::int64_t whole = h >= 0 ? h / 2 : -((-h + 1) / 2);  // floor(h/2)
    const bool odd = (h - 2 * whole) != 0;
    BigInt base = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(whole >= 0 ? whole : -whole));
    Rational mag = whole >= 0 ? Rational(base) : Rational(BigInt(1), base);
    return odd ? QuadSurd(p, 0, mag) : QuadSurd(p, mag, 0);
}

void QuadSurd::check(const QuadSurd& o) const {
    if (o.p_ != p_) throw std::invalid_argument("QuadSurd: mixed radicands");
}

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
    check(o);
    return QuadSurd(p_, a_ + o.a_, b_ + o.b_);
}

QuadSurd QuadSurd::operator-(const QuadSurd& o) const {
    check(o);
    return QuadSurd(p_, a_ - o.a_, b_ - o.b_);
}

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
    check(o);
    return QuadSurd(p_, a_ * o.a_ + b_ * o.b_ * Rational(p_), a_ * o.b_ + b_ * o.a_);
}

QuadSurd QuadSurd::operator*(const Rational& k) const { return QuadSurd(p_, a_ * k, b_ * k); }
QuadSurd QuadSurd::operator+(const Rational& k) const { return QuadSurd(p_, a_ + k, b_); }
QuadSurd QuadSurd::operator-(const Rational& k) const { return QuadSurd(p_, a_ - k, b_); }

int QuadSurd::sign() const {
    const int sa = rsign(a_), sb = rsign(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a² and b²p wins; they never tie since √p is irrational.
    const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(p_);
    return lhs > rhs ? sa : sb;
}

double QuadSurd::to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(p_));
}

std::string QuadSurd::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
        return os.str();
    }
    if (a_ != 0) os << a_ << (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) os << "-";
    const Rational mag = b_ > 0 ? b_ : Rational(-b_);
    if (mag != 1) os << mag << "*";
    os << "sqrt(" << p_ << ")";
    return os.str();
}

int compare(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign(); }

}  // namespace lpsets
