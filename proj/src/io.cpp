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

#include "lpsets/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace lpsets::io {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

unsigned parse_unsigned(const std::string& s, const char* what) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

std::string big(const BigInt& x) { return x.str(); }

std::string rational(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Json surd_json(const QuadSurd& x) { return Json{{"exact", x.to_string()}, {"value", x.to_double()}}; }

}  // namespace

LinearizedPoly parse_poly(const FieldPtr& field, std::string_view text, bool allow_invalid) {
    const std::string t = trim(text);
    if (t.rfind("lp:", 0) == 0) {
        std::optional<unsigned> s;
        std::optional<Elem> theta;
        for (const auto& kv : split(std::string_view(t).substr(3), ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("lp shorthand: expected key=value, got '" + kv + "'");
            const std::string key = trim(kv.substr(0, eq)), value = trim(kv.substr(eq + 1));
            if (key == "s") s = parse_unsigned(value, "s");
            else if (key == "theta") theta = field->parse(value);
            else throw std::invalid_argument("lp shorthand: unknown key '" + key + "'");
        }
        if (!s || !theta) throw std::invalid_argument("lp shorthand needs s and theta");
        return lp_poly(field, {*s, *theta}, allow_invalid);
    }
    const auto parts = split(t, ',');
    if (parts.size() != field->n())
        throw std::invalid_argument("polynomial: expected " + std::to_string(field->n()) + " coefficients");
    std::vector<Elem> coeffs;
    for (const auto& p : parts) coeffs.push_back(field->parse(p));
    return LinearizedPoly(field, std::move(coeffs));
}

std::string format_poly(const LinearizedPoly& f) {
    std::string out;
    for (unsigned i = 0; i < f.n(); ++i) {
        if (i) out += ',';
        out += f.field().format(f.coeff(i));
    }
    return out;
}

ProjPoint parse_point(const FieldTower& field, std::string_view text) {
    const std::string t = trim(text);
    if (t.size() < 5 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("point: expected [x:y]");
    const auto parts = split(std::string_view(t).substr(1, t.size() - 2), ':');
    if (parts.size() != 2) throw std::invalid_argument("point: expected [x:y]");
    return ProjPoint::normalize(field, field.parse(parts[0]), field.parse(parts[1]));
}

std::string format_point(const FieldTower& field, const ProjPoint& p) {
    return "[" + field.format(p.x) + ":" + field.format(p.y) + "]";
}

Json map_json(const SemilinearMap& phi) {
    return Json{{"matrix", {phi.a.v, phi.b.v, phi.c.v, phi.d.v}}, {"frobenius", phi.k}};
}

Json linset_json(const LinearSet& set) {
    const FieldTower& F = set.field();
    Json weights = Json::array();
    for (const auto& e : set.entries()) weights.push_back({{"point", format_point(F, e.point)}, {"w", e.weight}});
    return Json{{"rank", set.rank()}, {"size", set.size()}, {"scattered", is_scattered(set)}, {"weights", weights}};
}

Json verdict_json(const EquivVerdict& v) {
    Json j;
    j["equivalent"] = v.equivalent;
    j["case"] = to_string(v.which);
    j["tau_exponent"] = v.tau_exponent ? Json(*v.tau_exponent) : Json(nullptr);
    j["witness"] = v.witness ? map_json(*v.witness) : Json(nullptr);
    if (v.witness_scalar) {
        j["witness_kind"] = v.antidiagonal ? "antidiagonal" : "diagonal";
        j["witness_scalar"] = v.witness_scalar->v;
    }
    j["checked"] = v.checked;
    return j;
}

Json census_json(const CensusReport& rep) {
    Json j;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["lambda"] = big(rep.lambda);
    j["epsilon"] = rational(rep.epsilon);
    Json terms = Json::array();
    for (const auto& t : rep.terms)
        terms.push_back({{"r_prime", t.r_prime},
                         {"F", big(t.f)},
                         {"K", big(t.k)},
                         {"sign", t.divides_r ? "+" : "-"},
                         {"contribution", rational(t.contribution)}});
    j["terms"] = terms;
    j["orbit_total"] = rational(rep.orbit_total);
    if (rep.bounds) {
        j["bounds"] = {{"lower", surd_json(rep.bounds->lower)},
                       {"upper", surd_json(rep.bounds->upper)},
                       {"lower_case", rep.bounds->lower_case},
                       {"upper_case", rep.bounds->upper_case},
                       {"sandwich", rep.sandwich.value_or(false)}};
    } else {
        j["bounds"] = nullptr;
    }
    const auto oracle = rep.oracle_lambda();
    j["oracle_lambda"] = oracle ? Json(big(*oracle)) : Json(nullptr);
    j["orbit_lambda"] = rep.orbit_lambda ? Json(big(*rep.orbit_lambda)) : Json(nullptr);
    j["brute_force_lambda"] = rep.brute_force_lambda ? Json(big(*rep.brute_force_lambda)) : Json(nullptr);
    j["verified"] = rep.verified();
    j["gronwall_ratio"] = rep.gronwall ? Json(*rep.gronwall) : Json(nullptr);
    j["notes"] = rep.notes;
    return j;
}

std::string census_tsv_header() { return "p\tr\tn\tlambda\tepsilon\tlower\tupper\toracle\tverified"; }

std::string census_tsv_row(const CensusReport& rep) {
    std::ostringstream os;
    const auto oracle = rep.oracle_lambda();
    os << rep.p << '\t' << rep.r << '\t' << rep.n << '\t' << rep.lambda << '\t' << rep.epsilon << '\t'
       << (rep.bounds ? rep.bounds->lower.to_string() : "-") << '\t'
       << (rep.bounds ? rep.bounds->upper.to_string() : "-") << '\t' << (oracle ? big(*oracle) : "-") << '\t'
       << (oracle ? (rep.verified() ? "true" : "false") : "-");
    return os.str();
}

}  // namespace lpsets::io
