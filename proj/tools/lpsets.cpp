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

// Command-line front end: linset, equiv, aut, census, verify.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lpsets/census.hpp"
#include "lpsets/equiv.hpp"
#include "lpsets/io.hpp"
#include "lpsets/linpoly.hpp"
#include "lpsets/linset.hpp"
#include "lpsets/numtheory.hpp"
#include "lpsets/verify.hpp"

namespace {

using namespace lpsets;
using io::Json;

struct RunConfig {
    std::uint64_t p = 3;
    unsigned r = 1;
    unsigned n = 3;
    std::string modulus;
    std::uint64_t ceiling = 4096;
    std::uint64_t orbit_ceiling = std::uint64_t{1} << 20;
    std::string format;
    unsigned workers = 1;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool field_flags) {
    if (field_flags) {
        cmd->add_option("--p", cfg.p, "characteristic")->check(CLI::PositiveNumber);
        cmd->add_option("--r", cfg.r, "q = p^r")->check(CLI::PositiveNumber);
        cmd->add_option("--n", cfg.n, "extension degree over F_q")->check(CLI::PositiveNumber);
        cmd->add_option("--modulus", cfg.modulus, "defining polynomial c0,...,c_{rn} (monic, irreducible)");
    }
    cmd->add_option("--ceiling", cfg.ceiling, "largest p^{rn} for PGammaL scans")->check(CLI::PositiveNumber);
    cmd->add_option("--orbit-ceiling", cfg.orbit_ceiling, "largest p^{wr} for the orbit oracle")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "seed for sampled checks");
}

FieldPtr make_field(const RunConfig& cfg) {
    std::optional<std::vector<std::uint64_t>> modulus;
    if (!cfg.modulus.empty()) {
        std::vector<std::uint64_t> c;
        std::stringstream ss(cfg.modulus);
        for (std::string item; std::getline(ss, item, ',');) c.push_back(std::stoull(item));
        modulus = c;
    }
    return FieldTower::build(cfg.p, cfg.r, cfg.n, modulus);
}

BruteForceOptions brute(const RunConfig& cfg) { return {cfg.ceiling, cfg.workers}; }

Json params_json(const FieldTower& F, const LPParams& pr) { return Json{{"s", pr.s}, {"theta", F.format(pr.theta)}}; }

/// "3", "2,3,5" or "2..7".
std::vector<std::uint64_t> parse_range(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoull(item));
            continue;
        }
        const std::uint64_t lo = std::stoull(item.substr(0, dots)), hi = std::stoull(item.substr(dots + 2));
        for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

int cmd_linset(const RunConfig& cfg, unsigned s, const std::string& theta_text, bool allow_invalid) {
    const FieldPtr field = make_field(cfg);
    const FieldTower& F = *field;
    const LPParams pr{s, F.parse(theta_text)};
    if (!allow_invalid && !lp_valid(F, pr))
        throw std::invalid_argument("N(theta) is 0 or 1; pass --allow-invalid to build it anyway");
    const LinearSet L = points_of(lp_poly(field, pr, allow_invalid));
    std::map<unsigned, std::uint64_t> dist;
    for (const auto& e : L.entries()) ++dist[e.weight];
    const bool within = L.size() <= L.size_bound();
    const bool scattered = is_scattered(L);

    if (cfg.format == "tsv") {
        std::cout << "size\tscattered\tbound\tbound_status\tweights\n";
        std::cout << L.size() << '\t' << (scattered ? "true" : "false") << '\t' << L.size_bound() << '\t'
                  << (!within ? "violated" : (L.size() == L.size_bound() ? "equal" : "strict")) << '\t';
        bool first = true;
        for (auto [w, c] : dist) std::cout << (first ? "" : ",") << w << ':' << c, first = false;
        std::cout << '\n';
        return within ? 0 : 1;
    }
    Json j = io::linset_json(L);
    Json wd = Json::object();
    for (auto [w, c] : dist) wd[std::to_string(w)] = c;
    Json out{{"params", params_json(F, pr)},
             {"valid", lp_valid(F, pr)},
             {"family", pr.theta.v == 0 ? "pseudoregulus" : "lp"},
             {"bound", L.size_bound()},
             {"bound_status", !within ? "violated" : (L.size() == L.size_bound() ? "equal" : "strict")},
             {"weight_distribution", wd}};
    out.update(j);
    std::cout << out.dump(2) << '\n';
    return within ? 0 : 1;
}

int cmd_equiv(const RunConfig& cfg, unsigned s, const std::string& theta_text, unsigned t,
              const std::string& delta_text, bool with_brute) {
    const FieldPtr field = make_field(cfg);
    const FieldTower& F = *field;
    const LPParams f = normalize_s(F, {s, F.parse(theta_text)});
    const LPParams g = normalize_s(F, {t, F.parse(delta_text)});
    const EquivVerdict v = lp_equivalent(field, f, g);
    Json out = io::verdict_json(v);
    bool ok = !v.equivalent || v.checked;
    if (with_brute) {
        const auto w = find_equivalence(points_of(lp_poly(field, f)), points_of(lp_poly(field, g)), brute(cfg));
        const bool agree = w.has_value() == v.equivalent;
        out = Json{{"f", params_json(F, f)},
                   {"g", params_json(F, g)},
                   {"closed_form", out},
                   {"brute_force", {{"equivalent", w.has_value()}, {"witness", w ? io::map_json(*w) : Json(nullptr)}}},
                   {"agreement", agree}};
        ok = ok && agree;
    } else {
        out["f"] = params_json(F, f);
        out["g"] = params_json(F, g);
    }
    if (F.n() == 3) out["flags"] = Json::array({"n=3"});
    std::cout << out.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_aut(const RunConfig& cfg, unsigned s, const std::string& theta_text, bool with_brute) {
    const FieldPtr field = make_field(cfg);
    const FieldTower& F = *field;
    const LPParams pr = normalize_s(F, {s, F.parse(theta_text)});
    const AutGroup A = automorphisms(field, pr);
    std::optional<std::vector<SemilinearMap>> B;
    if (with_brute) B = brute_force_stabilizer(lp_poly(field, pr), brute(cfg));
    const bool ok = A.size_matches_formula && A.not_stabilizing.empty() && (!B || *B == A.elements);

    if (cfg.format == "tsv") {
        std::cout << "size\tn_tau\tpredicted\td_part\tc_part\tnot_stabilizing\tbrute_force_size\tagreement\n";
        std::cout << A.elements.size() << '\t' << A.n_tau << '\t' << A.predicted_size << '\t' << A.d_part.size() << '\t'
                  << A.c_part.size() << '\t' << A.not_stabilizing.size() << '\t'
                  << (B ? std::to_string(B->size()) : "-") << '\t'
                  << (B ? (*B == A.elements ? "true" : "false") : "-") << '\n';
        return ok ? 0 : 1;
    }
    Json elems = Json::array();
    for (const auto& phi : A.elements) elems.push_back(io::map_json(phi));
    Json out{{"params", params_json(F, pr)},
             {"size", A.elements.size()},
             {"n_tau", A.n_tau},
             {"predicted_size", A.predicted_size},
             {"size_matches_formula", A.size_matches_formula},
             {"d_part", A.d_part.size()},
             {"c_part", A.c_part.size()},
             {"not_stabilizing", A.not_stabilizing.size()},
             {"elements", elems}};
    if (B) out["brute_force"] = {{"size", B->size()}, {"equal", *B == A.elements}};
    if (F.n() == 3) out["flags"] = Json::array({"n=3"});
    std::cout << out.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_census(const RunConfig& cfg, const std::string& ps, const std::string& rs, const std::string& ns,
               bool with_brute) {
    CensusOptions opts;
    opts.orbit_ceiling = cfg.orbit_ceiling;
    opts.brute_force = with_brute;
    opts.brute = brute(cfg);
    std::vector<CensusReport> rows;
    for (auto p : parse_range(ps)) {
        if (!is_prime(p)) continue;
        for (auto r : parse_range(rs)) {
            if (p == 2 && r == 1) continue;
            for (auto n : parse_range(ns)) {
                if (n < 3) continue;
                rows.push_back(census_cell(p, static_cast<unsigned>(r), static_cast<unsigned>(n), opts));
            }
        }
    }
    bool ok = true;
    for (const auto& rep : rows) ok = ok && (!rep.oracle_lambda() || rep.verified()) && rep.sandwich.value_or(true);
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& rep : rows) arr.push_back(io::census_json(rep));
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << io::census_tsv_header() << "\tnotes\n";
        for (const auto& rep : rows) {
            std::string notes;
            for (const auto& n : rep.notes) notes += (notes.empty() ? "" : "; ") + n;
            std::cout << io::census_tsv_row(rep) << '\t' << (notes.empty() ? "-" : notes) << '\n';
        }
    }
    return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool progress) {
    VerifyConfig vc;
    vc.workers = cfg.workers;
    vc.seed = cfg.seed;
    vc.ceiling = cfg.ceiling;
    vc.orbit_ceiling = cfg.orbit_ceiling;
    if (progress) vc.log = &std::cerr;
    std::uint64_t failures = 0;
    for (const auto& res : run_suite(suite, vc)) {
        std::cout << "suite " << res.name << ": " << res.checks << " checks, " << res.failures << " failures\n";
        for (const auto& line : res.info) std::cout << "  " << line << '\n';
        for (const auto& line : res.failure_messages) std::cout << "  FAIL " << line << '\n';
        failures += res.failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP scattered linear sets on PG(1,q^n)"};
    app.require_subcommand(1);
    RunConfig cfg;
    unsigned s = 1, t = 1;
    std::string theta = "g^1", delta = "g^1";
    bool allow_invalid = false, with_brute = false, progress = false;
    std::string ps = "3", rs = "1", ns = "3", suite = "all";

    auto* linset = app.add_subcommand("linset", "point set, weights and scatteredness of L_f");
    add_common(linset, cfg, true);
    linset->add_option("--s", s, "f = X^{q^s} + theta X^{q^{n-s}}");
    linset->add_option("--theta", theta, "decimal encoding or g^k");
    linset->add_flag("--allow-invalid", allow_invalid, "accept N(theta) in {0, 1}");

    auto* equiv = app.add_subcommand("equiv", "decide whether two LP sets are PGammaL-equivalent");
    add_common(equiv, cfg, true);
    equiv->add_option("--s", s);
    equiv->add_option("--theta", theta);
    equiv->add_option("--t", t);
    equiv->add_option("--delta", delta);
    equiv->add_flag("--brute-force", with_brute, "cross-check by exhaustive search");

    auto* aut = app.add_subcommand("aut", "automorphism group of an LP set");
    add_common(aut, cfg, true);
    aut->add_option("--s", s);
    aut->add_option("--theta", theta);
    aut->add_flag("--brute-force", with_brute, "compare with the exhaustive stabilizer");

    auto* census = app.add_subcommand("census", "count inequivalent LP sets over a grid");
    add_common(census, cfg, false);
    census->add_option("--p", ps, "primes: 3, 2,3,5 or 2..7");
    census->add_option("--r", rs, "r values, same syntax");
    census->add_option("--n", ns, "n values, same syntax");
    census->add_flag("--brute-force", with_brute, "also partition all LP sets under PGammaL");

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    add_common(verify, cfg, false);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suites));
    verify->add_flag("--progress", progress, "print per-cell lines to stderr as they finish");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*linset) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_linset(cfg, s, theta, allow_invalid);
        }
        if (*equiv) return cmd_equiv(cfg, s, theta, t, delta, with_brute);
        if (*aut) {
            if (cfg.format.empty()) cfg.format = "json";
            return cmd_aut(cfg, s, theta, with_brute);
        }
        if (*census) {
            if (cfg.format.empty()) cfg.format = "tsv";
            return cmd_census(cfg, ps, rs, ns, with_brute);
        }
        if (*verify) return cmd_verify(cfg, suite, progress);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
