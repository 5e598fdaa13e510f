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


// One PASS/FAIL line per acceptance criterion. With arguments, only the listed criteria run.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "lpsets/verify.hpp"

using namespace lpsets;

namespace {

struct Criterion {
    std::string title;
    std::function<SuiteResult(const VerifyConfig&)> run;
};

std::map<int, Criterion> criteria() {
    std::map<int, Criterion> c;
    c[1] = {"adjoint identity, all fields p^{rn} <= 2^12, 200 polynomials each",
            [](const VerifyConfig& cfg) { return verify_adjoint(cfg, fields_up_to(4096, 1, 12, true), 200); }};
    c[2] = {"norm-power coefficient at (q,n) in {(3,3),(4,3),(5,3),(3,4)}", [](const VerifyConfig& cfg) {
                return verify_normpower(cfg, {{3, 1, 3}, {2, 2, 3}, {5, 1, 3}, {3, 1, 4}});
            }};
    c[3] = {"equivalence agrees with PGammaL search, (3,3) unbucketed, (4,3) (5,3) (3,4) bucketed",
            [](const VerifyConfig& cfg) {
                return verify_equiv(cfg, {{3, 1, 3}}, {{2, 2, 3}, {5, 1, 3}, {3, 1, 4}});
            }};
    c[4] = {"automorphism group equals stabilizer and size formula, all valid theta at (3,3) (4,3) (3,4)",
            [](const VerifyConfig& cfg) { return verify_aut(cfg, {{3, 1, 3}, {2, 2, 3}, {3, 1, 4}}, {}, 0); }};
    c[5] = {"census closed form = orbit oracle (p^{wr} <= 2^16, n <= 12) = PGammaL partition",
            [](const VerifyConfig& cfg) {
                return verify_census(cfg, 1 << 16,
                                     {{2, 2, 3}, {3, 1, 4}, {5, 1, 3}, {2, 2, 4}, {3, 1, 3}, {3, 1, 5}, {7, 1, 3},
                                      {2, 3, 3}, {3, 2, 3}, {11, 1, 3}, {13, 1, 3}, {2, 4, 3}});
            }};
    c[6] = {"strict bound sandwich, p in {2,3,5,7}, 2 <= r <= 10, n in {3,4,5,6}",
            [](const VerifyConfig& cfg) { return verify_bounds(cfg); }};
    c[7] = {"F and K sizes against enumeration, p^m <= 2^16",
            [](const VerifyConfig& cfg) { return verify_fk(cfg, 1 << 16); }};
    c[8] = {"d-solution counts {1, 2, q+1} at delta = theta, p^{rn} <= 2^12",
            [](const VerifyConfig& cfg) { return verify_dcounts(cfg, 4096); }};
    c[9] = {"n = 4 cross map over F_81; no cross witness at (2,5) and (3,5) on 50 sampled pairs",
            [](const VerifyConfig& cfg) { return verify_cross(cfg, {{3, 1, 4}}, {{2, 1, 5}, {3, 1, 5}}, 50); }};
    c[10] = {"valid theta scattered of full size, N(theta) = 1 not scattered, p^{rn} <= 2^12",
             [](const VerifyConfig& cfg) { return verify_scattered(cfg, fields_up_to(4096, 3, 12, true)); }};
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const auto all = criteria();
    std::vector<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.push_back(std::atoi(argv[i]));
    if (chosen.empty())
        for (const auto& [k, v] : all) chosen.push_back(k);

    VerifyConfig cfg;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    cfg.seed = 1;

    int failed = 0;
    for (int k : chosen) {
        const auto it = all.find(k);
        if (it == all.end()) {
            std::cerr << "unknown criterion " << k << "\n";
            return 2;
        }
        const auto start = std::chrono::steady_clock::now();
        const SuiteResult res = it->second.run(cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = res.passed();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << it->second.title << " ("
                  << res.checks << " checks, " << res.failures << " failures, " << static_cast<int>(secs) << "s)\n";
        for (const auto& line : res.info) std::cout << "    " << line << "\n";
        for (const auto& line : res.failure_messages) std::cout << "    " << line << "\n";
        std::cout.flush();
    }
    return failed == 0 ? 0 : 1;
}
