/*
   Copyright 2026 the zetasum authors

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

// Acceptance suite: one line per criterion, each with its tolerance and
// runtime budget pinned in code. Exits nonzero if anything fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "zetasum/bernoulli.hpp"
#include "zetasum/ordering.hpp"
#include "zetasum/rational.hpp"
#include "zetasum/series_catalog.hpp"
#include "zetasum/summation.hpp"
#include "zetasum/verify.hpp"
#include "zetasum/zeta.hpp"

#ifndef ZETASUM_CLI_PATH
#error "ZETASUM_CLI_PATH must point at the CLI binary"
#endif

using namespace zetasum;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %s (%s)\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass)
        ++failures;
}

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", s);
    return buf;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(ZETASUM_CLI_PATH) + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return {-1, {}};
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

// Criterion 1: the eight special values, exactly, in under a second.
void criterion_special_values() {
    Timer timer;
    bool ok = true;
    const std::pair<unsigned, Rational> zeta_expected[] = {
        {0, Rational(-1, 2)}, {1, Rational(-1, 12)}, {2, Rational(0)}, {3, Rational(1, 120)}};
    const std::pair<unsigned, Rational> eta_expected[] = {
        {0, Rational(1, 2)}, {1, Rational(1, 4)}, {2, Rational(0)}, {3, Rational(-1, 8)}};
    for (const auto& [m, expected] : zeta_expected)
        ok = ok && zeta_neg(m).value == expected;
    for (const auto& [m, expected] : eta_expected)
        ok = ok && eta_neg(m).value == expected;
    double s = timer.seconds();
    report("criterion-1 special-value table, exact", ok && s < 1.0,
           "8 values, zero tolerance, " + seconds_text(s) + " of allowed 1s");
}

// Criterion 2: closed form, regularized series, and Euler oracle agree
// for every m in [0, 50], in under 30 seconds.
void criterion_triple_route() {
    Timer timer;
    bool ok = true;
    EulerOracle oracle;
    for (unsigned m = 0; m <= 50; ++m) {
        Polynomial monomial = Polynomial::monomial(1, m);
        ok = ok && zeta_neg(m).value == regularized_series_sum(monomial).rational();
        ok = ok && eta_neg(m).value == regularized_alt_series_sum(monomial).rational();
        ok = ok && eta_neg(m).value == oracle.value();
        if (m < 50)
            oracle.advance();
    }
    // The standalone oracle entry point must match the chain.
    for (unsigned m : {0u, 1u, 5u, 17u, 50u})
        ok = ok && eta_euler_oracle(m) == eta_neg(m).value;
    double s = timer.seconds();
    report("criterion-2 triple-route agreement m in [0,50]", ok && s < 30.0,
           seconds_text(s) + " of allowed 30s");
}

// Criterion 3: eta(-m) - (1 - 2^{1+m}) zeta(-m) = 0 exactly, m in [0,50].
void criterion_functional_relation() {
    bool ok = true;
    for (unsigned m = 0; m <= 50; ++m)
        ok = ok && functional_relation_residual(m).is_zero();
    report("criterion-3 functional relation m in [0,50]", ok, "exact, zero tolerance");
}

// Criterion 4: the arithmetic-progression table plus 100 random rational
// (a1, d) against the generic regularized sums.
void criterion_arithmetic() {
    bool ok = true;
    auto check_row = [&ok](long a1, long d, const Rational& direct, const Rational& alternating) {
        auto v = arithmetic_series_values(Rational(a1), Rational(d));
        ok = ok && v.direct == direct && v.alternating == alternating;
    };
    check_row(1, 0, Rational(-1, 2), Rational(1, 2));
    check_row(1, 1, Rational(-1, 12), Rational(1, 4));
    check_row(1, 2, Rational(1, 3), Rational(0));

    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 24);
    for (int i = 0; i < 100; ++i) {
        Rational a1(num(rng), den(rng));
        Rational d(num(rng), den(rng));
        auto closed = arithmetic_series_values(a1, d);
        Polynomial linear(std::vector<Rational>{a1 - d, d});
        ok = ok && closed.direct == regularized_series_sum(linear).rational();
        ok = ok && closed.alternating == regularized_alt_series_sum(linear).rational();
    }
    report("criterion-4 arithmetic-progression closed forms", ok, "3 tabled + 100 random, exact");
}

// Criterion 5: the four convergent series. Partial-sum tolerances are
// 5e-6 at the stated term counts (1e-12 for the super-exponential series
// 3); residuals below 1e-10 on [1, 200]; the -f(0)/2 value is exact for
// series 1-3 and matches -tan(1/2)/8 for series 4. Under 10 seconds.
void criterion_convergent() {
    Timer timer;
    const auto& catalog = convergent_series();
    const std::int64_t terms[] = {100000, 10000, 30, 100000};
    const double sum_tolerance[] = {5e-6, 5e-6, 1e-12, 5e-6};
    bool ok = true;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const ConvergentSeries& s = catalog[i];
        ConvergenceReport r = verify_convergent_example(s.rf, s.expected, terms[i], s.id);
        ok = ok && r.partial_sum_error < sum_tolerance[i];
        ok = ok && r.max_residual < 1e-10;
        if (s.expected_exact)
            ok = ok && std::get<Rational>(r.halving_value) == *s.expected_exact;
        else
            ok = ok && std::fabs(std::get<double>(r.halving_value) - (-std::tan(0.5) / 8.0)) <= 1e-15;
    }
    double s = timer.seconds();
    report("criterion-5 convergent example series", ok && s < 10.0,
           seconds_text(s) + " of allowed 10s");
}

// Criterion 6: the property suites, under 60 seconds total.
void criterion_properties() {
    Timer timer;
    bool ok = true;
    long checks = 0;
    for (auto suite : {verify::bernoulli_suite, verify::summation_suite, verify::ordering_suite,
                       verify::parser_suite}) {
        auto results = suite();
        checks += static_cast<long>(results.size());
        ok = ok && verify::all_passed(results);
    }
    double s = timer.seconds();
    report("criterion-6 property suites", ok && s < 60.0,
           std::to_string(checks) + " aggregated checks, " + seconds_text(s) + " of allowed 60s");
}

// Criterion 7: `verify all` exits 0 and its report is byte-identical
// across two consecutive runs.
void criterion_verify_determinism() {
    RunResult first = run_cli("verify all");
    RunResult second = run_cli("verify all");
    bool ok = first.exit_code == 0 && second.exit_code == 0 && first.output == second.output &&
              !first.output.empty();
    report("criterion-7 verify-all determinism", ok,
           "exit codes " + std::to_string(first.exit_code) + "/" + std::to_string(second.exit_code) +
               ", outputs " + (first.output == second.output ? "identical" : "differ"));
}

} // namespace

int main() {
    criterion_special_values();
    criterion_triple_route();
    criterion_functional_relation();
    criterion_arithmetic();
    criterion_convergent();
    criterion_properties();
    criterion_verify_determinism();
    if (failures != 0) {
        std::cout << failures << " acceptance criteria failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
