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

#ifndef ZETASUM_VERIFY_HPP
#define ZETASUM_VERIFY_HPP

#include <string>
#include <vector>

namespace zetasum::verify {

/*
 * The verification matrix behind `zetasum verify`. Every suite is
 * deterministic: randomized checks use fixed seeds, and results carry no
 * timing or addresses, so the printed report is byte-identical across
 * runs.
 */

struct CheckResult {
    std::string name; // unique; reports are sorted by it
    bool pass = false;
    std::string expected;
    std::string got;
};

/// The eight special values zeta(0..-3), eta(0..-3) against their known
/// exact values.
std::vector<CheckResult> special_values_suite();

/// The four built-in convergent series: partial sums, generating-function
/// residuals, and the even-function value.
std::vector<CheckResult> convergent_suite();

/// Closed form vs regularized series vs Euler-operator oracle for every
/// m in [0, max_m].
std::vector<CheckResult> triple_route_suite(unsigned max_m = 50);

/// eta(-m) - (1 - 2^{m+1}) zeta(-m) == 0 for every m in [0, max_m].
std::vector<CheckResult> functional_relation_suite(unsigned max_m = 50);

/// Arithmetic-progression closed forms: the three tabled cases and random
/// rational (a1, d) against the generic regularized sums.
std::vector<CheckResult> arithmetic_suite();

/// Power-sum and Bernoulli identities (difference identity, brute-force
/// agreement, reflection, odd vanishing, alternating closed form).
std::vector<CheckResult> bernoulli_suite();

/// Generalized-sum identities on random inputs (telescoping, mirror,
/// full circle, linearity) plus the monomial and even-power families.
std::vector<CheckResult> summation_suite();

/// Precedence-order axioms, interval splitting, and full-circle membership.
std::vector<CheckResult> ordering_suite();

/// Parser round-trip, precedence pins, and polynomial extraction.
std::vector<CheckResult> parser_suite();

/// Everything above, sorted by check name.
std::vector<CheckResult> all_suites();

/// One "PASS/FAIL name: expected ... got ..." line per check plus a
/// summary line; the exact text is pinned by golden tests.
std::string render_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace zetasum::verify

#endif
