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

#ifndef ZETASUM_SERIES_CATALOG_HPP
#define ZETASUM_SERIES_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "zetasum/rational.hpp"
#include "zetasum/summation.hpp"

namespace zetasum {

/**
 * A convergent series with a known generating function and closed value,
 * used by the verification suites. Series 1-3 have exact rational
 * evaluators alongside the numeric ones; series 4 is trigonometric and
 * numeric-only.
 */
struct ConvergentSeries {
    std::string id;
    std::string term_formula;       // f(u), in the CLI expression grammar
    std::string generating_formula; // F(n)
    RegularFunction rf;
    double expected;
    std::optional<Rational> expected_exact;
    std::int64_t default_terms;
};

/// The four built-in convergent examples.
const std::vector<ConvergentSeries>& convergent_series();

} // namespace zetasum

#endif
