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

#ifndef ZETASUM_BERNOULLI_HPP
#define ZETASUM_BERNOULLI_HPP

#include <cstdint>
#include <utility>

#include "zetasum/polynomial.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

/// Exact binomial coefficient via Pascal's rule (memoized rows).
mpz_class binomial(unsigned n, unsigned k);

/**
 * Bernoulli number B_k under the B_1 = +1/2 convention.
 *
 * The table is computed by the classical recurrence (which produces -1/2
 * at index 1) and the index-1 entry is negated afterwards; odd entries
 * >= 3 are zero, so nothing else is affected. Memoized behind a lock and
 * grown monotonically.
 */
Rational bernoulli_number(unsigned k);

/**
 * The power-sum polynomial: the unique polynomial P with
 * P(n) = 1^k + 2^k + ... + n^k for every positive integer n.
 * Satisfies P(n) - P(n-1) = n^k and P(0) = 0.
 */
Polynomial power_sum_poly(unsigned k);

/**
 * Alternating power sum 1^{k-1} - 2^{k-1} + ... +- n^{k-1}, k >= 1 and
 * n >= 1, computed through the Bernoulli closed form rather than term by
 * term.
 */
Rational alternating_power_sum(unsigned k, std::uint64_t n);

/**
 * The two polynomial branches of the alternating power sum of exponent
 * k-1: `first` agrees with it at even n, `second` at odd n. They are the
 * closed form with the sign term pinned to +1 and -1 respectively.
 */
std::pair<Polynomial, Polynomial> parity_branch_polys(unsigned k);

} // namespace zetasum

#endif
