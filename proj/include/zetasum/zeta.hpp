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

#ifndef ZETASUM_ZETA_HPP
#define ZETASUM_ZETA_HPP

#include "zetasum/rational.hpp"
#include "zetasum/rational_function.hpp"

namespace zetasum {

enum class SpecialFunction { zeta, eta };

/// How a special value was computed. All routes must agree exactly; the
/// CLI refuses to print a value whose cross-check failed.
enum class Route { closed_form, regularized_series, euler_oracle };

std::string_view to_string(SpecialFunction f);
std::string_view to_string(Route r);

/// zeta or eta at a non-positive integer argument -m, with provenance.
struct SpecialValue {
    SpecialFunction function;
    long argument; // -m
    Rational value;
    Route route;
};

/// zeta(-m) = -B_{m+1}/(m+1) (B_1 = +1/2 convention).
SpecialValue zeta_neg(unsigned m);

/// eta(-m) = (2^{m+1} - 1) B_{m+1}/(m+1).
SpecialValue eta_neg(unsigned m);

/**
 * Incremental Euler-operator oracle: starts from x/(1+x), whose power
 * series is x - x^2 + x^3 - ..., and each advance() applies x * d/dx,
 * multiplying the k-th series coefficient by k. After m steps the
 * function is finite at x = 1 and value() there is eta(-m), evaluated in
 * exact arithmetic.
 */
class EulerOracle {
  public:
    EulerOracle();

    unsigned order() const { return order_; }
    const RationalFunction& function() const { return fn_; }
    Rational value() const { return fn_.eval(1); }
    void advance();

  private:
    RationalFunction fn_;
    unsigned order_ = 0;
};

/// eta(-m) by m Euler steps from x/(1+x), evaluated at x = 1.
Rational eta_euler_oracle(unsigned m);

/// eta(-m) - (1 - 2^{1+m}) zeta(-m); identically zero.
Rational functional_relation_residual(unsigned m);

} // namespace zetasum

#endif
