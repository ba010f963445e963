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

#ifndef ZETASUM_RATIONAL_FUNCTION_HPP
#define ZETASUM_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <string>

#include "zetasum/polynomial.hpp"

namespace zetasum {

/**
 * Quotient of two polynomials, kept reduced (numerator and denominator
 * coprime) with a monic denominator. The canonical form makes equality a
 * plain coefficient comparison.
 */
class RationalFunction {
  public:
    /// Zero function.
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction from_polynomial(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial::constant(1));
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// x * d/dx of this function, reduced. One step multiplies the k-th
    /// power-series coefficient by k.
    RationalFunction euler_step() const;

    /// Exact value at a point; throws std::domain_error on a pole.
    Rational eval(const Rational& x) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string to_string(std::string_view var = "x") const;

  private:
    void reduce();

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

} // namespace zetasum

#endif
