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

#ifndef ZETASUM_POLYNOMIAL_HPP
#define ZETASUM_POLYNOMIAL_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zetasum/rational.hpp"

namespace zetasum {

/**
 * Dense univariate polynomial over Rational.
 *
 * Coefficients are stored ascending by power with a nonzero leading
 * coefficient; the zero polynomial is the empty list and has degree -1.
 * Degrees in this project stay below ~130, so dense storage is the right
 * trade.
 */
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(Rational c, std::size_t power);
    /// The identity polynomial x.
    static Polynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k; zero beyond the degree.
    const Rational& coeff(std::size_t k) const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational leading_coefficient() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    /// p(x + c), exact.
    Polynomial shifted(const Rational& c) const;
    /// p(-x): flips the sign of odd coefficients.
    Polynomial reflected() const;

    Polynomial derivative() const;
    /// Exact definite integral over [lo, hi] by the power rule.
    Rational integral(const Rational& lo, const Rational& hi) const;

    /// Integer power, k >= 0.
    Polynomial pow(unsigned k) const;

    /// Euclidean division; denominator must be nonzero. Returns {quotient, remainder}.
    static std::pair<Polynomial, Polynomial> div_mod(const Polynomial& num, const Polynomial& den);

    /// Readable form like "x^2 - 1/2 x + 3", mainly for diagnostics.
    std::string to_string(std::string_view var = "x") const;

  private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Monic gcd over the rationals (Euclidean; primitive integer remainder
/// sequence internally to keep coefficients tame). gcd(0, 0) is 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace zetasum

#endif
