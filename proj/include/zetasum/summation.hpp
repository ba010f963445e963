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

#ifndef ZETASUM_SUMMATION_HPP
#define ZETASUM_SUMMATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "zetasum/polynomial.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

enum class Parity { even, odd, none };

enum class SumMode { convergent, regularized };

/// Which identity produced a value; carried through to output so
/// convergent and regularized semantics never mix silently.
enum class Derivation {
    telescoped,
    full_circle,
    polynomial_limit,
    parity_split,
    power_sum_limit,
    alternating_power_sum_limit,
    even_halving,
    arithmetic_progression,
    closed_form,
    euler_operator,
};

std::string_view to_string(SumMode m);
std::string_view to_string(Derivation d);

/**
 * An integer function f together with a generating function F satisfying
 * F(n+1) - F(n) = f(n).
 *
 * Two evaluation profiles: exact (rational-valued, present whenever the
 * closed forms allow it, always for polynomial f) and numeric (doubles,
 * for transcendental f). Any evaluator may be absent; operations throw
 * when the profile they need is missing. Evaluators must be pure.
 */
struct RegularFunction {
    Parity parity = Parity::none;
    /// Exact polynomial form of f, when f is a polynomial.
    std::optional<Polynomial> poly;
    /// Exact polynomial antidifference, when poly is set.
    std::optional<Polynomial> anti_poly;
    std::function<Rational(std::int64_t)> f_exact;
    std::function<Rational(std::int64_t)> F_exact;
    std::function<double(double)> f_numeric;
    std::function<double(double)> F_numeric;

    /// Builds both profiles from a polynomial; the antidifference comes
    /// from power-sum polynomials, and parity is read off the coefficients.
    static RegularFunction from_polynomial(Polynomial f);

    static RegularFunction from_numeric(std::function<double(double)> f,
                                        std::function<double(double)> F,
                                        Parity parity = Parity::none);

    bool has_exact() const { return static_cast<bool>(F_exact); }
};

/// A summation result with provenance: exact or numeric value, whether
/// the defining series converges classically, and the identity used.
class RegularizedValue {
  public:
    RegularizedValue(Rational value, SumMode mode, Derivation derivation)
        : value_(std::move(value)), mode_(mode), derivation_(derivation) {}
    RegularizedValue(double value, SumMode mode, Derivation derivation)
        : value_(value), mode_(mode), derivation_(derivation) {}

    bool exact() const { return std::holds_alternative<Rational>(value_); }
    /// Throws std::domain_error when the value is numeric-only.
    const Rational& rational() const;
    double numeric() const;

    SumMode mode() const { return mode_; }
    Derivation derivation() const { return derivation_; }

  private:
    std::variant<Rational, double> value_;
    SumMode mode_;
    Derivation derivation_;
};

/**
 * The generalized sum of f over Z_{a,b}: F(b+1) - F(a) with the plain
 * integer successor b+1. For a forward interval this telescopes to the
 * literal sum; for a wraparound interval it equals minus the sum over the
 * complementary gap. Exact when the exact profile is present.
 */
RegularizedValue generalized_sum(const RegularFunction& rf, std::int64_t a, std::int64_t b);

/// Sum over all of Z starting anywhere: F(a) - F(a), identically zero.
RegularizedValue sum_over_Z(const RegularFunction& rf, std::int64_t a);

/// Regularized limit of a polynomial sequence p(n): the exact integral
/// of p over [-1, 0].
Rational regularized_limit(const Polynomial& p);

/// Regularized limit of (-1)^n p(n): zero for every polynomial p.
Rational alternating_sign_limit(const Polynomial& p);

/**
 * Limit of a sequence that follows `alpha` at even n and `beta` at odd n:
 * half the limit of alpha + beta (the alternating-sign difference term
 * contributes nothing).
 */
Rational parity_split_limit(const Polynomial& alpha, const Polynomial& beta);

/// Regularized value of sum_{u=1}^inf f(u) for polynomial f, via the
/// partial-sum polynomial.
RegularizedValue regularized_series_sum(const Polynomial& f);

/// Regularized value of sum_{u=1}^inf (-1)^{u-1} f(u) for polynomial f,
/// via the parity branches of the alternating partial sums.
RegularizedValue regularized_alt_series_sum(const Polynomial& f);

/// For even f: sum_{u=1}^inf f(u) = -f(0)/2, whether or not the series
/// converges. Throws std::invalid_argument unless rf.parity == even.
RegularizedValue even_regular_sum(const RegularFunction& rf, SumMode mode = SumMode::regularized);

/// Closed-form values for the arithmetic progression a_u = a1 + (u-1) d.
struct ArithmeticSeriesValues {
    Rational direct;      // (5d - 6 a1)/12
    Rational alternating; // (2 a1 - d)/4
    /// d < 0 is accepted and computed from the same closed forms, but is
    /// outside the stated hypothesis d >= 0 of their derivation.
    bool negative_difference = false;
};

ArithmeticSeriesValues arithmetic_series_values(const Rational& a1, const Rational& d);

/// Largest |F(n+1) - F(n) - f(n)| over integer n in [lo, hi], numeric profile.
double max_antidifference_residual(const RegularFunction& rf, std::int64_t lo, std::int64_t hi);

/// Same check in exact arithmetic; requires the exact profile.
Rational max_exact_antidifference_residual(const RegularFunction& rf, std::int64_t lo, std::int64_t hi);

/**
 * Three-part verification of a convergent example: direct partial sum vs
 * the expected value, the antidifference residual of F over a fixed
 * window, and the even-function value -f(0)/2.
 */
struct ConvergenceReport {
    std::string name;
    std::int64_t n_terms = 0;
    double expected = 0.0;
    double partial_sum = 0.0;
    double partial_sum_error = 0.0;
    std::int64_t window_lo = 1;
    std::int64_t window_hi = 200;
    double max_residual = 0.0;
    /// -f(0)/2; exact when the exact profile can evaluate at zero.
    std::variant<Rational, double> halving_value;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

ConvergenceReport verify_convergent_example(const RegularFunction& rf, double expected,
                                            std::int64_t n_terms, std::string name = {});

} // namespace zetasum

#endif
