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

#include "zetasum/summation.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "zetasum/bernoulli.hpp"
#include "zetasum/ordering.hpp"

namespace zetasum {

std::string_view to_string(SumMode m) {
    return m == SumMode::convergent ? "convergent" : "regularized";
}

std::string_view to_string(Derivation d) {
    switch (d) {
    case Derivation::telescoped: return "telescoped";
    case Derivation::full_circle: return "full_circle";
    case Derivation::polynomial_limit: return "polynomial_limit";
    case Derivation::parity_split: return "parity_split";
    case Derivation::power_sum_limit: return "power_sum_limit";
    case Derivation::alternating_power_sum_limit: return "alternating_power_sum_limit";
    case Derivation::even_halving: return "even_halving";
    case Derivation::arithmetic_progression: return "arithmetic_progression";
    case Derivation::closed_form: return "closed_form";
    case Derivation::euler_operator: return "euler_operator";
    }
    return "unknown";
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Parity polynomial_parity(const Polynomial& p) {
    bool even_ok = true;
    bool odd_ok = !p.is_zero();
    auto cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i % 2 == 1 && !cs[i].is_zero())
            even_ok = false;
        if (i % 2 == 0 && !cs[i].is_zero())
            odd_ok = false;
    }
    return even_ok ? Parity::even : odd_ok ? Parity::odd : Parity::none;
}

} // namespace

RegularFunction RegularFunction::from_polynomial(Polynomial f) {
    RegularFunction rf;
    // Antidifference: sum the power-sum polynomials of each monomial,
    // shifted so that F(n+1) - F(n) = f(n).
    Polynomial partial_sum;
    auto cs = f.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero())
            partial_sum = partial_sum + cs[k] * power_sum_poly(static_cast<unsigned>(k));
    Polynomial anti = partial_sum.shifted(-1);

    rf.parity = polynomial_parity(f);
    rf.poly = f;
    rf.anti_poly = anti;
    rf.f_exact = [f](std::int64_t u) { return f.eval(Rational(static_cast<long>(u))); };
    rf.F_exact = [anti](std::int64_t n) { return anti.eval(Rational(static_cast<long>(n))); };
    rf.f_numeric = [f](double x) { return f.eval_double(x); };
    rf.F_numeric = [anti](double x) { return anti.eval_double(x); };
    return rf;
}

RegularFunction RegularFunction::from_numeric(std::function<double(double)> f,
                                              std::function<double(double)> F, Parity parity) {
    RegularFunction rf;
    rf.parity = parity;
    rf.f_numeric = std::move(f);
    rf.F_numeric = std::move(F);
    return rf;
}

const Rational& RegularizedValue::rational() const {
    if (!exact())
        throw std::domain_error("RegularizedValue: numeric value has no exact form");
    return std::get<Rational>(value_);
}

double RegularizedValue::numeric() const {
    return exact() ? std::get<Rational>(value_).to_double() : std::get<double>(value_);
}

RegularizedValue generalized_sum(const RegularFunction& rf, std::int64_t a, std::int64_t b) {
    // Finite forward arcs are literal sums; everything else is defined
    // only through the summation method.
    SumMode mode = interval(a, b).finite() ? SumMode::convergent : SumMode::regularized;
    if (rf.F_exact)
        return {rf.F_exact(b + 1) - rf.F_exact(a), mode, Derivation::telescoped};
    if (rf.F_numeric) {
        double v = rf.F_numeric(static_cast<double>(b) + 1.0) - rf.F_numeric(static_cast<double>(a));
        if (!std::isfinite(v))
            throw std::domain_error("generalized_sum: generating function not evaluable at the endpoints");
        return {v, mode, Derivation::telescoped};
    }
    throw std::domain_error("generalized_sum: no generating-function evaluator");
}

RegularizedValue sum_over_Z(const RegularFunction& rf, std::int64_t a) {
    if (rf.F_exact)
        return {rf.F_exact(a) - rf.F_exact(a), SumMode::regularized, Derivation::full_circle};
    if (rf.F_numeric) {
        double v = rf.F_numeric(static_cast<double>(a)) - rf.F_numeric(static_cast<double>(a));
        if (!std::isfinite(v))
            throw std::domain_error("sum_over_Z: generating function not evaluable");
        return {v, SumMode::regularized, Derivation::full_circle};
    }
    throw std::domain_error("sum_over_Z: no generating-function evaluator");
}

Rational regularized_limit(const Polynomial& p) {
    return p.integral(-1, 0);
}

Rational alternating_sign_limit(const Polynomial&) {
    return 0;
}

Rational parity_split_limit(const Polynomial& alpha, const Polynomial& beta) {
    const Rational half(1, 2);
    return half * regularized_limit(alpha + beta) + half * alternating_sign_limit(alpha - beta);
}

RegularizedValue regularized_series_sum(const Polynomial& f) {
    Polynomial partial_sum;
    auto cs = f.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero())
            partial_sum = partial_sum + cs[k] * power_sum_poly(static_cast<unsigned>(k));
    return {regularized_limit(partial_sum), SumMode::regularized, Derivation::power_sum_limit};
}

RegularizedValue regularized_alt_series_sum(const Polynomial& f) {
    Polynomial alpha;
    Polynomial beta;
    auto cs = f.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero())
            continue;
        auto [even_branch, odd_branch] = parity_branch_polys(static_cast<unsigned>(k) + 1);
        alpha = alpha + cs[k] * even_branch;
        beta = beta + cs[k] * odd_branch;
    }
    return {parity_split_limit(alpha, beta), SumMode::regularized, Derivation::alternating_power_sum_limit};
}

RegularizedValue even_regular_sum(const RegularFunction& rf, SumMode mode) {
    if (rf.parity != Parity::even)
        throw std::invalid_argument("even_regular_sum: function is not tagged even");
    if (rf.f_exact)
        return {Rational(-1, 2) * rf.f_exact(0), mode, Derivation::even_halving};
    if (rf.f_numeric) {
        double f0 = rf.f_numeric(0.0);
        if (!std::isfinite(f0))
            throw std::domain_error("even_regular_sum: f not evaluable at 0");
        return {-f0 / 2.0, mode, Derivation::even_halving};
    }
    throw std::domain_error("even_regular_sum: no evaluator for f");
}

ArithmeticSeriesValues arithmetic_series_values(const Rational& a1, const Rational& d) {
    ArithmeticSeriesValues out;
    out.direct = (Rational(5) * d - Rational(6) * a1) / Rational(12);
    out.alternating = (Rational(2) * a1 - d) / Rational(4);
    out.negative_difference = d.sign() < 0;
    return out;
}

double max_antidifference_residual(const RegularFunction& rf, std::int64_t lo, std::int64_t hi) {
    if (!rf.f_numeric || !rf.F_numeric)
        throw std::domain_error("max_antidifference_residual: numeric profile missing");
    double worst = 0.0;
    for (std::int64_t n = lo; n <= hi; ++n) {
        double x = static_cast<double>(n);
        double r = std::fabs(rf.F_numeric(x + 1.0) - rf.F_numeric(x) - rf.f_numeric(x));
        if (!std::isfinite(r))
            throw std::domain_error("max_antidifference_residual: evaluation failed at n = " + std::to_string(n));
        worst = std::max(worst, r);
    }
    return worst;
}

Rational max_exact_antidifference_residual(const RegularFunction& rf, std::int64_t lo, std::int64_t hi) {
    if (!rf.f_exact || !rf.F_exact)
        throw std::domain_error("max_exact_antidifference_residual: exact profile missing");
    Rational worst = 0;
    for (std::int64_t n = lo; n <= hi; ++n) {
        Rational r = (rf.F_exact(n + 1) - rf.F_exact(n) - rf.f_exact(n)).abs();
        worst = std::max(worst, r);
    }
    return worst;
}

ConvergenceReport verify_convergent_example(const RegularFunction& rf, double expected,
                                            std::int64_t n_terms, std::string name) {
    if (!rf.f_numeric || !rf.F_numeric)
        throw std::domain_error("verify_convergent_example: numeric profile missing");
    if (n_terms < 1)
        throw std::invalid_argument("verify_convergent_example: n_terms must be >= 1");

    ConvergenceReport report;
    report.name = std::move(name);
    report.n_terms = n_terms;
    report.expected = expected;

    double sum = 0.0;
    for (std::int64_t u = 1; u <= n_terms; ++u)
        sum += rf.f_numeric(static_cast<double>(u));
    if (!std::isfinite(sum))
        throw std::domain_error("verify_convergent_example: partial sum is not finite");
    report.partial_sum = sum;
    report.partial_sum_error = std::fabs(sum - expected);

    report.max_residual = max_antidifference_residual(rf, report.window_lo, report.window_hi);

    if (rf.f_exact)
        report.halving_value = Rational(-1, 2) * rf.f_exact(0);
    else
        report.halving_value = -rf.f_numeric(0.0) / 2.0;
    return report;
}

std::string ConvergenceReport::to_text() const {
    std::ostringstream os;
    os << "series " << name << "\n";
    os << "  partial sum over " << n_terms << " terms: " << format_double(partial_sum)
       << " (|error| " << format_double(partial_sum_error) << " vs " << format_double(expected) << ")\n";
    os << "  max |F(n+1)-F(n)-f(n)| on [" << window_lo << ", " << window_hi
       << "]: " << format_double(max_residual) << "\n";
    os << "  even-function value -f(0)/2: ";
    if (std::holds_alternative<Rational>(halving_value))
        os << std::get<Rational>(halving_value).to_string();
    else
        os << format_double(std::get<double>(halving_value));
    os << "\n";
    return os.str();
}

nlohmann::json ConvergenceReport::to_json() const {
    nlohmann::json j{
        {"series", name},
        {"n_terms", n_terms},
        {"expected", format_double(expected)},
        {"partial_sum", format_double(partial_sum)},
        {"partial_sum_error", format_double(partial_sum_error)},
        {"window", {window_lo, window_hi}},
        {"max_residual", format_double(max_residual)},
    };
    if (std::holds_alternative<Rational>(halving_value)) {
        const Rational& r = std::get<Rational>(halving_value);
        j["halving_value"] = {{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
    } else {
        j["halving_value"] = format_double(std::get<double>(halving_value));
    }
    return j;
}

} // namespace zetasum
