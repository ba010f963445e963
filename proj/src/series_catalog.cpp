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

#include "zetasum/series_catalog.hpp"

#include <cmath>

namespace zetasum {

namespace {

Rational sign_pow(std::int64_t u) {
    return u % 2 == 0 ? Rational(1) : Rational(-1);
}

// f(u) = 1/(4u^2 - 1), F(n) = -1/(2(2n - 1)); telescoping, sum 1/2.
ConvergentSeries make_series_1() {
    ConvergentSeries s;
    s.id = "series-1";
    s.term_formula = "1/(4*u^2-1)";
    s.generating_formula = "-1/(2*(2*n-1))";
    s.rf.parity = Parity::even;
    s.rf.f_exact = [](std::int64_t u) {
        Rational uu(static_cast<long>(u));
        return (Rational(4) * uu * uu - Rational(1)).inverse();
    };
    s.rf.F_exact = [](std::int64_t n) {
        return -(Rational(2) * (Rational(2) * Rational(static_cast<long>(n)) - Rational(1))).inverse();
    };
    s.rf.f_numeric = [](double u) { return 1.0 / (4.0 * u * u - 1.0); };
    s.rf.F_numeric = [](double n) { return -1.0 / (2.0 * (2.0 * n - 1.0)); };
    s.expected = 0.5;
    s.expected_exact = Rational(1, 2);
    s.default_terms = 100000;
    return s;
}

// f(u) = (-1)^u (2u^2 + 1/2)/(2u^2 - 1/2)^2, F(n) = (-1)^{n-1}/(2n-1)^2; sum -1.
ConvergentSeries make_series_2() {
    ConvergentSeries s;
    s.id = "series-2";
    s.term_formula = "(-1)^u*(2*u^2+1/2)/(2*u^2-1/2)^2";
    s.generating_formula = "(-1)^(n-1)/(2*n-1)^2";
    s.rf.parity = Parity::even;
    s.rf.f_exact = [](std::int64_t u) {
        Rational uu(static_cast<long>(u));
        Rational q = Rational(2) * uu * uu;
        Rational den = (q - Rational(1, 2)) * (q - Rational(1, 2));
        return sign_pow(u) * (q + Rational(1, 2)) / den;
    };
    s.rf.F_exact = [](std::int64_t n) {
        Rational m = Rational(2) * Rational(static_cast<long>(n)) - Rational(1);
        return -sign_pow(n) / (m * m);
    };
    s.rf.f_numeric = [](double u) {
        double q = 2.0 * u * u;
        return std::pow(-1.0, u) * (q + 0.5) / ((q - 0.5) * (q - 0.5));
    };
    s.rf.F_numeric = [](double n) {
        double m = 2.0 * n - 1.0;
        return -std::pow(-1.0, n) / (m * m);
    };
    s.expected = -1.0;
    s.expected_exact = Rational(-1);
    s.default_terms = 10000;
    return s;
}

// f(u) = ((4^u - 1)(u - 1/2) - 1)/2^{u^2+u+1}, F(n) = -(n - 1/2)/2^{n^2-n+1}; sum 1/4.
// Numeric evaluators split the term so no intermediate overflows: the
// naive form is inf/inf for u beyond ~30.
ConvergentSeries make_series_3() {
    ConvergentSeries s;
    s.id = "series-3";
    s.term_formula = "((4^u-1)*(u-1/2)-1)/2^(u^2+u+1)";
    s.generating_formula = "-(n-1/2)/2^(n^2-n+1)";
    s.rf.parity = Parity::none;
    s.rf.f_exact = [](std::int64_t u) {
        Rational uu(static_cast<long>(u));
        Rational four_pow = Rational::pow2(2 * u);
        Rational scale = Rational::pow2(u * u + u + 1);
        return ((four_pow - Rational(1)) * (uu - Rational(1, 2)) - Rational(1)) / scale;
    };
    s.rf.F_exact = [](std::int64_t n) {
        Rational nn(static_cast<long>(n));
        return -(nn - Rational(1, 2)) / Rational::pow2(n * n - n + 1);
    };
    s.rf.f_numeric = [](double u) {
        double e = u * u + u + 1.0;
        return (u - 0.5) * std::exp2(-(e - 2.0 * u)) - (u - 0.5) * std::exp2(-e) - std::exp2(-e);
    };
    s.rf.F_numeric = [](double n) { return -(n - 0.5) * std::exp2(-(n * n - n + 1.0)); };
    s.expected = 0.25;
    s.expected_exact = Rational(1, 4);
    s.default_terms = 30;
    return s;
}

// f(u) = ((u^2 + 1/4) tan(1/2) cos u - u sin u)/(4u^2 - 1)^2,
// F(n) = sin(n - 1/2)/(8 (2n-1)^2 cos(1/2)); sum -tan(1/2)/8.
ConvergentSeries make_series_4() {
    ConvergentSeries s;
    s.id = "series-4";
    s.term_formula = "((u^2+1/4)*tan(1/2)*cos(u)-u*sin(u))/(4*u^2-1)^2";
    s.generating_formula = "sin(n-1/2)/(8*(2*n-1)^2*cos(1/2))";
    s.rf.parity = Parity::even;
    s.rf.f_numeric = [](double u) {
        double den = (4.0 * u * u - 1.0) * (4.0 * u * u - 1.0);
        return ((u * u + 0.25) * std::tan(0.5) * std::cos(u) - u * std::sin(u)) / den;
    };
    s.rf.F_numeric = [](double n) {
        double m = 2.0 * n - 1.0;
        return std::sin(n - 0.5) / (8.0 * m * m * std::cos(0.5));
    };
    s.expected = -std::tan(0.5) / 8.0;
    s.default_terms = 100000;
    return s;
}

} // namespace

const std::vector<ConvergentSeries>& convergent_series() {
    static const std::vector<ConvergentSeries> catalog{
        make_series_1(),
        make_series_2(),
        make_series_3(),
        make_series_4(),
    };
    return catalog;
}

} // namespace zetasum
