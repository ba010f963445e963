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

#include "zetasum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "zetasum/bernoulli.hpp"
#include "zetasum/ordering.hpp"
#include "zetasum/parser.hpp"
#include "zetasum/polynomial.hpp"
#include "zetasum/rational.hpp"
#include "zetasum/series_catalog.hpp"
#include "zetasum/summation.hpp"
#include "zetasum/zeta.hpp"

namespace zetasum::verify {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// For tolerance constants, where 17 digits is just noise.
std::string fmt_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

CheckResult exact_check(std::string name, const Rational& expected, const Rational& got) {
    return {std::move(name), expected == got, expected.to_string(), got.to_string()};
}

CheckResult count_check(std::string name, long expected, long got) {
    return {std::move(name), expected == got, std::to_string(expected) + " instances",
            std::to_string(got) + " instances"};
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, long max_num, long max_den) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        coeffs.push_back(random_rational(rng, max_num, max_den));
    return Polynomial(std::move(coeffs));
}

} // namespace

std::vector<CheckResult> special_values_suite() {
    struct Row {
        unsigned m;
        Rational zeta;
        Rational eta;
    };
    const Row rows[] = {
        {0, Rational(-1, 2), Rational(1, 2)},
        {1, Rational(-1, 12), Rational(1, 4)},
        {2, Rational(0), Rational(0)},
        {3, Rational(1, 120), Rational(-1, 8)},
    };
    std::vector<CheckResult> out;
    for (const Row& row : rows) {
        std::string arg = "(" + std::to_string(-static_cast<long>(row.m)) + ")";
        out.push_back(exact_check("special/zeta" + arg, row.zeta, zeta_neg(row.m).value));
        out.push_back(exact_check("special/eta" + arg, row.eta, eta_neg(row.m).value));
    }
    return out;
}

std::vector<CheckResult> convergent_suite() {
    // Per-series partial-sum tolerances; series 3 has a super-exponential
    // tail, so it is held to much more than the generic 5e-6.
    const double sum_tolerance[] = {5e-6, 5e-6, 1e-12, 5e-6};
    const double residual_tolerance = 1e-10;

    std::vector<CheckResult> out;
    const auto& catalog = convergent_series();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const ConvergentSeries& s = catalog[i];
        ConvergenceReport report = verify_convergent_example(s.rf, s.expected, s.default_terms, s.id);

        bool sum_ok = report.partial_sum_error < sum_tolerance[i];
        bool residual_ok = report.max_residual < residual_tolerance;

        bool halving_ok;
        std::string halving_text;
        if (s.expected_exact) {
            const Rational& h = std::get<Rational>(report.halving_value);
            halving_ok = h == *s.expected_exact;
            halving_text = h.to_string();
        } else {
            double h = std::get<double>(report.halving_value);
            halving_ok = std::fabs(h - s.expected) <= 1e-15;
            halving_text = fmt(h);
        }

        std::ostringstream expected;
        expected << "|sum-" << fmt(s.expected) << "|<" << fmt_short(sum_tolerance[i]) << " residual<"
                 << fmt_short(residual_tolerance) << " halving="
                 << (s.expected_exact ? s.expected_exact->to_string() : fmt(s.expected));
        std::ostringstream got;
        got << "|sum-expected|=" << fmt(report.partial_sum_error) << " residual=" << fmt(report.max_residual)
            << " halving=" << halving_text;
        out.push_back({"convergent/" + s.id, sum_ok && residual_ok && halving_ok, expected.str(), got.str()});
    }
    return out;
}

std::vector<CheckResult> triple_route_suite(unsigned max_m) {
    long agree = 0;
    EulerOracle oracle;
    for (unsigned m = 0; m <= max_m; ++m) {
        Polynomial monomial = Polynomial::monomial(1, m);
        Rational zeta_closed = zeta_neg(m).value;
        Rational zeta_series = regularized_series_sum(monomial).rational();
        Rational eta_closed = eta_neg(m).value;
        Rational eta_series = regularized_alt_series_sum(monomial).rational();
        Rational eta_oracle = oracle.value();
        if (zeta_closed == zeta_series && eta_closed == eta_series && eta_closed == eta_oracle)
            ++agree;
        if (m < max_m)
            oracle.advance();
    }
    return {count_check("zeta-eta/triple-route-agreement-m0-" + std::to_string(max_m),
                        static_cast<long>(max_m) + 1, agree)};
}

std::vector<CheckResult> functional_relation_suite(unsigned max_m) {
    long zero = 0;
    for (unsigned m = 0; m <= max_m; ++m)
        if (functional_relation_residual(m).is_zero())
            ++zero;
    return {count_check("zeta-eta/functional-relation-m0-" + std::to_string(max_m),
                        static_cast<long>(max_m) + 1, zero)};
}

std::vector<CheckResult> arithmetic_suite() {
    std::vector<CheckResult> out;

    struct Row {
        long a1, d;
        Rational direct, alternating;
    };
    const Row rows[] = {
        {1, 0, Rational(-1, 2), Rational(1, 2)},
        {1, 1, Rational(-1, 12), Rational(1, 4)},
        {1, 2, Rational(1, 3), Rational(0)},
    };
    for (const Row& row : rows) {
        auto v = arithmetic_series_values(Rational(row.a1), Rational(row.d));
        std::string base = "arithmetic/table-a1=" + std::to_string(row.a1) + "-d=" + std::to_string(row.d);
        out.push_back(exact_check(base + "-direct", row.direct, v.direct));
        out.push_back(exact_check(base + "-alternating", row.alternating, v.alternating));
    }

    std::mt19937_64 rng(20260101);
    long agree = 0;
    const int instances = 100;
    for (int i = 0; i < instances; ++i) {
        Rational a1 = random_rational(rng, 30, 12);
        Rational d = random_rational(rng, 30, 12);
        auto closed = arithmetic_series_values(a1, d);
        // f(u) = a1 + (u-1) d = (a1 - d) + d u.
        Polynomial linear(std::vector<Rational>{a1 - d, d});
        if (closed.direct == regularized_series_sum(linear).rational() &&
            closed.alternating == regularized_alt_series_sum(linear).rational())
            ++agree;
    }
    out.push_back(count_check("arithmetic/random-agreement", instances, agree));
    return out;
}

std::vector<CheckResult> bernoulli_suite() {
    std::vector<CheckResult> out;

    {
        long ok = 0;
        for (unsigned k = 0; k <= 60; ++k) {
            Polynomial p = power_sum_poly(k);
            Polynomial difference = p - p.shifted(-1);
            if (difference == Polynomial::monomial(1, k))
                ++ok;
        }
        out.push_back(count_check("bernoulli/power-sum-difference-identity", 61, ok));
    }

    {
        long ok = 0;
        long total = 0;
        for (unsigned k = 0; k <= 40; ++k) {
            Polynomial p = power_sum_poly(k);
            Rational brute = 0;
            for (long n = 1; n <= 60; ++n) {
                brute += Rational(n).pow(static_cast<long>(k));
                ++total;
                if (p.eval(Rational(n)) == brute)
                    ++ok;
            }
        }
        out.push_back(count_check("bernoulli/power-sum-brute-force", total, ok));
    }

    {
        long ok = 0;
        long total = 0;
        for (unsigned k = 1; k <= 40; ++k) {
            Polynomial p = power_sum_poly(k);
            Rational flip = k % 2 == 0 ? Rational(-1) : Rational(1);
            for (long n = 0; n <= 50; ++n) {
                ++total;
                if (p.eval(Rational(-n)) == flip * p.eval(Rational(n - 1)))
                    ++ok;
            }
        }
        out.push_back(count_check("bernoulli/power-sum-reflection", total, ok));
    }

    {
        long ok = 0;
        for (unsigned u = 1; u <= 30; ++u)
            if (bernoulli_number(2 * u + 1).is_zero())
                ++ok;
        out.push_back(count_check("bernoulli/odd-vanishing", 30, ok));
    }

    {
        long ok = 0;
        long total = 0;
        for (unsigned k = 1; k <= 20; ++k) {
            Rational brute = 0;
            for (std::uint64_t n = 1; n <= 40; ++n) {
                Rational term = Rational(static_cast<long>(n)).pow(static_cast<long>(k) - 1);
                brute += (n % 2 == 1) ? term : -term;
                ++total;
                if (alternating_power_sum(k, n) == brute)
                    ++ok;
            }
        }
        out.push_back(count_check("bernoulli/alternating-power-sum-closed-form", total, ok));
    }

    return out;
}

std::vector<CheckResult> summation_suite() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(20260202);

    {
        // Telescoped value vs the antidifference at the endpoints, the
        // complementary-gap identity, and (when finite) the literal sum
        // over the interval in precedence order.
        std::uniform_int_distribution<std::int64_t> bound(-40, 40);
        long ok = 0;
        const int instances = 200;
        for (int i = 0; i < instances; ++i) {
            Polynomial f = random_polynomial(rng, 5, 9, 9);
            RegularFunction rf = RegularFunction::from_polynomial(f);
            std::int64_t a = bound(rng);
            std::int64_t b = bound(rng);
            Rational sum = generalized_sum(rf, a, b).rational();
            bool good = sum == rf.F_exact(b + 1) - rf.F_exact(a);
            good = good && sum == -generalized_sum(rf, b + 1, a - 1).rational();
            CyclicInterval arc = interval(a, b);
            if (arc.finite()) {
                Rational literal = 0;
                for (std::int64_t u : arc)
                    literal += f.eval(Rational(u));
                good = good && sum == literal;
            }
            if (good)
                ++ok;
        }
        out.push_back(count_check("summation/telescoping-random", instances, ok));
    }

    {
        // Mirror identity: sum_{m..n} f(u) = sum_{-n..-m} f(-u) for m
        // before n.
        std::uniform_int_distribution<std::int64_t> bound(-40, 40);
        long ok = 0;
        const int instances = 100;
        for (int i = 0; i < instances; ++i) {
            Polynomial f = random_polynomial(rng, 5, 9, 9);
            std::int64_t m = bound(rng);
            std::int64_t n = bound(rng);
            if (m == n)
                n = m == 40 ? -40 : m + 1;
            if (!precedes(m, n))
                std::swap(m, n);
            RegularFunction rf = RegularFunction::from_polynomial(f);
            RegularFunction mirrored = RegularFunction::from_polynomial(f.reflected());
            if (generalized_sum(rf, m, n).rational() == generalized_sum(mirrored, -n, -m).rational())
                ++ok;
        }
        out.push_back(count_check("summation/mirror-random", instances, ok));
    }

    {
        std::uniform_int_distribution<std::int64_t> bound(-1000, 1000);
        long ok = 0;
        const int functions = 10;
        const int starts = 50;
        for (int i = 0; i < functions; ++i) {
            Polynomial f = random_polynomial(rng, 6, 9, 9);
            RegularFunction rf = RegularFunction::from_polynomial(f);
            for (int j = 0; j < starts; ++j)
                if (sum_over_Z(rf, bound(rng)).rational().is_zero())
                    ++ok;
        }
        out.push_back(count_check("summation/full-circle-random", functions * starts, ok));
    }

    {
        long ok = 0;
        const int instances = 50;
        for (int i = 0; i < instances; ++i) {
            Polynomial f = random_polynomial(rng, 6, 9, 9);
            Polynomial g = random_polynomial(rng, 6, 9, 9);
            Rational c = random_rational(rng, 9, 9);
            Rational combined = regularized_series_sum(c * f + g).rational();
            Rational split = c * regularized_series_sum(f).rational() + regularized_series_sum(g).rational();
            Rational alt_combined = regularized_alt_series_sum(c * f + g).rational();
            Rational alt_split =
                c * regularized_alt_series_sum(f).rational() + regularized_alt_series_sum(g).rational();
            if (combined == split && alt_combined == alt_split)
                ++ok;
        }
        out.push_back(count_check("summation/linearity-random", instances, ok));
    }

    {
        long ok = 0;
        for (unsigned k = 1; k <= 40; ++k) {
            Polynomial monomial = Polynomial::monomial(1, k - 1);
            Rational expected = -bernoulli_number(k) / Rational(static_cast<long>(k));
            if (regularized_series_sum(monomial).rational() == expected)
                ++ok;
        }
        out.push_back(count_check("summation/monomial-direct-closed-form", 40, ok));
    }

    {
        long ok = 0;
        for (unsigned k = 1; k <= 40; ++k) {
            Polynomial monomial = Polynomial::monomial(1, k - 1);
            Rational expected = (Rational::pow2(static_cast<long>(k)) - Rational(1)) *
                                bernoulli_number(k) / Rational(static_cast<long>(k));
            if (regularized_alt_series_sum(monomial).rational() == expected)
                ++ok;
        }
        out.push_back(count_check("summation/monomial-alternating-closed-form", 40, ok));
    }

    {
        long ok = 0;
        for (unsigned k = 1; k <= 10; ++k) {
            Polynomial even_power = Polynomial::monomial(1, 2 * k);
            RegularFunction rf = RegularFunction::from_polynomial(even_power);
            bool zero = regularized_series_sum(even_power).rational().is_zero() &&
                        regularized_alt_series_sum(even_power).rational().is_zero() &&
                        even_regular_sum(rf).rational().is_zero();
            if (zero)
                ++ok;
        }
        out.push_back(count_check("summation/even-power-family", 10, ok));
    }

    return out;
}

std::vector<CheckResult> ordering_suite() {
    std::vector<CheckResult> out;

    {
        long ok = 0;
        long total = 0;
        for (std::int64_t a = -100; a <= 100; ++a)
            for (std::int64_t b = -100; b <= 100; ++b) {
                if (a == b)
                    continue;
                ++total;
                if (precedes(a, b) != precedes(b, a))
                    ++ok;
            }
        out.push_back(count_check("ordering/totality", total, ok));
    }

    {
        std::mt19937_64 rng(20260303);
        std::uniform_int_distribution<std::int64_t> pick(-100, 100);
        long ok = 0;
        const int instances = 2000;
        for (int i = 0; i < instances; ++i) {
            std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
            bool holds = true;
            if (a != b && b != c && a != c && precedes(a, b) && precedes(b, c))
                holds = precedes(a, c);
            if (holds)
                ++ok;
        }
        out.push_back(count_check("ordering/transitivity", instances, ok));
    }

    {
        // Splitting: Z_{a,c} = Z_{a,b} + Z_{b+1,c} for b inside, as a
        // disjoint union, checked pointwise on a window.
        std::mt19937_64 rng(20260304);
        std::uniform_int_distribution<std::int64_t> pick(-30, 30);
        long ok = 0;
        const int instances = 300;
        for (int i = 0; i < instances; ++i) {
            std::int64_t a = pick(rng), c = pick(rng), b = pick(rng);
            CyclicInterval whole = interval(a, c);
            if (!whole.contains(b) || b == -1) {
                ++ok; // a split needs b inside the interval, and -1 has no successor
                continue;
            }
            CyclicInterval left = interval(a, b);
            CyclicInterval right = interval(b + 1, c);
            bool holds = true;
            if (b == c) {
                // The split's right part is empty by convention; the left
                // part must already be the whole interval.
                for (std::int64_t u = -35; u <= 35 && holds; ++u)
                    holds = whole.contains(u) == left.contains(u);
            } else {
                for (std::int64_t u = -35; u <= 35 && holds; ++u) {
                    bool in_left = left.contains(u);
                    bool in_right = right.contains(u);
                    holds = (whole.contains(u) == (in_left || in_right)) && !(in_left && in_right);
                }
            }
            if (holds)
                ++ok;
        }
        out.push_back(count_check("ordering/splitting", instances, ok));
    }

    {
        long ok = 0;
        long total = 0;
        for (std::int64_t a = -50; a <= 50; ++a) {
            CyclicInterval full = interval(a, a - 1);
            for (std::int64_t u = -60; u <= 60; ++u) {
                ++total;
                if (full.contains(u))
                    ++ok;
            }
        }
        out.push_back(count_check("ordering/full-circle-membership", total, ok));
    }

    return out;
}

namespace {

// Random expression text that always denotes a polynomial in `u`.
std::string random_polynomial_expression(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 5 : 1);
    std::uniform_int_distribution<int> small(0, 12);
    std::uniform_int_distribution<int> expo(2, 4);
    switch (kind(rng)) {
    case 0:
        return std::to_string(small(rng));
    case 1:
        return "u";
    case 2:
        return "(" + random_polynomial_expression(rng, depth - 1) + "+" +
               random_polynomial_expression(rng, depth - 1) + ")";
    case 3:
        return "(" + random_polynomial_expression(rng, depth - 1) + "-" +
               random_polynomial_expression(rng, depth - 1) + ")";
    case 4:
        return random_polynomial_expression(rng, depth - 1) + "*" +
               random_polynomial_expression(rng, depth - 1);
    default:
        return "(" + random_polynomial_expression(rng, depth - 1) + ")^" + std::to_string(expo(rng));
    }
}

} // namespace

std::vector<CheckResult> parser_suite() {
    std::vector<CheckResult> out;

    {
        std::vector<std::string> fixtures;
        for (const ConvergentSeries& s : convergent_series())
            fixtures.push_back(s.term_formula);
        fixtures.insert(fixtures.end(), {
            "3*u^2-1/2",
            "-u^2",
            "2^u^2",
            "(-1)^u",
            "sin(u-1/2)/(8*(2*u-1)^2*cos(1/2))",
            "1/(2*u-1)-1/(2*u+1)",
        });
        std::mt19937_64 rng(20260405);
        for (int i = 0; i < 100; ++i)
            fixtures.push_back(random_polynomial_expression(rng, 3));

        long ok = 0;
        for (const std::string& text : fixtures) {
            ParsedExpr once = parse_expr(text, "u");
            ParsedExpr twice = parse_expr(once.to_string(), "u");
            if (once == twice && once.to_string() == twice.to_string())
                ++ok;
        }
        out.push_back(count_check("parser/round-trip", static_cast<long>(fixtures.size()), ok));
    }

    {
        bool ok = parse_expr("1+2*3^2", "u").eval(0.0) == 19.0;
        ok = ok && parse_expr("-u^2", "u").eval(3.0) == -9.0;
        ok = ok && parse_expr("2^u^2", "u").eval(3.0) == 512.0;
        ok = ok && parse_expr("(-1)^u", "u").eval(7.0) == -1.0;
        out.push_back({"parser/precedence", ok, "4 pinned evaluations", ok ? "4 pinned evaluations" : "mismatch"});
    }

    {
        std::mt19937_64 rng(20260406);
        std::uniform_int_distribution<long> num(-21, 21);
        std::uniform_int_distribution<long> den(1, 7);
        long ok = 0;
        const int instances = 100;
        for (int i = 0; i < instances; ++i) {
            std::string text = random_polynomial_expression(rng, 3);
            ParsedExpr expr = parse_expr(text, "u");
            auto poly = expr.as_polynomial();
            bool good = poly.has_value();
            if (good) {
                // Coefficient-magnitude polynomial: the right scale for
                // the float roundoff of the AST evaluation.
                std::vector<Rational> mags;
                for (const Rational& c : poly->coefficients())
                    mags.push_back(c.abs());
                Polynomial magnitude(std::move(mags));
                for (int j = 0; good && j < 20; ++j) {
                    Rational x(num(rng), den(rng));
                    double via_ast = expr.eval(x.to_double());
                    double exact = poly->eval(x).to_double();
                    double scale = std::max(1.0, magnitude.eval(x.abs()).to_double());
                    good = std::fabs(via_ast - exact) <= 1e-12 * scale;
                }
            }
            if (good)
                ++ok;
        }
        out.push_back(count_check("parser/polynomial-extraction", instances, ok));
    }

    return out;
}

std::vector<CheckResult> all_suites() {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> part) {
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    append(special_values_suite());
    append(convergent_suite());
    append(triple_route_suite());
    append(functional_relation_suite());
    append(arithmetic_suite());
    append(bernoulli_suite());
    append(summation_suite());
    append(ordering_suite());
    append(parser_suite());
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

std::string render_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    long passed = 0;
    for (const CheckResult& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": expected " << r.expected << ", got " << r.got
           << "\n";
        if (r.pass)
            ++passed;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

} // namespace zetasum::verify
