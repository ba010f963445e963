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

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "zetasum/rational_function.hpp"

using zetasum::Polynomial;
using zetasum::Rational;
using zetasum::RationalFunction;

namespace {

const Polynomial x = Polynomial::variable();
const Polynomial one = Polynomial::constant(1);

// Test-side oracle: truncated power-series expansion by long division,
// valid when the denominator has a nonzero constant term. Independent of
// the euler_step implementation.
std::vector<Rational> series_expansion(const RationalFunction& r, std::size_t length) {
    const Polynomial& num = r.numerator();
    const Polynomial& den = r.denominator();
    REQUIRE(!den.coeff(0).is_zero());
    std::vector<Rational> c(length, Rational(0));
    for (std::size_t k = 0; k < length; ++k) {
        Rational acc = num.coeff(k);
        for (std::size_t j = 1; j <= k; ++j)
            acc -= den.coeff(j) * c[k - j];
        c[k] = acc / den.coeff(0);
    }
    return c;
}

} // namespace

TEST_CASE("rational function reduction and canonical form") {
    // (x^2 - 1)(x + 2) / (x - 1) reduces to (x + 1)(x + 2).
    RationalFunction r((x * x - one) * (x + Polynomial::constant(2)), x - one);
    CHECK(r.numerator() == (x + one) * (x + Polynomial::constant(2)));
    CHECK(r.denominator() == one);

    // Denominator is normalized monic.
    RationalFunction s(x, Rational(2) * (x + one));
    CHECK(s.denominator() == x + one);
    CHECK(s.numerator() == Rational(1, 2) * x);

    CHECK_THROWS_AS(RationalFunction(x, Polynomial()), std::domain_error);
}

TEST_CASE("euler step on the alternating geometric function") {
    RationalFunction geometric(x, one + x);

    RationalFunction first = geometric.euler_step();
    CHECK(first == RationalFunction(x, (one + x) * (one + x)));

    RationalFunction third = geometric.euler_step().euler_step().euler_step();
    Polynomial expected_num = x * (one - Rational(4) * x + x * x);
    CHECK(third == RationalFunction(expected_num, (one + x).pow(4)));

    CHECK(RationalFunction(one, one).euler_step().is_zero());
}

TEST_CASE("euler step matches the series oracle") {
    // One step multiplies the k-th series coefficient by k; check ten
    // successive steps against the long-division expansion.
    const std::size_t length = 30;
    RationalFunction r(x, one + x);
    std::vector<Rational> series = series_expansion(r, length);
    CHECK(series[0] == Rational(0));
    CHECK(series[1] == Rational(1));
    CHECK(series[2] == Rational(-1));
    CHECK(series[5] == Rational(1));

    for (int step = 0; step < 10; ++step) {
        RationalFunction next = r.euler_step();
        std::vector<Rational> expected = series;
        for (std::size_t k = 0; k < length; ++k)
            expected[k] = Rational(static_cast<long>(k)) * expected[k];
        CHECK(series_expansion(next, length) == expected);
        r = next;
        series = std::move(expected);
    }
}

TEST_CASE("rational function evaluation") {
    RationalFunction r(x, one + x);
    CHECK(r.eval(1) == Rational(1, 2));
    CHECK(r.eval(0) == Rational(0));
    CHECK_THROWS_AS(r.eval(-1), std::domain_error);
}
