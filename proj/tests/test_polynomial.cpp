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

#include <random>

#include "zetasum/polynomial.hpp"

using zetasum::Polynomial;
using zetasum::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> coeffs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        coeffs.push_back(random_rational(rng));
    return Polynomial(std::move(coeffs));
}

const Polynomial x = Polynomial::variable();

} // namespace

TEST_CASE("polynomial representation invariants") {
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial(std::vector<Rational>{1, 2, 0, 0}).degree() == 1);
    CHECK((x - x).is_zero());
    CHECK(Polynomial::constant(0).is_zero());
    CHECK((x * x + x).degree() == 2);
    CHECK(!(x * x).leading_coefficient().is_zero());
}

TEST_CASE("polynomial arithmetic basics") {
    CHECK((x + Polynomial::constant(1)) * (x - Polynomial::constant(1)) == x * x - Polynomial::constant(1));
    CHECK((x * x + x).eval(3) == Rational(12));
    CHECK(x.pow(3).eval(-2) == Rational(-8));
}

TEST_CASE("polynomial shift") {
    CHECK((x * x).shifted(1) == x * x + Rational(2) * x + Polynomial::constant(1));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_polynomial(rng, 10);
        Rational c = random_rational(rng);
        for (int j = 0; j < 20; ++j) {
            Rational point = random_rational(rng);
            CHECK(p.shifted(c).eval(point) == p.eval(point + c));
        }
    }
}

TEST_CASE("polynomial derivative") {
    CHECK(x.pow(3).derivative() == Rational(3) * x.pow(2));
    CHECK(Polynomial::constant(7).derivative().is_zero());
    Polynomial p = Rational(1, 2) * x.pow(2) + Rational(1, 2) * x;
    CHECK(p.derivative() == x + Polynomial::constant(Rational(1, 2)));
}

TEST_CASE("polynomial definite integral") {
    CHECK(Polynomial::constant(1).integral(-1, 0) == Rational(1));
    CHECK(x.integral(-1, 0) == Rational(-1, 2));
    Polynomial half_square = Rational(1, 2) * (x.pow(2) + x);
    CHECK(half_square.integral(-1, 0) == Rational(-1, 12));
}

TEST_CASE("integral is additive over adjacent ranges") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = random_polynomial(rng, 8);
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        Rational c = random_rational(rng);
        CHECK(p.integral(a, b) + p.integral(b, c) == p.integral(a, c));
    }
}

TEST_CASE("polynomial reflection") {
    CHECK((x * x + x).reflected() == x * x - x);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = random_polynomial(rng, 7);
        Rational point = random_rational(rng);
        CHECK(p.reflected().eval(point) == p.eval(-point));
    }
}

TEST_CASE("polynomial division") {
    auto [q, r] = Polynomial::div_mod(x * x - Polynomial::constant(1), x - Polynomial::constant(1));
    CHECK(q == x + Polynomial::constant(1));
    CHECK(r.is_zero());

    std::mt19937_64 rng(14);
    for (int i = 0; i < 60; ++i) {
        Polynomial num = random_polynomial(rng, 9);
        Polynomial den = random_polynomial(rng, 4);
        if (den.is_zero())
            continue;
        auto [quot, rem] = Polynomial::div_mod(num, den);
        CHECK(num == quot * den + rem);
        CHECK(rem.degree() < den.degree());
    }
}

TEST_CASE("polynomial gcd") {
    Polynomial a = (x + Polynomial::constant(1)).pow(2) * (x - Polynomial::constant(2));
    Polynomial b = (x + Polynomial::constant(1)) * (x + Polynomial::constant(3));
    CHECK(zetasum::poly_gcd(a, b) == x + Polynomial::constant(1));

    // gcd of coprime inputs is 1; gcd result is monic.
    CHECK(zetasum::poly_gcd(x, x + Polynomial::constant(1)) == Polynomial::constant(1));
    Polynomial c = Rational(3) * (x + Polynomial::constant(1));
    Polynomial d = Rational(5, 7) * (x + Polynomial::constant(1)) * x;
    CHECK(zetasum::poly_gcd(c, d) == x + Polynomial::constant(1));

    std::mt19937_64 rng(15);
    for (int i = 0; i < 25; ++i) {
        Polynomial p = random_polynomial(rng, 5);
        Polynomial q = random_polynomial(rng, 5);
        Polynomial g = zetasum::poly_gcd(p, q);
        if (p.is_zero() && q.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(Polynomial::div_mod(p, g).second.is_zero());
        CHECK(Polynomial::div_mod(q, g).second.is_zero());
        CHECK(g.leading_coefficient() == Rational(1));
    }
}

TEST_CASE("polynomial to_string") {
    CHECK((x * x - Polynomial::constant(1)).to_string() == "x^2 - 1");
    CHECK((Rational(-1, 2) * x).to_string() == "-1/2*x");
    CHECK(Polynomial().to_string() == "0");
}
