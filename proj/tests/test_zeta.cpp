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

#include "zetasum/summation.hpp"
#include "zetasum/zeta.hpp"

using namespace zetasum;

TEST_CASE("zeta at non-positive integers") {
    CHECK(zeta_neg(0).value == Rational(-1, 2));
    CHECK(zeta_neg(1).value == Rational(-1, 12));
    CHECK(zeta_neg(2).value == Rational(0));
    CHECK(zeta_neg(3).value == Rational(1, 120));
    CHECK(zeta_neg(5).value == Rational(-1, 252));

    CHECK(zeta_neg(3).argument == -3);
    CHECK(zeta_neg(3).function == SpecialFunction::zeta);
    CHECK(zeta_neg(3).route == Route::closed_form);
}

TEST_CASE("eta at non-positive integers") {
    CHECK(eta_neg(0).value == Rational(1, 2));
    CHECK(eta_neg(1).value == Rational(1, 4));
    CHECK(eta_neg(2).value == Rational(0));
    CHECK(eta_neg(3).value == Rational(-1, 8));
    CHECK(eta_neg(5).value == Rational(1, 4));
}

TEST_CASE("euler oracle pins") {
    CHECK(eta_euler_oracle(0) == Rational(1, 2));
    CHECK(eta_euler_oracle(1) == Rational(1, 4));
    CHECK(eta_euler_oracle(3) == Rational(-1, 8)); // (1 - 4 + 1)/2^4
}

TEST_CASE("incremental oracle matches the standalone one") {
    EulerOracle oracle;
    for (unsigned m = 0; m <= 12; ++m) {
        CHECK(oracle.order() == m);
        CHECK(oracle.value() == eta_euler_oracle(m));
        oracle.advance();
    }
}

TEST_CASE("oracle functions take the known closed forms") {
    const Polynomial x = Polynomial::variable();
    const Polynomial one = Polynomial::constant(1);
    EulerOracle oracle;
    oracle.advance();
    CHECK(oracle.function() == RationalFunction(x, (one + x).pow(2)));
    oracle.advance();
    CHECK(oracle.function() == RationalFunction(x * (one - x), (one + x).pow(3)));
    oracle.advance();
    CHECK(oracle.function() == RationalFunction(x * (one - Rational(4) * x + x * x), (one + x).pow(4)));
}

TEST_CASE("triple route agreement") {
    EulerOracle oracle;
    for (unsigned m = 0; m <= 20; ++m) {
        Polynomial monomial = Polynomial::monomial(1, m);
        CHECK(zeta_neg(m).value == regularized_series_sum(monomial).rational());
        CHECK(eta_neg(m).value == regularized_alt_series_sum(monomial).rational());
        CHECK(eta_neg(m).value == oracle.value());
        oracle.advance();
    }
}

TEST_CASE("functional relation residual vanishes") {
    CHECK(functional_relation_residual(0).is_zero());
    CHECK(functional_relation_residual(2).is_zero());
    CHECK(functional_relation_residual(5).is_zero());
    for (unsigned m = 0; m <= 25; ++m)
        CHECK(functional_relation_residual(m).is_zero());
}

TEST_CASE("trivial zeros at negative even integers") {
    for (unsigned k = 1; k <= 10; ++k) {
        CHECK(zeta_neg(2 * k).value.is_zero());
        CHECK(eta_neg(2 * k).value.is_zero());
    }
}
