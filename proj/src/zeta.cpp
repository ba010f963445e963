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

#include "zetasum/zeta.hpp"

#include "zetasum/bernoulli.hpp"

namespace zetasum {

std::string_view to_string(SpecialFunction f) {
    return f == SpecialFunction::zeta ? "zeta" : "eta";
}

std::string_view to_string(Route r) {
    switch (r) {
    case Route::closed_form: return "closed_form";
    case Route::regularized_series: return "regularized_series";
    case Route::euler_oracle: return "euler_oracle";
    }
    return "unknown";
}

SpecialValue zeta_neg(unsigned m) {
    Rational value = -bernoulli_number(m + 1) / Rational(static_cast<long>(m) + 1);
    return {SpecialFunction::zeta, -static_cast<long>(m), std::move(value), Route::closed_form};
}

SpecialValue eta_neg(unsigned m) {
    Rational scale = (Rational::pow2(static_cast<long>(m) + 1) - Rational(1)) / Rational(static_cast<long>(m) + 1);
    return {SpecialFunction::eta, -static_cast<long>(m), scale * bernoulli_number(m + 1), Route::closed_form};
}

EulerOracle::EulerOracle()
    : fn_(Polynomial::monomial(1, 1), Polynomial(std::vector<Rational>{1, 1})) {}

void EulerOracle::advance() {
    fn_ = fn_.euler_step();
    ++order_;
}

Rational eta_euler_oracle(unsigned m) {
    EulerOracle oracle;
    while (oracle.order() < m)
        oracle.advance();
    return oracle.value();
}

Rational functional_relation_residual(unsigned m) {
    Rational factor = Rational(1) - Rational::pow2(static_cast<long>(m) + 1);
    return eta_neg(m).value - factor * zeta_neg(m).value;
}

} // namespace zetasum
