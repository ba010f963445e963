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

#include "zetasum/rational_function.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace zetasum {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw std::domain_error("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::div_mod(num_, g).first;
        den_ = Polynomial::div_mod(den_, g).first;
    }
    Rational lead_inv = den_.leading_coefficient().inverse();
    num_ = lead_inv * num_;
    den_ = lead_inv * den_;
}

RationalFunction RationalFunction::euler_step() const {
    // Quotient rule: (n/d)' = (n'd - nd')/d^2, then multiply by x.
    Polynomial x = Polynomial::variable();
    Polynomial top = x * (num_.derivative() * den_ - num_ * den_.derivative());
    return RationalFunction(std::move(top), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero())
        throw std::domain_error("RationalFunction: pole at " + x.to_string());
    return num_.eval(x) / d;
}

std::string RationalFunction::to_string(std::string_view var) const {
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) {
    return os << r.to_string();
}

} // namespace zetasum
