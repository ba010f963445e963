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

#include "zetasum/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace zetasum {

void Rational::canonicalize() {
    if (sgn(v_.get_den()) == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = !num.empty() && num.front() == '-';
    if (negative)
        num.remove_prefix(1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("Rational: malformed text '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (negative)
        n = -n;
    return Rational(n, d);
}

Rational Rational::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational Rational::inverse() const {
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(std::move(r), already_canonical{});
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_), Rational::already_canonical{});
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace zetasum
