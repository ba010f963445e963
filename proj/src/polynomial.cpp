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

#include "zetasum/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zetasum {

namespace {

// Function-local static: callers include other translation units' static
// initializers, which must not observe an uninitialized value.
const Rational& zero_rational() {
    static const Rational zero = 0;
    return zero;
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero())
        p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
    Polynomial p;
    if (!c.is_zero()) {
        p.coeffs_.assign(power + 1, zero_rational());
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

const Rational& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : zero_rational();
}

Rational Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), zero_rational());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), zero_rational());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(coeffs_.size(), zero_rational());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = -coeffs_[i];
    Polynomial p;
    p.coeffs_ = std::move(c);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, zero_rational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c(p.coeffs_.size(), zero_rational());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = s * p.coeffs_[i];
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Horner in the polynomial ring: p(x+c) = (...((a_d)(x+c) + a_{d-1})(x+c) + ...).
    Polynomial acc;
    Polynomial xc(std::vector<Rational>{c, 1});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * xc + Polynomial::constant(*it);
    return acc;
}

Polynomial Polynomial::reflected() const {
    Polynomial p = *this;
    for (std::size_t i = 1; i < p.coeffs_.size(); i += 2)
        p.coeffs_[i] = -p.coeffs_[i];
    return p;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> c(coeffs_.size() - 1, zero_rational());
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Polynomial(std::move(c));
}

Rational Polynomial::integral(const Rational& lo, const Rational& hi) const {
    // Antiderivative with zero constant term, evaluated at both ends.
    std::vector<Rational> anti(coeffs_.size() + 1, zero_rational());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        anti[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    Polynomial a(std::move(anti));
    return a.eval(hi) - a.eval(lo);
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = *this;
    while (k != 0) {
        if (k & 1u)
            result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::div_mod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw std::domain_error("Polynomial: division by the zero polynomial");
    Polynomial rem = num;
    if (num.degree() < den.degree())
        return {Polynomial{}, rem};
    std::vector<Rational> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1, zero_rational());
    const Rational lead_inv = den.leading_coefficient().inverse();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
        Rational factor = rem.leading_coefficient() * lead_inv;
        q[shift] = factor;
        rem = rem - Polynomial::monomial(factor, shift) * den;
    }
    return {Polynomial(std::move(q)), rem};
}

namespace {

// Scale to a primitive integer coefficient vector (content removed).
std::vector<mpz_class> primitive_integer_coeffs(const Polynomial& p) {
    mpz_class lcm_den = 1;
    for (const Rational& c : p.coefficients())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coefficients().size());
    mpz_class content = 0;
    for (const Rational& c : p.coefficients()) {
        mpz_class v = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (content != 0)
        for (auto& v : z)
            v /= content;
    return z;
}

void make_primitive(std::vector<mpz_class>& z) {
    mpz_class content = 0;
    for (const auto& v : z)
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (auto& v : z)
            v /= content;
}

// Pseudo-remainder of primitive integer polynomials, returned primitive.
std::vector<mpz_class> primitive_pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lead = b.back();
    while (a.size() >= b.size()) {
        mpz_class top = a.back();
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            a[i] *= lead;
            if (i + b.size() >= a.size())
                a[i] -= top * b[i + b.size() - a.size()];
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0)
            a.pop_back();
        make_primitive(a);
    }
    return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        return {};
    if (a.is_zero() || b.is_zero()) {
        const Polynomial& nz = a.is_zero() ? b : a;
        return nz.leading_coefficient().inverse() * nz;
    }
    std::vector<mpz_class> u = primitive_integer_coeffs(a);
    std::vector<mpz_class> v = primitive_integer_coeffs(b);
    if (u.size() < v.size())
        std::swap(u, v);
    while (!v.empty()) {
        u = primitive_pseudo_rem(std::move(u), v);
        std::swap(u, v);
    }
    std::vector<Rational> c;
    c.reserve(u.size());
    for (const auto& z : u)
        c.emplace_back(z, u.back());
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != Rational(1))
            os << mag.to_string();
        if (i > 0) {
            if (mag != Rational(1))
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

} // namespace zetasum
