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

#ifndef ZETASUM_RATIONAL_HPP
#define ZETASUM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zetasum {

/**
 * Arbitrary-precision signed rational, always in lowest terms.
 *
 * Invariants: gcd(|num|, den) == 1, den > 0, zero is 0/1. Every operation
 * re-canonicalizes, so the invariants hold after construction and after
 * each arithmetic step. Values are immutable in spirit: all operators
 * return new values and no method exposes mutable internals.
 */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                     // NOLINT: implicit by design
    Rational(long n, long d) : v_(n, d) { canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { canonicalize(); }

    /// Parses the canonical text form: optional '-', digits, optional "/digits".
    static Rational from_string(std::string_view text);

    /// 2^e for any integer e (negative exponents give exact fractions).
    static Rational pow2(long e);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational abs() const { return Rational(mpq_class(::abs(v_)), already_canonical{}); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    /// Integer power; e may be negative for nonzero values.
    Rational pow(long e) const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical text: "-p/q" with "/q" omitted when q == 1 (e.g. "-1/12", "0", "3").
    std::string to_string() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

  private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    void canonicalize();

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace zetasum

#endif
