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

#include "zetasum/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace zetasum {

namespace {

std::mutex table_mutex;

// Pascal's triangle, row n holds C(n, 0..n).
std::vector<std::vector<mpz_class>>& pascal_rows() {
    static std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};
    return rows;
}

const std::vector<mpz_class>& pascal_row_locked(unsigned n) {
    auto& rows = pascal_rows();
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> row(prev.size() + 1, mpz_class(1));
        for (std::size_t i = 1; i < prev.size(); ++i)
            row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n];
}

// B_0..B_k, grown on demand. Index 1 holds +1/2; see bernoulli_number().
std::vector<Rational>& bernoulli_table_locked(unsigned k) {
    static std::vector<Rational> table{Rational(1), Rational(1, 2)};
    while (table.size() <= k) {
        // Solve sum_{u=0}^{m-1} C(m, u) B_u = 0 for B_{m-1}, where m-1 is
        // the next index and the classical sign convention applies.
        const unsigned m = static_cast<unsigned>(table.size()) + 1;
        const auto& row = pascal_row_locked(m);
        Rational acc = 0;
        for (unsigned u = 0; u + 2 <= m; ++u) {
            Rational b = u == 1 ? Rational(-1, 2) : table[u];
            acc += Rational(row[u]) * b;
        }
        table.push_back(-acc / Rational(row[m - 1]));
    }
    return table;
}

} // namespace

mpz_class binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    std::lock_guard lock(table_mutex);
    return pascal_row_locked(n)[k];
}

Rational bernoulli_number(unsigned k) {
    std::lock_guard lock(table_mutex);
    return bernoulli_table_locked(k)[k];
}

Polynomial power_sum_poly(unsigned k) {
    // (1/(k+1)) sum_{u=0}^{k} C(k+1, u) B_u n^{k+1-u}, with B_1 = +1/2.
    std::vector<Rational> coeffs(k + 2, Rational(0));
    const Rational scale(1, static_cast<long>(k) + 1);
    for (unsigned u = 0; u <= k; ++u) {
        Rational c = scale * Rational(binomial(k + 1, u)) * bernoulli_number(u);
        coeffs[k + 1 - u] = c;
    }
    return Polynomial(std::move(coeffs));
}

namespace {

// Shared by the closed form and its parity branches:
// sum_{u=1}^{k} (2^u - 1) C(k, u) B_u n^{k-u}, as a polynomial in n.
Polynomial alternating_correction_poly(unsigned k) {
    std::vector<Rational> coeffs(k, Rational(0));
    mpz_class two_pow = 1;
    for (unsigned u = 1; u <= k; ++u) {
        two_pow *= 2;
        Rational c = Rational(mpz_class(two_pow - 1)) * Rational(binomial(k, u)) * bernoulli_number(u);
        if (u < k)
            coeffs[k - u] = c;
        else
            coeffs[0] = coeffs[0] + c;
    }
    return Polynomial(std::move(coeffs));
}

Rational alternating_constant(unsigned k) {
    return (Rational::pow2(k) - Rational(1)) / Rational(static_cast<long>(k)) * bernoulli_number(k);
}

} // namespace

Rational alternating_power_sum(unsigned k, std::uint64_t n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("alternating_power_sum: requires k >= 1 and n >= 1");
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    Polynomial correction = alternating_correction_poly(k);
    Rational at_n = correction.eval(Rational(mpz_class(static_cast<unsigned long>(n))));
    return alternating_constant(k) - sign / Rational(static_cast<long>(k)) * at_n;
}

std::pair<Polynomial, Polynomial> parity_branch_polys(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("parity_branch_polys: requires k >= 1");
    Polynomial constant = Polynomial::constant(alternating_constant(k));
    Polynomial scaled = Rational(1, static_cast<long>(k)) * alternating_correction_poly(k);
    return {constant - scaled, constant + scaled};
}

} // namespace zetasum
