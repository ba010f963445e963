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

#include "zetasum/ordering.hpp"
#include "zetasum/rational.hpp"

using zetasum::CyclicInterval;
using zetasum::interval;
using zetasum::interval_concat;
using zetasum::precedes;
using zetasum::precedes_or_equal;
using zetasum::Rational;
using zetasum::successor;

namespace {

std::vector<std::int64_t> elements(const CyclicInterval& g) {
    std::vector<std::int64_t> out;
    for (std::int64_t u : g)
        out.push_back(u);
    return out;
}

// Independent oracle for the order: a before b iff -1/a < -1/b in exact
// arithmetic, where -1/0 is minus infinity.
bool precedes_oracle(std::int64_t a, std::int64_t b) {
    if (a == 0)
        return true;
    if (b == 0)
        return false;
    return Rational(-1, static_cast<long>(a)) < Rational(-1, static_cast<long>(b));
}

} // namespace

TEST_CASE("precedence pins") {
    CHECK(precedes(3, 5));
    CHECK(precedes(7, -7));
    CHECK(precedes(-2, -1));
    CHECK(precedes(0, 1));
    CHECK(precedes(0, -1000));
    CHECK(!precedes(5, 3));
    CHECK(!precedes(-7, 7));
    CHECK(!precedes(-1, -5));
    CHECK_THROWS_AS(precedes(4, 4), std::invalid_argument);
    CHECK(precedes_or_equal(4, 4));
}

TEST_CASE("precedence matches the reciprocal oracle") {
    for (std::int64_t a = -25; a <= 25; ++a)
        for (std::int64_t b = -25; b <= 25; ++b) {
            if (a == b)
                continue;
            CHECK(precedes(a, b) == precedes_oracle(a, b));
        }
}

TEST_CASE("zero is first and -1 is last") {
    for (std::int64_t u = -40; u <= 40; ++u) {
        if (u != 0)
            CHECK(precedes(0, u));
        if (u != -1)
            CHECK(precedes(u, -1));
    }
}

TEST_CASE("successor") {
    CHECK(successor(3) == 4);
    CHECK(successor(-5) == -4);
    CHECK(successor(0) == 1);
    CHECK_THROWS_AS(successor(-1), std::domain_error);
}

TEST_CASE("integers outside the supported range are rejected") {
    const std::int64_t too_big = (std::int64_t(1) << 62) + 1;
    CHECK_THROWS_AS(precedes(too_big, 0), std::out_of_range);
    CHECK_THROWS_AS(interval(0, -too_big), std::out_of_range);
}

TEST_CASE("forward intervals") {
    CyclicInterval g = interval(1, 4);
    CHECK(g.kind() == CyclicInterval::Kind::forward);
    CHECK(g.finite());
    CHECK(g.size() == 4);
    CHECK(elements(g) == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(g.contains(1));
    CHECK(g.contains(4));
    CHECK(!g.contains(0));
    CHECK(!g.contains(5));
    CHECK(!g.contains(-1));

    CyclicInterval negatives = interval(-4, -2);
    CHECK(negatives.finite());
    CHECK(elements(negatives) == std::vector<std::int64_t>{-4, -3, -2});

    CyclicInterval singleton = interval(7, 7);
    CHECK(singleton.size() == 1);
    CHECK(elements(singleton) == std::vector<std::int64_t>{7});
}

TEST_CASE("wraparound interval spanning both sides") {
    // From -3 forward to 2: everything outside the open gap (2, -3); in
    // precedence order the non-negatives come first.
    CyclicInterval g = interval(-3, 2);
    CHECK(g.kind() == CyclicInterval::Kind::wraparound);
    CHECK(g.finite());
    CHECK(g.size() == 6);
    CHECK(elements(g) == std::vector<std::int64_t>{0, 1, 2, -3, -2, -1});
    CHECK(!g.contains(3));
    CHECK(!g.contains(-4));
}

TEST_CASE("infinite intervals expose membership but not iteration") {
    CyclicInterval g = interval(5, 2);
    CHECK(g.kind() == CyclicInterval::Kind::wraparound);
    CHECK(!g.finite());
    for (std::int64_t member : {5, 100, -1, 2, 0, 1})
        CHECK(g.contains(member));
    CHECK(!g.contains(3));
    CHECK(!g.contains(4));
    CHECK_THROWS_AS(g.begin(), std::domain_error);
    CHECK_THROWS_AS(g.size(), std::domain_error);

    // Forward across the seam: 0 before -1 but infinitely many between.
    CyclicInterval seam = interval(0, -1);
    CHECK(seam.kind() == CyclicInterval::Kind::forward);
    CHECK(!seam.finite());
    for (std::int64_t u = -30; u <= 30; ++u)
        CHECK(seam.contains(u));
}

TEST_CASE("interval from a to a-1 is all of Z") {
    for (std::int64_t a : {-50L, -3L, -1L, 0L, 1L, 2L, 17L}) {
        CyclicInterval g = interval(a, a - 1);
        for (std::int64_t u = -60; u <= 60; ++u)
            CHECK(g.contains(u));
    }
}

TEST_CASE("interval splitting against the membership oracle") {
    for (std::int64_t a = -6; a <= 6; ++a)
        for (std::int64_t c = -6; c <= 6; ++c) {
            CyclicInterval whole = interval(a, c);
            for (std::int64_t b = -6; b <= 6; ++b) {
                if (!whole.contains(b) || b == -1 || b == c)
                    continue;
                CyclicInterval left = interval(a, b);
                CyclicInterval right = interval(b + 1, c);
                for (std::int64_t u = -8; u <= 8; ++u) {
                    CHECK(whole.contains(u) == (left.contains(u) || right.contains(u)));
                    CHECK(!(left.contains(u) && right.contains(u)));
                }
            }
        }
}

TEST_CASE("interval concatenation") {
    CyclicInterval joined = interval_concat(interval(1, 3), interval(4, 6));
    CHECK(joined == interval(1, 6));

    // [0,2] then [3,-1]: the second wraps through the seam; together all of Z.
    CyclicInterval all = interval_concat(interval(0, 2), interval(3, -1));
    CHECK(all == interval(0, -1));
    for (std::int64_t u = -20; u <= 20; ++u)
        CHECK(all.contains(u));

    // Complementary arcs close the circle exactly.
    CyclicInterval circle = interval_concat(interval(3, 5), interval(6, 2));
    CHECK(circle == interval(3, 2));
    for (std::int64_t u = -10; u <= 10; ++u)
        CHECK(circle.contains(u));

    CHECK_THROWS_AS(interval_concat(interval(1, 3), interval(5, 6)), std::invalid_argument);
    CHECK_THROWS_AS(interval_concat(interval(0, 3), interval(4, 1)), std::invalid_argument);
    CHECK_THROWS_AS(interval_concat(interval(5, -1), interval(0, 2)), std::invalid_argument);
}
