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

#include "zetasum/ordering.hpp"

#include <stdexcept>
#include <string>

namespace zetasum {

namespace {

constexpr std::int64_t kMaxAbs = std::int64_t(1) << 62;

void check_range(std::int64_t u) {
    if (u < -kMaxAbs || u > kMaxAbs)
        throw std::out_of_range("ordering: integer " + std::to_string(u) + " outside supported range +-2^62");
}

// Strict comparison without the equality guard; negatives sort after
// non-negatives, each side ascending.
bool before(std::int64_t a, std::int64_t b) {
    const bool a_neg = a < 0;
    const bool b_neg = b < 0;
    if (a_neg != b_neg)
        return b_neg;
    return a < b;
}

} // namespace

bool precedes(std::int64_t a, std::int64_t b) {
    check_range(a);
    check_range(b);
    if (a == b)
        throw std::invalid_argument("precedes: " + std::to_string(a) + " is not strictly comparable with itself");
    return before(a, b);
}

bool precedes_or_equal(std::int64_t a, std::int64_t b) {
    check_range(a);
    check_range(b);
    return a == b || before(a, b);
}

std::int64_t successor(std::int64_t u) {
    check_range(u);
    if (u == -1)
        throw std::domain_error("successor: the order ends at -1");
    return u + 1;
}

CyclicInterval::CyclicInterval(std::int64_t first, std::int64_t last) : first_(first), last_(last) {
    check_range(first);
    check_range(last);
    kind_ = (first == last || before(first, last)) ? Kind::forward : Kind::wraparound;
}

CyclicInterval interval(std::int64_t a, std::int64_t b) {
    return CyclicInterval(a, b);
}

bool CyclicInterval::contains(std::int64_t u) const {
    check_range(u);
    auto strictly = [](std::int64_t x, std::int64_t y) { return x != y && before(x, y); };
    if (kind_ == Kind::forward)
        return !strictly(u, first_) && !strictly(last_, u);
    return !(strictly(last_, u) && strictly(u, first_));
}

bool CyclicInterval::finite() const {
    if (kind_ == Kind::forward)
        return (first_ < 0) == (last_ < 0);
    return first_ < 0 && last_ >= 0;
}

std::uint64_t CyclicInterval::size() const {
    if (!finite())
        throw std::domain_error("CyclicInterval: infinite interval has no size");
    if (kind_ == Kind::forward)
        return static_cast<std::uint64_t>(last_ - first_) + 1;
    return static_cast<std::uint64_t>(last_ + 1) + static_cast<std::uint64_t>(-first_);
}

CyclicInterval::iterator CyclicInterval::begin() const {
    if (!finite())
        throw std::domain_error("CyclicInterval: cannot iterate an infinite interval");
    // Precedence order: a wraparound arc contains 0, which comes first.
    std::int64_t head = kind_ == Kind::forward ? first_ : 0;
    return iterator(head, this, false);
}

CyclicInterval::iterator CyclicInterval::end() const {
    return iterator(0, this, true);
}

CyclicInterval::iterator& CyclicInterval::iterator::operator++() {
    const CyclicInterval& g = *owner_;
    std::int64_t stop = g.kind() == Kind::forward ? g.last() : std::int64_t(-1);
    if (current_ == stop) {
        current_ = 0;
        done_ = true;
    } else if (g.kind() == Kind::wraparound && current_ == g.last()) {
        current_ = g.first(); // jump from the non-negative leg to the negative one
    } else {
        ++current_;
    }
    return *this;
}

CyclicInterval interval_concat(const CyclicInterval& g1, const CyclicInterval& g2) {
    if (g1.last() == -1)
        throw std::invalid_argument("interval_concat: nothing follows -1, the last element");
    if (g1.last() + 1 != g2.first())
        throw std::invalid_argument("interval_concat: intervals are not adjacent (gap after " +
                                    std::to_string(g1.last()) + ")");
    if (g1.contains(g2.first()) || g2.contains(g1.first()))
        throw std::invalid_argument("interval_concat: intervals overlap");
    return interval(g1.first(), g2.last());
}

} // namespace zetasum
