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

#ifndef ZETASUM_ORDERING_HPP
#define ZETASUM_ORDERING_HPP

#include <cstdint>
#include <iterator>

namespace zetasum {

/*
 * Cyclic precedence order on the integers: 0 first, then the positives
 * ascending, then the negatives ascending, with -1 last. Equivalently
 * a before b iff -1/a < -1/b, reading 1/0 as infinity. Geometrically the
 * integers close into a circle, and intervals below are arcs of it.
 *
 * The API accepts |u| <= 2^62 so that +-1 steps can never overflow;
 * anything outside is rejected loudly.
 */

/// Strict precedence a before b; throws std::invalid_argument for a == b
/// (callers wanting the reflexive order use precedes_or_equal).
bool precedes(std::int64_t a, std::int64_t b);

bool precedes_or_equal(std::int64_t a, std::int64_t b);

/// Successor in precedence order: u + 1. The order ends at -1, so
/// successor(-1) is an error, never 0.
std::int64_t successor(std::int64_t u);

/**
 * The set of integers from `first` to `last` walking forward in
 * precedence order (an arc of the circle). `forward` arcs have first
 * before-or-equal last; `wraparound` arcs pass through the final element
 * -1 and restart at 0, covering everything outside the open gap
 * (last, first).
 *
 * Finite arcs iterate in precedence order; infinite arcs expose only
 * membership, and asking them for iteration or size throws.
 */
class CyclicInterval {
  public:
    enum class Kind { forward, wraparound };

    CyclicInterval(std::int64_t first, std::int64_t last);

    std::int64_t first() const { return first_; }
    std::int64_t last() const { return last_; }
    Kind kind() const { return kind_; }

    bool contains(std::int64_t u) const;
    bool finite() const;
    /// Element count; throws std::domain_error when infinite.
    std::uint64_t size() const;

    class iterator {
      public:
        using value_type = std::int64_t;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        std::int64_t operator*() const { return current_; }
        iterator& operator++();
        friend bool operator==(const iterator&, const iterator&) = default;

      private:
        friend class CyclicInterval;
        iterator(std::int64_t current, const CyclicInterval* owner, bool done)
            : current_(current), owner_(owner), done_(done) {}

        std::int64_t current_;
        const CyclicInterval* owner_;
        bool done_;
    };

    /// Precedence-order iteration; throws std::domain_error when infinite.
    iterator begin() const;
    iterator end() const;

    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;

  private:
    std::int64_t first_;
    std::int64_t last_;
    Kind kind_;
};

/// Z_{a,b}: the arc from a to b.
CyclicInterval interval(std::int64_t a, std::int64_t b);

/**
 * Joins two disjoint arcs where the end of `g1` is immediately followed
 * by the start of `g2` (integer successor; joining across -1 is an
 * error). Throws std::invalid_argument when the arcs overlap or leave a
 * gap.
 */
CyclicInterval interval_concat(const CyclicInterval& g1, const CyclicInterval& g2);

} // namespace zetasum

#endif
