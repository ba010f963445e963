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

#ifndef ZETASUM_PARSER_HPP
#define ZETASUM_PARSER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zetasum/polynomial.hpp"
#include "zetasum/rational.hpp"

namespace zetasum {

/// Syntax, unknown-identifier, and arity errors, with the offset into the
/// input where parsing stopped.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t position);
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Numeric evaluation failures: division by zero, a non-integer exponent
/// on a negative base, and similar.
class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace ast {
struct Node;
using NodePtr = std::unique_ptr<const Node>;
} // namespace ast

/**
 * A parsed expression in one declared variable.
 *
 * Grammar, loosest to tightest: additive, multiplicative, unary minus,
 * power (right-associative: 2^u^2 is 2^(u^2)), atom. Atoms are unsigned
 * integer literals, the variable, sin/cos/tan/exp/abs calls, and
 * parenthesized expressions (folded away). Fractions like 1/2 come from
 * the division operator; constant subtrees fold to a single rational at
 * parse time. Implicit multiplication is rejected. A power needs an
 * integer-constant exponent unless its base is a constant.
 */
class ParsedExpr {
  public:
    static ParsedExpr parse(std::string_view text, std::string_view var_name);

    /// Double-precision evaluation at x; (-1)^u is exactly +-1 for
    /// integer-valued u. Throws EvalError.
    double eval(double x) const;

    /**
     * The exact polynomial this expression denotes, when it is one
     * (closed under +, -, *, integer powers, and division by nonzero
     * constants); nullopt otherwise, never an approximation.
     */
    std::optional<Polynomial> as_polynomial() const;

    /// Canonical text; parsing it back yields a structurally identical tree.
    std::string to_string() const;

    const std::string& variable() const { return var_; }

    friend bool operator==(const ParsedExpr& a, const ParsedExpr& b);

    ParsedExpr(ParsedExpr&&) noexcept;
    ParsedExpr& operator=(ParsedExpr&&) noexcept;
    ~ParsedExpr();

  private:
    ParsedExpr(ast::NodePtr root, std::string var);

    ast::NodePtr root_;
    std::string var_;
};

inline ParsedExpr parse_expr(std::string_view text, std::string_view var_name) {
    return ParsedExpr::parse(text, var_name);
}

} // namespace zetasum

#endif
