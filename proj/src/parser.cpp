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

#include "zetasum/parser.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

namespace zetasum {

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}

namespace ast {

enum class BinOp { add, sub, mul, div, pow };
enum class Func { sin, cos, tan, exp, abs };

struct Node {
    enum class Kind { literal, variable, negate, binary, call };

    Kind kind;
    Rational literal;   // kind == literal
    BinOp op{};         // kind == binary
    Func func{};        // kind == call
    NodePtr child;      // negate, call
    NodePtr lhs, rhs;   // binary
};

namespace {

NodePtr make_literal(Rational v) {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::literal;
    n->literal = std::move(v);
    return n;
}

NodePtr make_variable() {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::variable;
    return n;
}

NodePtr make_negate(NodePtr child) {
    if (child->kind == Node::Kind::literal)
        return make_literal(-child->literal);
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::negate;
    n->child = std::move(child);
    return n;
}

NodePtr make_call(Func f, NodePtr arg) {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::call;
    n->func = f;
    n->child = std::move(arg);
    return n;
}

bool is_integer_literal(const Node& n) {
    return n.kind == Node::Kind::literal && n.literal.is_integer();
}

// Binary constructor with constant folding; `pos` locates the operator
// for error reporting.
NodePtr make_binary(BinOp op, NodePtr lhs, NodePtr rhs, std::size_t pos) {
    const bool both_const = lhs->kind == Node::Kind::literal && rhs->kind == Node::Kind::literal;
    if (both_const) {
        const Rational& a = lhs->literal;
        const Rational& b = rhs->literal;
        switch (op) {
        case BinOp::add: return make_literal(a + b);
        case BinOp::sub: return make_literal(a - b);
        case BinOp::mul: return make_literal(a * b);
        case BinOp::div:
            if (b.is_zero())
                throw ParseError("division by zero in constant expression", pos);
            return make_literal(a / b);
        case BinOp::pow:
            break; // folded below with the shared exponent checks
        }
    }
    if (op == BinOp::pow) {
        const bool integer_exponent = is_integer_literal(*rhs);
        const bool constant_base = lhs->kind == Node::Kind::literal;
        if (!integer_exponent && !constant_base)
            throw ParseError("exponent must be an integer constant unless the base is a constant", pos);
        if (integer_exponent) {
            const mpz_class& e = rhs->literal.numerator();
            if (::abs(e) > 1024)
                throw ParseError("exponent magnitude is limited to 1024", pos);
            if (lhs->kind == Node::Kind::literal) {
                if (lhs->literal.is_zero() && e < 0)
                    throw ParseError("zero raised to a negative power", pos);
                return make_literal(lhs->literal.pow(e.get_si()));
            }
        }
    }
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::binary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

struct Token {
    enum class Type { number, identifier, plus, minus, star, slash, caret, lparen, rparen, comma, end };
    Type type;
    std::size_t pos;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        current_.pos = pos_;
        current_.text.clear();
        if (pos_ >= text_.size()) {
            current_.type = Token::Type::end;
            return;
        }
        char c = text_[pos_];
        switch (c) {
        case '+': current_.type = Token::Type::plus; ++pos_; return;
        case '-': current_.type = Token::Type::minus; ++pos_; return;
        case '*': current_.type = Token::Type::star; ++pos_; return;
        case '/': current_.type = Token::Type::slash; ++pos_; return;
        case '^': current_.type = Token::Type::caret; ++pos_; return;
        case '(': current_.type = Token::Type::lparen; ++pos_; return;
        case ')': current_.type = Token::Type::rparen; ++pos_; return;
        case ',': current_.type = Token::Type::comma; ++pos_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_.type = Token::Type::number;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.type = Token::Type::identifier;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
  public:
    Parser(std::string_view text, std::string_view var_name) : lexer_(text), var_(var_name) {}

    NodePtr run() {
        NodePtr e = additive();
        expect(Token::Type::end, "end of input");
        return e;
    }

  private:
    NodePtr additive() {
        NodePtr lhs = multiplicative();
        for (;;) {
            std::size_t pos = lexer_.current().pos;
            if (accept(Token::Type::plus))
                lhs = make_binary(BinOp::add, std::move(lhs), multiplicative(), pos);
            else if (accept(Token::Type::minus))
                lhs = make_binary(BinOp::sub, std::move(lhs), multiplicative(), pos);
            else
                return lhs;
        }
    }

    NodePtr multiplicative() {
        NodePtr lhs = unary();
        for (;;) {
            std::size_t pos = lexer_.current().pos;
            if (accept(Token::Type::star))
                lhs = make_binary(BinOp::mul, std::move(lhs), unary(), pos);
            else if (accept(Token::Type::slash))
                lhs = make_binary(BinOp::div, std::move(lhs), unary(), pos);
            else
                return lhs;
        }
    }

    NodePtr unary() {
        if (accept(Token::Type::minus))
            return make_negate(unary());
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        std::size_t pos = lexer_.current().pos;
        if (accept(Token::Type::caret))
            return make_binary(BinOp::pow, std::move(base), unary(), pos);
        return base;
    }

    NodePtr atom() {
        const Token& t = lexer_.current();
        switch (t.type) {
        case Token::Type::number: {
            Rational v = Rational::from_string(t.text);
            lexer_.advance();
            return make_literal(std::move(v));
        }
        case Token::Type::lparen: {
            lexer_.advance();
            NodePtr e = additive();
            expect(Token::Type::rparen, "')'");
            return e;
        }
        case Token::Type::identifier: {
            std::string name = t.text;
            std::size_t pos = t.pos;
            lexer_.advance();
            if (name == var_)
                return make_variable();
            if (auto f = function_named(name)) {
                if (!accept(Token::Type::lparen))
                    throw ParseError("expected '(' after function " + name, lexer_.current().pos);
                NodePtr arg = additive();
                if (lexer_.current().type == Token::Type::comma)
                    throw ParseError(name + " takes exactly one argument", lexer_.current().pos);
                expect(Token::Type::rparen, "')'");
                return make_call(*f, std::move(arg));
            }
            throw ParseError("unknown identifier '" + name + "' (variable is '" + var_ + "')", pos);
        }
        default:
            throw ParseError("expected a number, '" + var_ + "', a function call, or '('", t.pos);
        }
    }

    static std::optional<Func> function_named(const std::string& name) {
        if (name == "sin") return Func::sin;
        if (name == "cos") return Func::cos;
        if (name == "tan") return Func::tan;
        if (name == "exp") return Func::exp;
        if (name == "abs") return Func::abs;
        return std::nullopt;
    }

    bool accept(Token::Type type) {
        if (lexer_.current().type != type)
            return false;
        lexer_.advance();
        return true;
    }

    void expect(Token::Type type, const char* what) {
        if (lexer_.current().type != type)
            throw ParseError(std::string("expected ") + what, lexer_.current().pos);
        lexer_.advance();
    }

    Lexer lexer_;
    std::string var_;
};

double eval_node(const Node& n, double x) {
    switch (n.kind) {
    case Node::Kind::literal:
        return n.literal.to_double();
    case Node::Kind::variable:
        return x;
    case Node::Kind::negate:
        return -eval_node(*n.child, x);
    case Node::Kind::call: {
        double v = eval_node(*n.child, x);
        switch (n.func) {
        case Func::sin: return std::sin(v);
        case Func::cos: return std::cos(v);
        case Func::tan: return std::tan(v);
        case Func::exp: return std::exp(v);
        case Func::abs: return std::fabs(v);
        }
        break;
    }
    case Node::Kind::binary: {
        double a = eval_node(*n.lhs, x);
        double b = eval_node(*n.rhs, x);
        switch (n.op) {
        case BinOp::add: return a + b;
        case BinOp::sub: return a - b;
        case BinOp::mul: return a * b;
        case BinOp::div:
            if (b == 0.0)
                throw EvalError("division by zero");
            return a / b;
        case BinOp::pow:
            if (a < 0.0 && std::nearbyint(b) != b)
                throw EvalError("non-integer exponent on a negative base");
            if (a == 0.0 && b < 0.0)
                throw EvalError("zero raised to a negative power");
            return std::pow(a, b);
        }
        break;
    }
    }
    throw EvalError("malformed expression tree");
}

std::optional<Polynomial> poly_node(const Node& n) {
    switch (n.kind) {
    case Node::Kind::literal:
        return Polynomial::constant(n.literal);
    case Node::Kind::variable:
        return Polynomial::variable();
    case Node::Kind::negate: {
        auto p = poly_node(*n.child);
        if (!p)
            return std::nullopt;
        return -*p;
    }
    case Node::Kind::call:
        return std::nullopt;
    case Node::Kind::binary: {
        auto a = poly_node(*n.lhs);
        if (!a)
            return std::nullopt;
        switch (n.op) {
        case BinOp::add: {
            auto b = poly_node(*n.rhs);
            return b ? std::optional(*a + *b) : std::nullopt;
        }
        case BinOp::sub: {
            auto b = poly_node(*n.rhs);
            return b ? std::optional(*a - *b) : std::nullopt;
        }
        case BinOp::mul: {
            auto b = poly_node(*n.rhs);
            return b ? std::optional(*a * *b) : std::nullopt;
        }
        case BinOp::div: {
            auto b = poly_node(*n.rhs);
            if (!b || !b->is_constant() || b->is_zero())
                return std::nullopt;
            return b->coeff(0).inverse() * *a;
        }
        case BinOp::pow: {
            // Non-constant exponents (2^u) and negative powers of
            // non-constants are not polynomials. Constant folding already
            // handled literal^literal.
            if (!is_integer_literal(*n.rhs))
                return std::nullopt;
            const mpz_class& e = n.rhs->literal.numerator();
            if (e < 0 || !e.fits_ulong_p())
                return std::nullopt;
            return a->pow(static_cast<unsigned>(e.get_ui()));
        }
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

// Rendering precedence levels; literals that need a sign or a slash are
// wrapped so the canonical text re-parses to the same tree.
int node_precedence(const Node& n) {
    switch (n.kind) {
    case Node::Kind::literal:
        return (n.literal.sign() < 0 || !n.literal.is_integer()) ? 0 : 4;
    case Node::Kind::variable:
    case Node::Kind::call:
        return 4;
    case Node::Kind::negate:
        return 2;
    case Node::Kind::binary:
        switch (n.op) {
        case BinOp::add:
        case BinOp::sub: return 1;
        case BinOp::mul:
        case BinOp::div: return 2;
        case BinOp::pow: return 3;
        }
    }
    return 0;
}

void render(const Node& n, std::ostream& os, int parent_level, const std::string& var) {
    int level = node_precedence(n);
    bool parens = level < parent_level;
    if (parens)
        os << "(";
    switch (n.kind) {
    case Node::Kind::literal:
        os << n.literal.to_string();
        break;
    case Node::Kind::variable:
        os << var;
        break;
    case Node::Kind::negate:
        os << "-";
        render(*n.child, os, level + 1, var);
        break;
    case Node::Kind::call: {
        const char* name = n.func == Func::sin ? "sin"
                         : n.func == Func::cos ? "cos"
                         : n.func == Func::tan ? "tan"
                         : n.func == Func::exp ? "exp"
                                               : "abs";
        os << name << "(";
        render(*n.child, os, 0, var);
        os << ")";
        break;
    }
    case Node::Kind::binary: {
        const char* sym = n.op == BinOp::add ? "+"
                        : n.op == BinOp::sub ? "-"
                        : n.op == BinOp::mul ? "*"
                        : n.op == BinOp::div ? "/"
                                             : "^";
        // Left-associative except power; the tighter side gets level+1.
        int lhs_level = n.op == BinOp::pow ? level + 1 : level;
        int rhs_level = n.op == BinOp::pow ? level : level + 1;
        render(*n.lhs, os, lhs_level, var);
        os << sym;
        render(*n.rhs, os, rhs_level, var);
        break;
    }
    }
    if (parens)
        os << ")";
}

bool nodes_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Node::Kind::literal: return a.literal == b.literal;
    case Node::Kind::variable: return true;
    case Node::Kind::negate: return nodes_equal(*a.child, *b.child);
    case Node::Kind::call: return a.func == b.func && nodes_equal(*a.child, *b.child);
    case Node::Kind::binary:
        return a.op == b.op && nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
    }
    return false;
}

} // namespace
} // namespace ast

ParsedExpr::ParsedExpr(ast::NodePtr root, std::string var) : root_(std::move(root)), var_(std::move(var)) {}
ParsedExpr::ParsedExpr(ParsedExpr&&) noexcept = default;
ParsedExpr& ParsedExpr::operator=(ParsedExpr&&) noexcept = default;
ParsedExpr::~ParsedExpr() = default;

ParsedExpr ParsedExpr::parse(std::string_view text, std::string_view var_name) {
    if (text.empty())
        throw ParseError("empty expression", 0);
    ast::Parser parser(text, var_name);
    return ParsedExpr(parser.run(), std::string(var_name));
}

double ParsedExpr::eval(double x) const {
    return ast::eval_node(*root_, x);
}

std::optional<Polynomial> ParsedExpr::as_polynomial() const {
    return ast::poly_node(*root_);
}

std::string ParsedExpr::to_string() const {
    std::ostringstream os;
    ast::render(*root_, os, 0, var_);
    return os.str();
}

bool operator==(const ParsedExpr& a, const ParsedExpr& b) {
    return a.var_ == b.var_ && ast::nodes_equal(*a.root_, *b.root_);
}

} // namespace zetasum
