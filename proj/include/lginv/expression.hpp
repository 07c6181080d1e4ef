#pragma once

#include "lginv/series.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lginv {

// Parse failure with a 1-based character position into the source text.
class ExpressionError : public std::runtime_error {
public:
    ExpressionError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Series-expression AST.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' uint)?
//   atom   := rational | x<j> | '(' expr ')' | 'inv' '(' expr ')'
//           | 'exp' '(' expr ')'
//
// Precedence: ^ binds tighter than unary minus, which binds tighter than *,
// which binds tighter than + and -. A rational literal is a single token
// "p" or "p/q"; '/' is not an operator, so "x1/3" is a syntax error and the
// intended series must be written "(1/3)*x1".
struct ExprNode {
    enum class Kind { literal, variable, add, sub, mul, neg, pow, inv, exp };

    Kind kind;
    Rational value;            // literal
    std::size_t var = 0;       // variable (0-based)
    unsigned long exponent = 0;  // pow
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

using ExprPtr = std::unique_ptr<ExprNode>;

// Parses src against the grammar above. Variables are x1..x<var_count>;
// anything else (unknown identifier, x0, an index past var_count) is an
// ExpressionError carrying the offending position.
ExprPtr parse_expression(std::string_view src, std::size_t var_count);

// Evaluates the AST in the truncated series ring. Argument constraints of
// inv (unit constant term) and exp (zero constant term) are checked here,
// not at parse time.
TruncatedSeries evaluate(const ExprNode& node, std::size_t var_count, unsigned degree_cap);

}  // namespace lginv
