#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "eudoxus/core.hpp"

namespace eudoxus {

// Abstract syntax for the expression language:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | INT | INT '/' INT | 'sqrt' '(' expr ')'
//           | '(' expr ')'
//
// Whitespace-insensitive, left-associative, standard precedence. INT '/' INT
// with both operands integer literals is an exact rational literal; any
// other '/' is division.
struct ExprNode {
    enum class Kind { IntLit, RatLit, Sqrt, Neg, Add, Sub, Mul, Div };

    Kind kind;
    BigInt int_value;                // IntLit
    Rat rat_value;                   // RatLit (canonical, den > 0)
    std::unique_ptr<ExprNode> lhs;   // unary operand / left operand
    std::unique_ptr<ExprNode> rhs;   // right operand
};

using ExprPtr = std::unique_ptr<ExprNode>;

ExprPtr make_int_lit(BigInt v);
ExprPtr make_rat_lit(Rat v);
ExprPtr make_unary(ExprNode::Kind k, ExprPtr operand);
ExprPtr make_binary(ExprNode::Kind k, ExprPtr l, ExprPtr r);
ExprPtr clone(const ExprNode& e);
bool ast_equal(const ExprNode& a, const ExprNode& b);

// Throws ParseError with a byte offset on bad input (including empty input
// and rational literals with zero denominator).
ExprPtr parse(std::string_view text);

// Unambiguous rendering; parse(to_text(e)) reproduces e.
std::string to_text(const ExprNode& e);

// Evaluate to a certified real. Integer literals embed exactly, rational
// literals via from_rational, sqrt of a nonnegative integer literal via
// sqrt_int; division goes through recip (divisor sign must be decidable
// within budget) and sqrt of anything else requires a positive operand and
// builds an oracle from bisected enclosures (certificate 3).
Real evaluate(const ExprNode& e, const Budget& b = {});

}  // namespace eudoxus
