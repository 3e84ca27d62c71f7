#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "windnum/error.hpp"
#include "windnum/poly.hpp"
#include "windnum/rational.hpp"
#include "windnum/winding.hpp"

namespace windnum::cli {

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + message), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class NodeKind { Number, ImaginaryUnit, Variable, Neg, Add, Sub, Mul, Div, Pow };

/// Expression tree. Number literals are nonnegative; signs are Neg nodes.
struct Expr {
    NodeKind kind = NodeKind::Number;
    Rational number;        // Number
    unsigned exponent = 0;  // Pow
    std::unique_ptr<Expr> lhs;  // operand of Neg and Pow, left of binary ops
    std::unique_ptr<Expr> rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

bool same_tree(const Expr& a, const Expr& b);

/// Grammar, whitespace insensitive:
///   expr   := sum ('/' sum)?
///   sum    := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'i' | VAR | '(' expr ')' | '-' atom
///   rational := int ('/' uint)?    -- only when both sides are integer literals
/// Note that '-' binds tighter than '^', so -Z^2 reads as (-Z)^2.
ExprPtr parse_expr(std::string_view text, char variable = 'Z');

/// Prints a tree so that parse_expr gives back the same tree.
std::string print_expr(const Expr& e, char variable = 'Z');

/// Evaluates the tree in Q(i)(Z).
RationalFunction lower(const Expr& e);

/// Evaluates the tree as a real polynomial; rejects 'i' and non-constant
/// denominators.
RealPoly lower_real(const Expr& e);

} // namespace windnum::cli
