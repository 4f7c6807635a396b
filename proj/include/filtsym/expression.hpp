#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "filtsym/errors.hpp"
#include "filtsym/scalar_field.hpp"

namespace filtsym {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Op {
    Number, VarT, VarX,
    Neg, Add, Sub, Mul, Div, Pow,
    Ln, Exp, Sin, Cos, Tan, Arctan,
  };

  Op op = Op::Number;
  double value = 0.0;  // Number only
  ExprPtr lhs;         // unary operand or left child
  ExprPtr rhs;         // right child
};

/// Arithmetic expression over variables t and x.
///
/// Grammar: literals; t, x; binary + - * / ^ (^ right-associative,
/// binding tighter than unary minus, which binds tighter than * /,
/// which bind tighter than + -); unary -; ln, exp, sin, cos, tan,
/// arctan; parentheses.
///
/// parse() and str() round-trip: parse(e.str()) is structurally equal
/// to e for any parsed expression.
class FieldExpression {
 public:
  /// Throws ParseError (with a 0-based position) on lexical or
  /// syntactic failure.
  static FieldExpression parse(std::string_view src);

  /// Parse an expression in a single variable named `var` (used for
  /// diffusivity expressions in the variable p). The variable occupies
  /// the x slot of eval().
  static FieldExpression parse_univariate(std::string_view src,
                                          std::string_view var);

  double eval(double t, double x) const;
  std::string str() const;
  bool equals(const FieldExpression& other) const;

  /// View as a field on all of R^2 with stencil partials.
  ScalarField field() const;

  const ExprPtr& root() const { return root_; }
  explicit FieldExpression(ExprPtr root) : root_(std::move(root)) {}

 private:
  ExprPtr root_;
};

}  // namespace filtsym
