#pragma once

#include "quivalg/scalar.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace quivalg {

/* Expression AST for the command-line surface.

   expr   := ["-"] term (("+" | "-") term)*
   term   := factor ("*" factor)*
   factor := atom ("^" INT)?
   atom   := RATIONAL | "p_" NAME | NAME | NAME "~" | "bar(" NAME ")"
           | "inv(" expr ")" | "(" expr ")"

   RATIONAL is INT or INT "/" INT (unsigned); NAME is [A-Za-z_][A-Za-z0-9_]*.
   "p_X" is always read as the vertex idempotent at X. NAME "~" and
   "bar(NAME)" both denote the barred arrow. Whitespace is insignificant. */
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Rational,
    VertexIdem,
    ArrowRef,
    BarArrow,
    Neg, // leading minus only
    Inv,
    Add,
    Sub,
    Mul,
    Pow,
  };

  Kind kind;
  Scalar value;       // Rational
  std::string name;   // VertexIdem / ArrowRef / BarArrow
  ExprPtr lhs, rhs;   // binary ops; lhs also for Neg / Inv / Pow base
  uint32_t exponent = 0;
};

ExprPtr expr_rational(const Scalar& v);
ExprPtr expr_vertex_idem(const std::string& name);
ExprPtr expr_arrow(const std::string& name);
ExprPtr expr_bar_arrow(const std::string& name);
ExprPtr expr_neg(ExprPtr e);
ExprPtr expr_inv(ExprPtr e);
ExprPtr expr_add(ExprPtr l, ExprPtr r);
ExprPtr expr_sub(ExprPtr l, ExprPtr r);
ExprPtr expr_mul(ExprPtr l, ExprPtr r);
ExprPtr expr_pow(ExprPtr base, uint32_t k);

ExprPtr parse_expr(const std::string& text); // throws ParseError

/* Canonical printing; parse_expr(print_expr(e)) reproduces e. */
std::string print_expr(const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

} // namespace quivalg
