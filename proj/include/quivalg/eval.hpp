#pragma once

#include "quivalg/expr.hpp"
#include "quivalg/leavitt.hpp"
#include "quivalg/monoid.hpp"
#include "quivalg/ratseries.hpp"
#include "quivalg/regalg.hpp"

#include <string>
#include <variant>

namespace quivalg {

enum class EvalMode { Poly, Series, Rat, Leavitt, Salg };

/* Parses "poly", "series", "rat", "leavitt", "salg"; throws ParseError. */
EvalMode eval_mode_from_string(const std::string& name);

struct EvalContext {
  EvalMode mode = EvalMode::Poly;
  QuiverPtr E;
  int series_order = 8; // truncation order for the series context
};

using EvalValue = std::variant<PolyElement, TruncSeries, RatRep, LElement, SElement>;

/* Evaluates the AST in the given context. Bars outside leavitt/salg, inv
   outside series/rat/salg, unknown names and inv of barred elements all
   raise ContextViolation / ParseError / NotInvertible. */
EvalValue eval_expr(const EvalContext& ctx, const Expr& e);

/* Canonical printing of an evaluated element; trunc_order controls how
   rational coefficients are displayed. */
std::string eval_value_to_string(const EvalValue& v, int trunc_order = 8);

/* Monoid element syntax: "0" or (INT "*")? NAME joined by "+". */
MonoidElem parse_monoid_elem(const std::string& text);

} // namespace quivalg
