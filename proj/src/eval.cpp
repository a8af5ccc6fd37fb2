#include "quivalg/eval.hpp"

#include "quivalg/errors.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace quivalg {

EvalMode eval_mode_from_string(const std::string& name) {
  if (name == "poly") return EvalMode::Poly;
  if (name == "series") return EvalMode::Series;
  if (name == "rat") return EvalMode::Rat;
  if (name == "leavitt") return EvalMode::Leavitt;
  if (name == "salg") return EvalMode::Salg;
  throw ParseError("unknown context: " + name +
                   " (expected poly, series, rat, leavitt or salg)");
}

namespace {

uint32_t resolve_vertex(const QuiverPtr& E, const std::string& name) {
  auto v = E->vertex_index(name);
  if (!v) throw ParseError("unknown vertex: " + name);
  return *v;
}

uint32_t resolve_arrow(const QuiverPtr& E, const std::string& name) {
  auto a = E->arrow_index(name);
  if (!a) throw ParseError("unknown arrow: " + name);
  return *a;
}

EvalValue eval_one(const EvalContext& ctx) {
  switch (ctx.mode) {
    case EvalMode::Poly: return poly_one(ctx.E);
    case EvalMode::Series: return ts_one(ctx.E, ctx.series_order);
    case EvalMode::Rat: return rr_one(ctx.E);
    case EvalMode::Leavitt: return l_one(ctx.E);
    case EvalMode::Salg: return s_one(ctx.E);
  }
  throw ContextViolation("unreachable mode");
}

EvalValue eval_poly_atom(const EvalContext& ctx, const PolyElement& x) {
  switch (ctx.mode) {
    case EvalMode::Poly: return x;
    case EvalMode::Series: return trunc_of_poly(x, ctx.series_order);
    case EvalMode::Rat: return rr_from_poly(x);
    case EvalMode::Leavitt: return l_from_poly(x);
    case EvalMode::Salg: return s_from_poly(x);
  }
  throw ContextViolation("unreachable mode");
}

template <class T, class Fn>
EvalValue binary_on(const EvalValue& l, const EvalValue& r, Fn fn) {
  return fn(std::get<T>(l), std::get<T>(r));
}

EvalValue eval_add(const EvalContext& ctx, const EvalValue& l, const EvalValue& r) {
  switch (ctx.mode) {
    case EvalMode::Poly: return binary_on<PolyElement>(l, r, poly_add);
    case EvalMode::Series: return binary_on<TruncSeries>(l, r, ts_add);
    case EvalMode::Rat: return binary_on<RatRep>(l, r, rr_add);
    case EvalMode::Leavitt: return binary_on<LElement>(l, r, l_add);
    case EvalMode::Salg: return binary_on<SElement>(l, r, s_add);
  }
  throw ContextViolation("unreachable mode");
}

EvalValue eval_sub(const EvalContext& ctx, const EvalValue& l, const EvalValue& r) {
  switch (ctx.mode) {
    case EvalMode::Poly: return binary_on<PolyElement>(l, r, poly_sub);
    case EvalMode::Series: return binary_on<TruncSeries>(l, r, ts_sub);
    case EvalMode::Rat: return binary_on<RatRep>(l, r, rr_sub);
    case EvalMode::Leavitt: return binary_on<LElement>(l, r, l_sub);
    case EvalMode::Salg: return binary_on<SElement>(l, r, s_sub);
  }
  throw ContextViolation("unreachable mode");
}

EvalValue eval_mul(const EvalContext& ctx, const EvalValue& l, const EvalValue& r) {
  switch (ctx.mode) {
    case EvalMode::Poly: return binary_on<PolyElement>(l, r, poly_mul);
    case EvalMode::Series: return binary_on<TruncSeries>(l, r, ts_mul);
    case EvalMode::Rat: return binary_on<RatRep>(l, r, rr_mul);
    case EvalMode::Leavitt: return binary_on<LElement>(l, r, l_mul);
    case EvalMode::Salg: return binary_on<SElement>(l, r, s_mul);
  }
  throw ContextViolation("unreachable mode");
}

EvalValue eval_neg(const EvalContext& ctx, const EvalValue& x) {
  switch (ctx.mode) {
    case EvalMode::Poly: return poly_neg(std::get<PolyElement>(x));
    case EvalMode::Series: return ts_neg(std::get<TruncSeries>(x));
    case EvalMode::Rat: return rr_neg(std::get<RatRep>(x));
    case EvalMode::Leavitt: return l_neg(std::get<LElement>(x));
    case EvalMode::Salg: return s_neg(std::get<SElement>(x));
  }
  throw ContextViolation("unreachable mode");
}

/* Inversion of an S-algebra element: only elements with no surviving barred
   term invert through their rational part. */
EvalValue eval_inv_salg(const SElement& x) {
  RatRep r = rr_zero(x.quiver());
  for (const auto& [gamma, coeff] : x.terms()) {
    if (gamma.trivial()) {
      r = rr_add(r, coeff);
      continue;
    }
    if (!rr_is_zero(coeff))
      throw ContextViolation("inv of an element with barred terms");
  }
  return s_from_rat(rr_invert(r));
}

EvalValue eval_inv(const EvalContext& ctx, const EvalValue& x) {
  switch (ctx.mode) {
    case EvalMode::Series: return ts_invert(std::get<TruncSeries>(x));
    case EvalMode::Rat: return rr_invert(std::get<RatRep>(x));
    case EvalMode::Salg: return eval_inv_salg(std::get<SElement>(x));
    case EvalMode::Poly:
      throw ContextViolation("inv is not available in the poly context");
    case EvalMode::Leavitt:
      throw ContextViolation("inv is not available in the leavitt context");
  }
  throw ContextViolation("unreachable mode");
}

} // namespace

EvalValue eval_expr(const EvalContext& ctx, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Rational:
      return eval_poly_atom(ctx, poly_scalar(ctx.E, e.value));
    case Expr::Kind::VertexIdem:
      return eval_poly_atom(ctx, poly_vertex(ctx.E, resolve_vertex(ctx.E, e.name)));
    case Expr::Kind::ArrowRef:
      return eval_poly_atom(ctx, poly_arrow(ctx.E, resolve_arrow(ctx.E, e.name)));
    case Expr::Kind::BarArrow: {
      uint32_t a = resolve_arrow(ctx.E, e.name);
      if (ctx.mode == EvalMode::Leavitt) return l_bar_arrow(ctx.E, a);
      if (ctx.mode == EvalMode::Salg) return s_bar_arrow(ctx.E, a);
      throw ContextViolation("barred arrows need the leavitt or salg context");
    }
    case Expr::Kind::Neg: return eval_neg(ctx, eval_expr(ctx, *e.lhs));
    case Expr::Kind::Inv: return eval_inv(ctx, eval_expr(ctx, *e.lhs));
    case Expr::Kind::Add:
      return eval_add(ctx, eval_expr(ctx, *e.lhs), eval_expr(ctx, *e.rhs));
    case Expr::Kind::Sub:
      return eval_sub(ctx, eval_expr(ctx, *e.lhs), eval_expr(ctx, *e.rhs));
    case Expr::Kind::Mul:
      return eval_mul(ctx, eval_expr(ctx, *e.lhs), eval_expr(ctx, *e.rhs));
    case Expr::Kind::Pow: {
      EvalValue acc = eval_one(ctx);
      EvalValue base = eval_expr(ctx, *e.lhs);
      for (uint32_t i = 0; i < e.exponent; ++i) acc = eval_mul(ctx, acc, base);
      return acc;
    }
  }
  throw ContextViolation("unreachable expression kind");
}

std::string eval_value_to_string(const EvalValue& v, int trunc_order) {
  if (const auto* p = std::get_if<PolyElement>(&v)) return poly_to_string(*p);
  if (const auto* t = std::get_if<TruncSeries>(&v)) return ts_to_string(*t);
  if (const auto* r = std::get_if<RatRep>(&v))
    return ts_to_string(rr_truncate(*r, trunc_order));
  if (const auto* l = std::get_if<LElement>(&v)) return l_to_string(*l);
  return s_to_string(std::get<SElement>(v), trunc_order);
}

MonoidElem parse_monoid_elem(const std::string& text) {
  MonoidElem out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) throw ParseError("empty monoid element");
  if (text[i] == '0') {
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("trailing input after 0");
    return out;
  }
  auto read_word = [&]() -> std::string {
    size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    if (i == start) throw ParseError("expected a vertex name or multiplicity");
    return text.substr(start, i - start);
  };
  auto all_digits = [](const std::string& w) {
    for (char c : w)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  while (true) {
    skip_ws();
    std::string word = read_word();
    skip_ws();
    if (all_digits(word) && i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
      uint64_t mult;
      try {
        mult = std::stoull(word);
      } catch (const std::exception&) {
        throw ParseError("multiplicity out of range");
      }
      std::string name = read_word();
      if (mult > 0) out[name] += mult;
      skip_ws();
    } else {
      out[word] += 1;
    }
    if (i >= text.size()) return out;
    if (text[i] != '+') throw ParseError("expected + between summands");
    ++i;
  }
}

} // namespace quivalg
