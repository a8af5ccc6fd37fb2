#include "quivalg/expr.hpp"

#include "quivalg/errors.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quivalg {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

} // namespace

ExprPtr expr_rational(const Scalar& v) {
  Expr e{Expr::Kind::Rational, v, "", nullptr, nullptr, 0};
  return make(std::move(e));
}

ExprPtr expr_vertex_idem(const std::string& name) {
  Expr e{Expr::Kind::VertexIdem, Scalar(0), name, nullptr, nullptr, 0};
  return make(std::move(e));
}

ExprPtr expr_arrow(const std::string& name) {
  Expr e{Expr::Kind::ArrowRef, Scalar(0), name, nullptr, nullptr, 0};
  return make(std::move(e));
}

ExprPtr expr_bar_arrow(const std::string& name) {
  Expr e{Expr::Kind::BarArrow, Scalar(0), name, nullptr, nullptr, 0};
  return make(std::move(e));
}

ExprPtr expr_neg(ExprPtr x) {
  Expr e{Expr::Kind::Neg, Scalar(0), "", std::move(x), nullptr, 0};
  return make(std::move(e));
}

ExprPtr expr_inv(ExprPtr x) {
  Expr e{Expr::Kind::Inv, Scalar(0), "", std::move(x), nullptr, 0};
  return make(std::move(e));
}

ExprPtr expr_add(ExprPtr l, ExprPtr r) {
  Expr e{Expr::Kind::Add, Scalar(0), "", std::move(l), std::move(r), 0};
  return make(std::move(e));
}

ExprPtr expr_sub(ExprPtr l, ExprPtr r) {
  Expr e{Expr::Kind::Sub, Scalar(0), "", std::move(l), std::move(r), 0};
  return make(std::move(e));
}

ExprPtr expr_mul(ExprPtr l, ExprPtr r) {
  Expr e{Expr::Kind::Mul, Scalar(0), "", std::move(l), std::move(r), 0};
  return make(std::move(e));
}

ExprPtr expr_pow(ExprPtr base, uint32_t k) {
  Expr e{Expr::Kind::Pow, Scalar(0), "", std::move(base), nullptr, k};
  return make(std::move(e));
}

namespace {

struct Token {
  enum class Kind { Int, Name, Plus, Minus, Star, Slash, Caret, Tilde, LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t pos = 0;
};

[[noreturn]] void fail_at(size_t pos, const std::string& msg) {
  throw ParseError("position " + std::to_string(pos) + ": " + msg);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::Int, text.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Token::Kind::Name, text.substr(start, i - start), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::Plus; break;
      case '-': kind = Token::Kind::Minus; break;
      case '*': kind = Token::Kind::Star; break;
      case '/': kind = Token::Kind::Slash; break;
      case '^': kind = Token::Kind::Caret; break;
      case '~': kind = Token::Kind::Tilde; break;
      case '(': kind = Token::Kind::LParen; break;
      case ')': kind = Token::Kind::RParen; break;
      default: fail_at(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End) fail_at(peek().pos, "trailing input");
    return e;
  }

private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) fail_at(peek().pos, "expected " + what);
    return next();
  }

  ExprPtr expr() {
    bool negated = accept(Token::Kind::Minus);
    ExprPtr e = term();
    if (negated) e = expr_neg(std::move(e));
    while (true) {
      if (accept(Token::Kind::Plus))
        e = expr_add(std::move(e), term());
      else if (accept(Token::Kind::Minus))
        e = expr_sub(std::move(e), term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (accept(Token::Kind::Star)) e = expr_mul(std::move(e), factor());
    return e;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (!accept(Token::Kind::Caret)) return base;
    const Token& t = expect(Token::Kind::Int, "an integer exponent");
    unsigned long k;
    try {
      k = std::stoul(t.text);
    } catch (const std::exception&) {
      fail_at(t.pos, "exponent out of range");
    }
    if (k > UINT32_MAX) fail_at(t.pos, "exponent out of range");
    return expr_pow(std::move(base), static_cast<uint32_t>(k));
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::Int: {
        next();
        std::string digits = t.text;
        if (accept(Token::Kind::Slash)) {
          const Token& den = expect(Token::Kind::Int, "a denominator");
          digits += "/" + den.text;
        }
        try {
          return expr_rational(scalar_from_string(digits));
        } catch (const std::invalid_argument& e) {
          fail_at(t.pos, e.what());
        }
      }
      case Token::Kind::Name: {
        next();
        if (t.text.rfind("p_", 0) == 0) {
          std::string v = t.text.substr(2);
          if (v.empty()) fail_at(t.pos, "missing vertex name after p_");
          return expr_vertex_idem(v);
        }
        if (t.text == "bar" && peek().kind == Token::Kind::LParen) {
          next();
          const Token& name = expect(Token::Kind::Name, "an arrow name");
          expect(Token::Kind::RParen, "')'");
          return expr_bar_arrow(name.text);
        }
        if (t.text == "inv" && peek().kind == Token::Kind::LParen) {
          next();
          ExprPtr inner = expr();
          expect(Token::Kind::RParen, "')'");
          return expr_inv(std::move(inner));
        }
        if (accept(Token::Kind::Tilde)) return expr_bar_arrow(t.text);
        return expr_arrow(t.text);
      }
      case Token::Kind::LParen: {
        next();
        ExprPtr inner = expr();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      default:
        fail_at(t.pos, "expected a value");
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

/* Precedence tiers used to decide parenthesization: sums and the leading
   minus at 0, products at 1, powers at 2, atoms at 3. */
int tier(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Neg: return 0;
    case Expr::Kind::Mul: return 1;
    case Expr::Kind::Pow: return 2;
    default: return 3;
  }
}

std::string print_at(const Expr& e, int min_tier) {
  if (tier(e.kind) < min_tier) return "(" + print_at(e, 0) + ")";
  switch (e.kind) {
    case Expr::Kind::Rational: return scalar_to_string(e.value);
    case Expr::Kind::VertexIdem: return "p_" + e.name;
    case Expr::Kind::ArrowRef: return e.name;
    case Expr::Kind::BarArrow: return e.name + "~";
    case Expr::Kind::Neg: return "-" + print_at(*e.lhs, 1);
    case Expr::Kind::Inv: return "inv(" + print_at(*e.lhs, 0) + ")";
    case Expr::Kind::Add: return print_at(*e.lhs, 0) + " + " + print_at(*e.rhs, 1);
    case Expr::Kind::Sub: return print_at(*e.lhs, 0) + " - " + print_at(*e.rhs, 1);
    case Expr::Kind::Mul: return print_at(*e.lhs, 1) + "*" + print_at(*e.rhs, 2);
    case Expr::Kind::Pow:
      return print_at(*e.lhs, 3) + "^" + std::to_string(e.exponent);
  }
  return "";
}

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(lex(text)).run(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Rational: return a.value == b.value;
    case Expr::Kind::VertexIdem:
    case Expr::Kind::ArrowRef:
    case Expr::Kind::BarArrow: return a.name == b.name;
    case Expr::Kind::Neg:
    case Expr::Kind::Inv: return expr_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
      return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    case Expr::Kind::Pow:
      return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
  }
  return false;
}

} // namespace quivalg
