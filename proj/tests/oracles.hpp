#pragma once

/* Independent reference models the tests compare the library against:
   a naive word-indexed series for one-vertex quivers, the 2x2 matrix model
   of the two-vertex chain algebra, the Laurent model of the loop, and the
   shared random generators. Everything here is deliberately simple and
   avoids the code paths under test. */

#include "quivalg/expr.hpp"
#include "quivalg/leavitt.hpp"
#include "quivalg/poly.hpp"
#include "quivalg/ratseries.hpp"
#include "quivalg/regalg.hpp"
#include "quivalg/series.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace quivalg::oracle {

/* ---- word series over a one-vertex quiver ------------------------------ */

using Word = std::vector<uint32_t>;
using WordSeries = std::map<Word, Scalar>;

inline void ws_accum(WordSeries& s, const Word& w, const Scalar& c) {
  Scalar next = s.count(w) ? Scalar(s[w] + c) : c;
  if (scalar_is_zero(next))
    s.erase(w);
  else
    s[w] = next;
}

inline WordSeries ws_add(const WordSeries& a, const WordSeries& b) {
  WordSeries out = a;
  for (const auto& [w, c] : b) ws_accum(out, w, c);
  return out;
}

inline WordSeries ws_scale(const Scalar& k, const WordSeries& a) {
  WordSeries out;
  for (const auto& [w, c] : a) ws_accum(out, w, k * c);
  return out;
}

inline WordSeries ws_mul(const WordSeries& a, const WordSeries& b, size_t order) {
  WordSeries out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa.size() + wb.size() > order) continue;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      ws_accum(out, w, ca * cb);
    }
  return out;
}

/* Geometric inverse: a = c - D with constant c != 0 and o(D) >= 1 gives
   a^{-1} = sum_k D^k / c^{k+1} up to the order. */
inline WordSeries ws_invert(const WordSeries& a, size_t order) {
  Scalar c = a.count(Word{}) ? a.at(Word{}) : scalar_zero();
  WordSeries d;
  for (const auto& [w, coeff] : a)
    if (!w.empty()) ws_accum(d, w, -coeff);
  WordSeries out, pow;
  pow[Word{}] = scalar_one();
  Scalar cpow = 1 / c;
  for (size_t k = 0; k <= order; ++k) {
    out = ws_add(out, ws_scale(cpow, pow));
    pow = ws_mul(pow, d, order);
    cpow /= c;
  }
  return out;
}

/* Strip one trailing letter. */
inline WordSeries ws_delta(const WordSeries& a, uint32_t e) {
  WordSeries out;
  for (const auto& [w, c] : a) {
    if (w.empty() || w.back() != e) continue;
    ws_accum(out, Word(w.begin(), w.end() - 1), c);
  }
  return out;
}

/* Strip one leading letter. */
inline WordSeries ws_delta_tilde(const WordSeries& a, uint32_t e) {
  WordSeries out;
  for (const auto& [w, c] : a) {
    if (w.empty() || w.front() != e) continue;
    ws_accum(out, Word(w.begin() + 1, w.end()), c);
  }
  return out;
}

inline WordSeries ws_truncate(const WordSeries& a, size_t order) {
  WordSeries out;
  for (const auto& [w, c] : a)
    if (w.size() <= order) ws_accum(out, w, c);
  return out;
}

inline WordSeries ws_of_poly(const PolyElement& x) {
  WordSeries out;
  for (const auto& [p, c] : x.terms()) ws_accum(out, p.arrows, c);
  return out;
}

inline WordSeries ws_of_ts(const TruncSeries& x) {
  WordSeries out;
  for (const auto& [p, c] : x.terms()) ws_accum(out, p.arrows, c);
  return out;
}

/* ---- matrix model of the two-vertex chain ------------------------------ */

/* Vertex i maps to E_ii, the arrow to E_01, its bar to E_10. The bar-monomial
   basis of the chain algebra hits every matrix unit, so this model is exact
   and faithful. */
inline Matrix<Scalar> a2_model(const LElement& x) {
  Matrix<Scalar> out(2, 2, scalar_zero());
  auto unit = [](size_t i, size_t j) {
    Matrix<Scalar> m(2, 2, scalar_zero());
    m.at(i, j) = scalar_one();
    return m;
  };
  for (const auto& [m, c] : x.terms()) {
    Matrix<Scalar> acc =
        m.gamma.trivial() ? unit(m.gamma.base_vertex, m.gamma.base_vertex)
                          : unit(1, 0);
    Matrix<Scalar> right =
        m.nu.trivial() ? unit(m.nu.base_vertex, m.nu.base_vertex) : unit(0, 1);
    acc = mat_mul(acc, right);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) out.at(i, j) += c * acc.at(i, j);
  }
  return out;
}

/* ---- Laurent model of the loop ------------------------------------------ */

/* The loop algebra with bars is the Laurent polynomials: the loop maps to z,
   its bar to z^{-1}. A monomial bar(gamma) nu lands on z^{|nu| - |gamma|}. */
using Laurent = std::map<int64_t, Scalar>;

inline Laurent loop_model(const LElement& x) {
  Laurent out;
  for (const auto& [m, c] : x.terms()) {
    int64_t deg = int64_t(m.nu.length()) - int64_t(m.gamma.length());
    Scalar next = out.count(deg) ? Scalar(out[deg] + c) : c;
    if (scalar_is_zero(next))
      out.erase(deg);
    else
      out[deg] = next;
  }
  return out;
}

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) {
      Scalar next = ca * cb;
      if (out.count(da + db)) next += out[da + db];
      if (scalar_is_zero(next))
        out.erase(da + db);
      else
        out[da + db] = next;
    }
  return out;
}

/* ---- random generators --------------------------------------------------- */

inline Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  Scalar s(n, den(rng));
  s.canonicalize();
  return s;
}

/* Random walk from a random start; stops early at a vertex with no
   outgoing arrow. */
inline Path random_path(const Quiver& E, std::mt19937_64& rng, size_t max_len) {
  std::uniform_int_distribution<size_t> vd(0, E.num_vertices() - 1);
  std::uniform_int_distribution<size_t> ld(0, max_len);
  uint32_t v = uint32_t(vd(rng));
  Path p = trivial_path(E, v);
  size_t len = ld(rng);
  for (size_t step = 0; step < len; ++step) {
    std::vector<uint32_t> out;
    for (uint32_t a = 0; a < E.num_arrows(); ++a)
      if (E.source(a) == v) out.push_back(a);
    if (out.empty()) break;
    uint32_t a = out[rng() % out.size()];
    p.arrows.push_back(a);
    v = E.range(a);
  }
  return p;
}

inline PolyElement random_poly(QuiverPtr E, std::mt19937_64& rng, size_t max_len,
                               size_t max_terms) {
  PolyElement out(E);
  std::uniform_int_distribution<size_t> td(0, max_terms);
  size_t terms = td(rng);
  for (size_t i = 0; i < terms; ++i)
    out.add_term(random_path(*E, rng, max_len), random_scalar(rng));
  return out;
}

/* A pair of paths out of a common source, for bar monomials. */
inline LElement random_leavitt(QuiverPtr E, std::mt19937_64& rng, size_t max_len,
                               size_t max_terms) {
  std::vector<LRawTerm> raw;
  std::uniform_int_distribution<size_t> td(0, max_terms);
  size_t terms = td(rng);
  for (size_t i = 0; i < terms; ++i) {
    Path gamma = random_path(*E, rng, max_len);
    Path nu = random_path(*E, rng, max_len);
    nu.base_vertex = gamma.base_vertex;
    nu.arrows.clear();
    uint32_t v = gamma.base_vertex;
    std::uniform_int_distribution<size_t> ld(0, max_len);
    size_t len = ld(rng);
    for (size_t step = 0; step < len; ++step) {
      std::vector<uint32_t> out;
      for (uint32_t a = 0; a < E->num_arrows(); ++a)
        if (E->source(a) == v) out.push_back(a);
      if (out.empty()) break;
      uint32_t a = out[rng() % out.size()];
      nu.arrows.push_back(a);
      v = E->range(a);
    }
    raw.push_back({gamma, nu, random_scalar(rng)});
  }
  return l_normal_form(E, raw);
}

/* Random rational representation: polynomials at depth 0, otherwise sums,
   products, and inverses of shallower ones. The inverse branch recenters the
   augmentation at 1 so the precondition always holds. */
inline RatRep random_rat(QuiverPtr E, std::mt19937_64& rng, size_t depth) {
  if (depth == 0) return rr_from_poly(random_poly(E, rng, 2, 3));
  switch (rng() % 3) {
    case 0:
      return rr_add(random_rat(E, rng, depth - 1), random_rat(E, rng, depth - 1));
    case 1:
      return rr_mul(random_rat(E, rng, depth - 1), random_rat(E, rng, depth - 1));
    default: {
      RatRep r = random_rat(E, rng, depth - 1);
      RatRep centered =
          rr_sub(r, rr_from_poly(poly_from_vv(rr_augmentation(r))));
      return rr_invert(rr_add(rr_one(E), centered));
    }
  }
}

inline SElement random_s(QuiverPtr E, std::mt19937_64& rng, size_t max_bar_len,
                         size_t max_terms, size_t rat_depth) {
  SElement out = s_zero(E);
  std::uniform_int_distribution<size_t> td(0, max_terms);
  size_t terms = td(rng);
  for (size_t i = 0; i < terms; ++i) {
    Path gamma = random_path(*E, rng, max_bar_len);
    SElement part = s_mul(s_bar_path(E, gamma),
                          s_from_rat(random_rat(E, rng, rat_depth)));
    out = s_add(out, part);
  }
  return out;
}

/* Grammar-shaped random AST. Rational leaves stay nonnegative: a negative
   literal prints as "-n", which the grammar reads back as a leading minus. */
inline ExprPtr random_ast(std::mt19937_64& rng, int depth) {
  static const std::vector<std::string> arrows = {"a", "b", "e", "f1", "w0"};
  static const std::vector<std::string> vertices = {"1", "2", "v", "x_1"};
  if (depth == 0 || rng() % 4 == 0) {
    switch (rng() % 4) {
      case 0: {
        Scalar s = random_scalar(rng);
        if (s < 0) s = -s;
        return expr_rational(s);
      }
      case 1: return expr_vertex_idem(vertices[rng() % vertices.size()]);
      case 2: return expr_arrow(arrows[rng() % arrows.size()]);
      default: return expr_bar_arrow(arrows[rng() % arrows.size()]);
    }
  }
  switch (rng() % 6) {
    case 0: return expr_neg(random_ast(rng, depth - 1));
    case 1: return expr_inv(random_ast(rng, depth - 1));
    case 2: return expr_add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 3: return expr_sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 4: return expr_mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    default: return expr_pow(random_ast(rng, depth - 1), uint32_t(rng() % 5));
  }
}

inline QuiverPtr random_quiver(std::mt19937_64& rng, size_t max_vertices,
                               size_t max_arrows) {
  std::uniform_int_distribution<size_t> vd(1, max_vertices);
  std::uniform_int_distribution<size_t> ad(0, max_arrows);
  size_t nv = vd(rng);
  std::vector<VertexId> vertices;
  for (size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
  size_t na = ad(rng);
  std::vector<std::tuple<ArrowId, VertexId, VertexId>> arrows;
  for (size_t i = 0; i < na; ++i)
    arrows.emplace_back("a" + std::to_string(i), vertices[rng() % nv],
                        vertices[rng() % nv]);
  return build_quiver(vertices, arrows);
}

} // namespace quivalg::oracle
