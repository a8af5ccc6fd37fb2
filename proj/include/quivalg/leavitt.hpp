#pragma once

#include "quivalg/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace quivalg {

/* A basis monomial bar(gamma) * nu of the Leavitt path algebra: gamma and nu
   are paths in E with a common source. Irreducible means gamma and nu do not
   both start with the distinguished arrow into their common range vertex of
   that first arrow (that product shape is the contracted relation). */
struct LMonomial {
  Path gamma;
  Path nu;

  bool operator==(const LMonomial& other) const {
    return gamma == other.gamma && nu == other.nu;
  }
};

struct LMonomialOrder {
  const Quiver* E = nullptr;
  bool operator()(const LMonomial& a, const LMonomial& b) const;
};

class LElement {
public:
  explicit LElement(QuiverPtr E);

  const QuiverPtr& quiver() const { return E_; }
  const std::map<LMonomial, Scalar, LMonomialOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  void add_term(const LMonomial& m, const Scalar& c);

  bool operator==(const LElement& other) const;

private:
  QuiverPtr E_;
  std::map<LMonomial, Scalar, LMonomialOrder> terms_;
};

LElement l_zero(QuiverPtr E);
LElement l_one(QuiverPtr E);
LElement l_vertex(QuiverPtr E, uint32_t v);
LElement l_arrow(QuiverPtr E, uint32_t a);
LElement l_bar_arrow(QuiverPtr E, uint32_t a);
LElement l_monomial(QuiverPtr E, const Path& gamma, const Path& nu, const Scalar& c);
LElement l_from_poly(const PolyElement& x);

LElement l_add(const LElement& x, const LElement& y);
LElement l_sub(const LElement& x, const LElement& y);
LElement l_neg(const LElement& x);
LElement l_scale(const Scalar& c, const LElement& x);

/* Product: cancel the middle unbarred/barred block by suffix matching, then
   contract redexes at the turn until irreducible. */
LElement l_mul(const LElement& x, const LElement& y);

/* A raw term before reduction. */
struct LRawTerm {
  Path gamma;
  Path nu;
  Scalar coeff;
};

/* Reduce a raw combination to the irreducible normal form. `pick` chooses
   which redex to contract next among the currently reducible terms (used by
   the confluence tests); by default the first in term order is taken. */
LElement l_normal_form(QuiverPtr E, const std::vector<LRawTerm>& raw,
                       const std::function<size_t(size_t)>& pick = nullptr);

/* All irreducible monomials with both path components of length <= max_len. */
std::vector<LMonomial> l_basis_up_to(const Quiver& E, size_t max_len);

/* The row (e_1 ... e_k) and column (bar e_1 ... bar e_k)^t over the incoming
   arrows of a receiving vertex: sum_j column[j]*row[j] = p_v and
   row[i]*column[j] = delta_ij p_{s(e_i)}. */
struct WitnessPair {
  std::vector<LElement> row;
  std::vector<LElement> column;
};
WitnessPair witness_basic_transformation(QuiverPtr E, uint32_t v);

/* Transport along a complete graph homomorphism f : E -> F, renormalizing in
   the target (distinguished arrows may differ). Unit goes to the sum of the
   image vertex idempotents. */
LElement induced_hom(const Quiver& E, QuiverPtr F, const GraphHom& f,
                     const LElement& x);

std::string l_to_string(const LElement& x);

inline LElement operator+(const LElement& a, const LElement& b) { return l_add(a, b); }
inline LElement operator-(const LElement& a, const LElement& b) { return l_sub(a, b); }
inline LElement operator*(const LElement& a, const LElement& b) { return l_mul(a, b); }

} // namespace quivalg
