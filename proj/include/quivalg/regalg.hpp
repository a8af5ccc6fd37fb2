#pragma once

#include "quivalg/leavitt.hpp"
#include "quivalg/ratseries.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quivalg {

/* An element of the skew extension S = Rat(E)<bar arrows> in normal form
   sum_gamma bar(gamma) a_gamma, keyed by the unbarred path gamma; each
   coefficient satisfies p_{s(gamma)} a_gamma = a_gamma. Coefficients
   accumulate representations, so a stored term can still represent the zero
   series; is_zero() decides exactly. */
class SElement {
public:
  explicit SElement(QuiverPtr E);

  const QuiverPtr& quiver() const { return E_; }
  const std::map<Path, RatRep, PathOrder>& terms() const { return terms_; }

  bool is_zero() const; // exact, per coefficient
  void add_term(const Path& gamma, const RatRep& coeff); // accumulates

private:
  QuiverPtr E_;
  std::map<Path, RatRep, PathOrder> terms_;
};

SElement s_zero(QuiverPtr E);
SElement s_one(QuiverPtr E);
SElement s_from_rat(const RatRep& x);
SElement s_from_poly(const PolyElement& x);
SElement s_bar_arrow(QuiverPtr E, uint32_t a);
SElement s_bar_path(QuiverPtr E, const Path& gamma); // bar(gamma)

SElement s_add(const SElement& x, const SElement& y);
SElement s_sub(const SElement& x, const SElement& y);
SElement s_neg(const SElement& x);
SElement s_scale(const Scalar& c, const SElement& x);

/* Product in S: coefficients commute past bars one bar at a time via
   r bar(e) = bar(e) (r tau_e) + (r delta_e), which terminates in |mu|+1
   terms for each bar factor. */
SElement s_mul(const SElement& x, const SElement& y);

/* q_i = p_i - sum over incoming arrows bar(e) e; defined only at receiving
   vertices (throws QuiverError otherwise). */
SElement q_idempotent(QuiverPtr E, uint32_t v);

/* Closed form r q_i = eps_i(r) q_i. */
SElement r_times_q(const RatRep& r, uint32_t v);

/* Replace every term bar(gamma) a with |gamma| < depth and s(gamma)
   receiving by the sum over incoming arrows of bar(e gamma)(e a), repeated
   until every term has bar length depth or a non-receiving source. Preserves
   the class modulo the ideal generated by the q_i. */
SElement frontier_expand(const SElement& x, size_t depth);

struct QEqualResult {
  bool equal = false;
  size_t depth_used = 0; // the frontier depth that was compared at
};

/* Equality in Q(E) = S modulo <q_i>: expand the difference to a common
   frontier and test for the zero normal form. Default depth: 1 + the
   maximal bar length occurring in the difference. A negative verdict is
   reported at the depth used (escalate by passing a larger depth). */
QEqualResult q_equal(const SElement& x, const SElement& y,
                     std::optional<size_t> depth = std::nullopt);

/* Embedding of the Leavitt algebra into S (bars to bars, paths to
   polynomial coefficients). Composing with the quotient by <q_i> gives the
   usual inclusion L(E) -> Q(E). */
SElement s_from_leavitt(const LElement& x);

struct QRelationReport {
  size_t samples = 0;
  size_t idempotent_failures = 0;    // q_i^2 != q_i
  size_t orthogonality_failures = 0; // q_i q_j != 0
  size_t corner_failures = 0;        // q_i s q_j not in delta_ij K q_i
  bool ok() const {
    return idempotent_failures == 0 && orthogonality_failures == 0 &&
           corner_failures == 0;
  }
};

/* Random-sample check of q_i^2 = q_i, q_i q_j = 0 (i != j) and
   q_i s q_j in delta_ij K q_i. */
QRelationReport q_relation_suite(QuiverPtr E, size_t samples, uint64_t seed);

std::string s_to_string(const SElement& x, int trunc_order = 8);

inline SElement operator+(const SElement& a, const SElement& b) { return s_add(a, b); }
inline SElement operator-(const SElement& a, const SElement& b) { return s_sub(a, b); }
inline SElement operator*(const SElement& a, const SElement& b) { return s_mul(a, b); }

} // namespace quivalg
