#pragma once

#include "quivalg/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace quivalg {

/* A power series known exactly up to path length trunc_order. trunc_order
   -1 means "no information" (it only arises from transductions of order-0
   truncations); every stored term has length <= trunc_order. */
class TruncSeries {
public:
  TruncSeries(QuiverPtr E, int trunc_order);

  const QuiverPtr& quiver() const { return E_; }
  int trunc_order() const { return trunc_order_; }
  const std::map<Path, Scalar, PathOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Path& p) const;
  void add_term(const Path& p, const Scalar& c); // drops terms beyond order

private:
  QuiverPtr E_;
  int trunc_order_;
  std::map<Path, Scalar, PathOrder> terms_;
};

TruncSeries trunc_of_poly(const PolyElement& x, int order);
TruncSeries ts_zero(QuiverPtr E, int order);
TruncSeries ts_one(QuiverPtr E, int order);

/* Mixed orders are combined at min(order_x, order_y). */
TruncSeries ts_add(const TruncSeries& x, const TruncSeries& y);
TruncSeries ts_sub(const TruncSeries& x, const TruncSeries& y);
TruncSeries ts_neg(const TruncSeries& x);
TruncSeries ts_scale(const Scalar& c, const TruncSeries& x);
TruncSeries ts_mul(const TruncSeries& x, const TruncSeries& y);
TruncSeries ts_retrunc(const TruncSeries& x, int order); // order <= x order

VertexVector ts_augmentation(const TruncSeries& x);

/* Geometric-series inverse eps(x)^{-1} sum_k (D eps(x)^{-1})^k truncated at
   the stored order; requires eps(x) invertible in K^d. */
TruncSeries ts_invert(const TruncSeries& x);

/* Equality of stored data at the common reliability order. */
bool ts_eq(const TruncSeries& x, const TruncSeries& y);

/* Transductions; reliability (and stored order) drop by one. */
TruncSeries ts_delta(const TruncSeries& x, uint32_t arrow);
TruncSeries ts_delta_tilde(const TruncSeries& x, uint32_t arrow);
VertexVector ts_tau(const TruncSeries& x, uint32_t arrow);

std::string ts_to_string(const TruncSeries& x);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return ts_add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return ts_sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return ts_mul(a, b); }

using SeriesMatrix = Matrix<TruncSeries>;

SeriesMatrix trunc_of_poly_matrix(const PolyMatrix& M, int order);
SeriesMatrix ts_matrix_identity(QuiverPtr E, size_t n, int order);

/* Matrix inverse over truncated series: requires eps(M) invertible in
   M_n(K^d) (throws NotInvertible otherwise). */
SeriesMatrix ts_matrix_invert(const SeriesMatrix& M);

} // namespace quivalg
