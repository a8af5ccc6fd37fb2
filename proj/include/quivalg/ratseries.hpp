#pragma once

#include "quivalg/series.hpp"

#include <cstdint>
#include <optional>

namespace quivalg {

/* A rational power series presented as b A^{-1} c with b (1 x n), A (n x n),
   c (n x 1) over P(E) and eps(A) invertible in M_n(K^d). The construction
   validates that invertibility once and keeps the witness dimension. */
class RatRep {
public:
  RatRep(PolyMatrix b, PolyMatrix A, PolyMatrix c);

  const QuiverPtr& quiver() const;
  size_t dim() const { return A_.rows(); }

  const PolyMatrix& b() const { return b_; }
  const PolyMatrix& A() const { return A_; }
  const PolyMatrix& c() const { return c_; }

private:
  PolyMatrix b_, A_, c_;
};

RatRep rr_from_poly(const PolyElement& x);
RatRep rr_zero(QuiverPtr E);
RatRep rr_one(QuiverPtr E);

RatRep rr_add(const RatRep& x, const RatRep& y);   // block diagonal sum
RatRep rr_neg(const RatRep& x);
RatRep rr_sub(const RatRep& x, const RatRep& y);
RatRep rr_scale(const Scalar& c, const RatRep& x);
RatRep rr_mul(const RatRep& x, const RatRep& y);   // the [[A1, -c1 b2],[0, A2]] glue
/* Left/right multiplication by an element of K^d (acts on the border). */
RatRep rr_scale_left_vv(const VertexVector& w, const RatRep& x);
RatRep rr_scale_right_vv(const RatRep& x, const VertexVector& w);

/* Truncation to a series of the given order. */
TruncSeries rr_truncate(const RatRep& x, int order);

/* Augmentation of the represented series: eps(b) eps(A)^{-1} eps(c). */
VertexVector rr_augmentation(const RatRep& x);

/* Inverse via the bordered matrix [[A, c],[b, 0]]; requires the augmentation
   of the value to be invertible in K^d (throws NotInvertible). */
RatRep rr_invert(const RatRep& x);

/* Transductions at the representation level. */
RatRep rr_delta(const RatRep& x, uint32_t arrow);
RatRep rr_delta_tilde(const RatRep& x, uint32_t arrow);
VertexVector rr_tau(const RatRep& x, uint32_t arrow);

/* State count of the unit-length linearization: dim * num_vertices plus one
   state per stored arrow occurrence. Two represented series are equal iff
   their truncations agree up to rr_linear_dim(x) + rr_linear_dim(y); the
   equality decision below reaches the same verdict without expanding paths,
   by closing the reachable row space of that linearization. */
size_t rr_linear_dim(const RatRep& x);

/* Exact equality of the represented series. */
bool rr_equals(const RatRep& x, const RatRep& y);
bool rr_is_zero(const RatRep& x);

using RatMatrix = Matrix<RatRep>;

RatMatrix rat_matrix_from_poly(const PolyMatrix& M);
RatMatrix rat_matrix_identity(QuiverPtr E, size_t n);
bool rat_matrix_equals(const RatMatrix& X, const RatMatrix& Y);

/* Inverse of a matrix of rational series: stacks the entry representations
   into one bordered system. Requires eps of the value matrix invertible in
   M_k(K^d) (throws NotInvertible). */
RatMatrix rr_matrix_invert(const RatMatrix& M);

inline RatRep operator+(const RatRep& a, const RatRep& b) { return rr_add(a, b); }
inline RatRep operator-(const RatRep& a, const RatRep& b) { return rr_sub(a, b); }
inline RatRep operator*(const RatRep& a, const RatRep& b) { return rr_mul(a, b); }

} // namespace quivalg
