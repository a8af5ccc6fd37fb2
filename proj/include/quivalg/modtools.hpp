#pragma once

#include "quivalg/ratseries.hpp"

#include <cstddef>
#include <vector>

namespace quivalg {

/* Result of Higman linearization: L = P (M + I_ell) Q with all entries of L
   of path length <= 1, P and Q invertible products of elementary
   transformations (inverses carried along). ell is the number of splits,
   equal to the total excess length of the input entries. */
struct LinearizationResult {
  PolyMatrix L;
  PolyMatrix P, P_inv;
  PolyMatrix Q, Q_inv;
  size_t ell = 0;
};

LinearizationResult higman_linearize(const PolyMatrix& M);

/* Output of the regularization loop on u = p - D (p idempotent over K^d, D
   homogeneous of degree 1): q_list are the orthogonal idempotents extracted
   stage by stage, q their sum, u the regularized element q + u_ell, and v
   the rational witness p (Id - W)^{-1} p, W = (p-q) D (p-q), with v u = p.  */
struct RegularizationResult {
  std::vector<KdMatrix> q_list;
  KdMatrix q;
  PolyMatrix u;
  RatMatrix v;
};

/* Throws NotIdempotent (p^2 != p), NotHomogeneous (a term of D has length
   != 1), or RegularityViolated (an extracted coefficient vector falls
   outside the column space of p, so the module is not regular). */
RegularizationResult vnreg_regularize(const KdMatrix& p, const PolyMatrix& D);

/* An invertible x over K^d with A x A = A (exact Gaussian elimination per
   vertex component). Used to normalize the augmentation of a linearized
   matrix into an idempotent before regularization. */
KdMatrix unit_regular_normalize(const KdMatrix& A);

} // namespace quivalg
