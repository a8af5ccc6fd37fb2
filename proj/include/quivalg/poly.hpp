#pragma once

#include "quivalg/matrix.hpp"
#include "quivalg/path.hpp"
#include "quivalg/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quivalg {

/* An element of K^d: one scalar per vertex. The ring product is pointwise. */
class VertexVector {
public:
  explicit VertexVector(QuiverPtr E);

  const QuiverPtr& quiver() const { return E_; }
  size_t size() const { return coeff_.size(); }

  const Scalar& at(uint32_t v) const { return coeff_[v]; }
  void set(uint32_t v, const Scalar& c) { coeff_[v] = c; }

  bool is_zero() const;
  bool operator==(const VertexVector& other) const;

private:
  QuiverPtr E_;
  std::vector<Scalar> coeff_;
};

VertexVector vv_zero(QuiverPtr E);
VertexVector vv_one(QuiverPtr E);
VertexVector vv_unit(QuiverPtr E, uint32_t v); // indicator of one vertex
VertexVector vv_add(const VertexVector& a, const VertexVector& b);
VertexVector vv_sub(const VertexVector& a, const VertexVector& b);
VertexVector vv_mul(const VertexVector& a, const VertexVector& b);
VertexVector vv_neg(const VertexVector& a);
VertexVector vv_scale(const Scalar& c, const VertexVector& a);
/* All components nonzero <=> invertible in K^d. */
bool vv_invertible(const VertexVector& a);
VertexVector vv_invert(const VertexVector& a); // throws NotInvertible
/* The tau_e twist on K^d: swap the components at s(e) and r(e). */
VertexVector vv_tau(const VertexVector& a, uint32_t arrow);

inline VertexVector operator+(const VertexVector& a, const VertexVector& b) { return vv_add(a, b); }
inline VertexVector operator-(const VertexVector& a, const VertexVector& b) { return vv_sub(a, b); }
inline VertexVector operator*(const VertexVector& a, const VertexVector& b) { return vv_mul(a, b); }

/* An element of the path algebra P(E): a finite K-linear combination of
   paths, stored sparsely in canonical term order. Zero coefficients are
   never stored. */
class PolyElement {
public:
  explicit PolyElement(QuiverPtr E);

  const QuiverPtr& quiver() const { return E_; }
  const std::map<Path, Scalar, PathOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Path& p) const;
  void add_term(const Path& p, const Scalar& c); // accumulates, drops zeros

  bool operator==(const PolyElement& other) const;

private:
  QuiverPtr E_;
  std::map<Path, Scalar, PathOrder> terms_;
};

PolyElement poly_zero(QuiverPtr E);
PolyElement poly_one(QuiverPtr E);                       // sum of all p_v
PolyElement poly_vertex(QuiverPtr E, uint32_t v);        // p_v
PolyElement poly_arrow(QuiverPtr E, uint32_t a);
PolyElement poly_path(QuiverPtr E, const Path& p);
PolyElement poly_scalar(QuiverPtr E, const Scalar& c);   // c * 1
PolyElement poly_from_vv(const VertexVector& w);

PolyElement poly_add(const PolyElement& x, const PolyElement& y);
PolyElement poly_sub(const PolyElement& x, const PolyElement& y);
PolyElement poly_neg(const PolyElement& x);
PolyElement poly_scale(const Scalar& c, const PolyElement& x);
PolyElement poly_mul(const PolyElement& x, const PolyElement& y);

/* Projection onto length-0 terms; a ring map onto K^d. */
VertexVector augmentation(const PolyElement& x);

/* Minimum path length in the support; nullopt for the zero element. */
std::optional<size_t> order(const PolyElement& x);

size_t max_path_length(const PolyElement& x);
bool is_homogeneous(const PolyElement& x, size_t len); // zero counts as homogeneous

/* Left transduction: strips one trailing occurrence of the arrow.
   (sum_a lambda_a a) delta_e = sum over paths a with range s(e) of
   lambda_{a e} a. */
PolyElement delta(const PolyElement& x, uint32_t arrow);

/* Right transduction: strips one leading occurrence of the arrow. */
PolyElement delta_tilde(const PolyElement& x, uint32_t arrow);

/* tau_e: kill all arrows, swap the vertex idempotents at s(e), r(e).
   Factors through the augmentation. */
VertexVector tau(const PolyElement& x, uint32_t arrow);

std::string poly_to_string(const PolyElement& x);

inline PolyElement operator+(const PolyElement& a, const PolyElement& b) { return poly_add(a, b); }
inline PolyElement operator-(const PolyElement& a, const PolyElement& b) { return poly_sub(a, b); }
inline PolyElement operator*(const PolyElement& a, const PolyElement& b) { return poly_mul(a, b); }

/* Matrices over P(E) and over K^d. */
using PolyMatrix = Matrix<PolyElement>;
using KdMatrix = Matrix<VertexVector>;

PolyMatrix poly_matrix_zero(QuiverPtr E, size_t rows, size_t cols);
PolyMatrix poly_matrix_identity(QuiverPtr E, size_t n);
KdMatrix kd_zero(QuiverPtr E, size_t rows, size_t cols);
KdMatrix kd_identity(QuiverPtr E, size_t n);

KdMatrix eps_matrix(const PolyMatrix& M);            // entrywise augmentation
PolyMatrix embed_kd(const KdMatrix& M);              // K^d -> P(E) entrywise
PolyMatrix delta_matrix(const PolyMatrix& M, uint32_t arrow);
PolyMatrix delta_tilde_matrix(const PolyMatrix& M, uint32_t arrow);
KdMatrix tau_matrix(const PolyMatrix& M, uint32_t arrow);
size_t max_path_length(const PolyMatrix& M);
bool poly_matrix_is_zero(const PolyMatrix& M);

/* One vertex component of a K^d matrix, as a matrix over K. */
Matrix<Scalar> vertex_slice(const KdMatrix& M, uint32_t v);
void set_vertex_slice(KdMatrix& M, uint32_t v, const Matrix<Scalar>& S);

/* Inverse in M_n(K^d) = product over vertices of M_n(K); nullopt when some
   vertex component is singular. */
std::optional<KdMatrix> kd_invert(const KdMatrix& M);

/* Rank of an idempotent matrix over P(E), one rank per vertex component of
   its augmentation. Throws NotIdempotent unless P*P = P exactly. */
std::vector<size_t> projective_rank(const PolyMatrix& P);

} // namespace quivalg
