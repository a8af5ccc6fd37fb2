#pragma once

#include "quivalg/matrix.hpp"
#include "quivalg/scalar.hpp"

#include <optional>
#include <vector>

namespace quivalg {

using QMatrix = Matrix<Scalar>;

QMatrix q_zero(size_t rows, size_t cols);
QMatrix q_identity(size_t n);

size_t q_rank(QMatrix a); // by value: eliminates in place

std::optional<QMatrix> q_invert(const QMatrix& a);

/* Independent subset of the given vectors spanning the same space. */
std::vector<std::vector<Scalar>> column_space_basis(const std::vector<std::vector<Scalar>>& cols);

/* Basis of the right null space of a. */
std::vector<std::vector<Scalar>> null_space_basis(const QMatrix& a);

/* Is v in the span of basis (treated as column vectors)? */
bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v);

/* Greedily extends `basis` (assumed independent) with vectors from `pool`
   that enlarge the span; returns the vectors added. */
std::vector<std::vector<Scalar>> extend_basis(std::vector<std::vector<Scalar>> basis,
                                              const std::vector<std::vector<Scalar>>& pool);

/* P * a * Q = diag(I_r, 0) with P, Q invertible; returns P, Q and r. */
struct SmithLikeDecomposition {
  QMatrix P, Q;
  size_t rank = 0;
};
SmithLikeDecomposition paq_decompose(const QMatrix& a);

} // namespace quivalg
