#include "quivalg/linalg.hpp"

#include <cassert>

namespace quivalg {

QMatrix q_zero(size_t rows, size_t cols) {
  return QMatrix(rows, cols, scalar_zero());
}

QMatrix q_identity(size_t n) {
  QMatrix out(n, n, scalar_zero());
  for (size_t i = 0; i < n; ++i) out.at(i, i) = scalar_one();
  return out;
}

size_t q_rank(QMatrix a) {
  size_t rank = 0;
  for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < a.rows() && scalar_is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(rank, j), a.at(pivot, j));
    Scalar inv = 1 / a.at(rank, col);
    for (size_t j = col; j < a.cols(); ++j) a.at(rank, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || scalar_is_zero(a.at(i, col))) continue;
      Scalar f = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<QMatrix> q_invert(const QMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  size_t n = a.rows();
  QMatrix work = a;
  QMatrix inv = q_identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && scalar_is_zero(work.at(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      std::swap(work.at(col, j), work.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    Scalar s = 1 / work.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      work.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || scalar_is_zero(work.at(i, col))) continue;
      Scalar f = work.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!scalar_is_zero(x)) return false;
    return true;
  }
  size_t n = v.size();
  QMatrix m(n, basis.size() + 1, scalar_zero());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
  for (size_t i = 0; i < n; ++i) m.at(i, basis.size()) = v[i];
  QMatrix without(n, basis.size(), scalar_zero());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < n; ++i) without.at(i, j) = basis[j][i];
  return q_rank(m) == q_rank(without);
}

std::vector<std::vector<Scalar>> extend_basis(std::vector<std::vector<Scalar>> basis,
                                              const std::vector<std::vector<Scalar>>& pool) {
  std::vector<std::vector<Scalar>> added;
  for (const auto& v : pool) {
    if (in_span(basis, v)) continue;
    basis.push_back(v);
    added.push_back(v);
  }
  return added;
}

std::vector<std::vector<Scalar>> column_space_basis(
    const std::vector<std::vector<Scalar>>& cols) {
  std::vector<std::vector<Scalar>> basis;
  for (const auto& v : cols)
    if (!in_span(basis, v)) basis.push_back(v);
  return basis;
}

std::vector<std::vector<Scalar>> null_space_basis(const QMatrix& a) {
  size_t rows = a.rows(), cols = a.cols();
  QMatrix m = a;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && scalar_is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    Scalar inv = 1 / m.at(rank, col);
    for (size_t j = col; j < cols; ++j) m.at(rank, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || scalar_is_zero(m.at(i, col))) continue;
      Scalar f = m.at(i, col);
      for (size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, scalar_zero());
    v[free] = scalar_one();
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SmithLikeDecomposition paq_decompose(const QMatrix& a) {
  size_t rows = a.rows(), cols = a.cols();
  QMatrix m = a;
  QMatrix P = q_identity(rows);
  QMatrix Q = q_identity(cols);
  size_t r = 0;
  while (r < rows && r < cols) {
    size_t pi = r, pj = r;
    bool found = false;
    for (size_t i = r; i < rows && !found; ++i)
      for (size_t j = r; j < cols && !found; ++j)
        if (!scalar_is_zero(m.at(i, j))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    for (size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pi, j));
    for (size_t j = 0; j < rows; ++j) std::swap(P.at(r, j), P.at(pi, j));
    for (size_t i = 0; i < rows; ++i) std::swap(m.at(i, r), m.at(i, pj));
    for (size_t i = 0; i < cols; ++i) std::swap(Q.at(i, r), Q.at(i, pj));
    Scalar inv = 1 / m.at(r, r);
    for (size_t j = 0; j < cols; ++j) m.at(r, j) *= inv;
    for (size_t j = 0; j < rows; ++j) P.at(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || scalar_is_zero(m.at(i, r))) continue;
      Scalar f = m.at(i, r);
      for (size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
      for (size_t j = 0; j < rows; ++j) P.at(i, j) -= f * P.at(r, j);
    }
    for (size_t j = 0; j < cols; ++j) {
      if (j == r || scalar_is_zero(m.at(r, j))) continue;
      Scalar f = m.at(r, j);
      for (size_t i = 0; i < rows; ++i) m.at(i, j) -= f * m.at(i, r);
      for (size_t i = 0; i < cols; ++i) Q.at(i, j) -= f * Q.at(i, r);
    }
    ++r;
  }
  return SmithLikeDecomposition{std::move(P), std::move(Q), r};
}

} // namespace quivalg
