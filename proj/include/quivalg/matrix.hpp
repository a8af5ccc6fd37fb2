#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace quivalg {

/* Small dense row-major matrix over an arbitrary ring element type. Sizes
   here are single digits; no attempt at clever storage. */
template <class T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

/* Entrywise sum; shapes must match. */
template <class T>
Matrix<T> mat_add(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shape mismatch");
  Matrix<T> out = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

template <class T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_sub: shape mismatch");
  Matrix<T> out = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

/* Ring product. Order of factors inside each term is preserved, so this is
   safe over noncommutative entries. Requires inner dimensions >= 1. */
template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || a.cols() == 0)
    throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix<T> out(a.rows(), b.cols(), a.at(0, 0) * b.at(0, 0));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) {
      T acc = a.at(i, 0) * b.at(0, j);
      for (size_t k = 1; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

/* Block diagonal [[a, fill],[fill, b]]. */
template <class T>
Matrix<T> mat_block_diag(const Matrix<T>& a, const Matrix<T>& b, const T& fill) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols(), fill);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

template <class T, class Fn>
Matrix<decltype(std::declval<Fn>()(std::declval<const T&>()))> mat_map(
    const Matrix<T>& a, Fn fn) {
  using U = decltype(fn(std::declval<const T&>()));
  Matrix<U> out(a.rows(), a.cols(), fn(a.at(0, 0)));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = fn(a.at(i, j));
  return out;
}

} // namespace quivalg
