#pragma once

#include <cstddef>
#include <utility>

#include "mmwb/matrix.hpp"

namespace mmwb {

/// Rank by row reduction with pivot search. T must be a field.
template <RingScalar T>
std::size_t matrix_rank(Matrix<T> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && ScalarTraits<T>::is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(pivot, j));
    const T inv = m.one() / m(rank, c);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (ScalarTraits<T>::is_zero(m(r, c))) continue;
      const T factor = m(r, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) - factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrix.
template <RingScalar T>
Matrix<T> gauss_jordan_inverse(Matrix<T> a) {
  if (!a.is_square()) throw DimensionError("only square matrices have inverses");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n, a.one());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && ScalarTraits<T>::is_zero(a(pivot, c))) ++pivot;
    if (pivot == n) throw SingularMatrix();
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(pivot, j));
      std::swap(inv(c, j), inv(pivot, j));
    }
    const T scale = a.one() / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * scale;
      inv(c, j) = inv(c, j) * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || ScalarTraits<T>::is_zero(a(r, c))) continue;
      const T factor = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - factor * a(c, j);
        inv(r, j) = inv(r, j) - factor * inv(c, j);
      }
    }
  }
  return inv;
}

template <RingScalar T>
bool is_identity(const Matrix<T>& m) {
  return m.is_square() && m == Matrix<T>::identity(m.rows(), m.one());
}

}  // namespace mmwb
