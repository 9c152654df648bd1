#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mmwb/errors.hpp"
#include "mmwb/modular.hpp"
#include "mmwb/rational.hpp"

namespace mmwb {

/// Ring-specific constants. Modular scalars carry their modulus, so zero and
/// one are produced "like" an existing element.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational embed(const Rational& c, const Rational&) { return c; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
};

template <>
struct ScalarTraits<ModularScalar> {
  static ModularScalar zero_like(const ModularScalar& x) { return x.field().element(0); }
  static ModularScalar one_like(const ModularScalar& x) { return x.field().element(1); }
  static ModularScalar embed(const Rational& c, const ModularScalar& x) {
    return x.field().from_rational(c);
  }
  static bool is_zero(const ModularScalar& x) { return x.is_zero(); }
};

template <class T>
concept RingScalar = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  ScalarTraits<T>::zero_like(a);
};

/// Dense row-major matrix with at least one row and one column.
template <RingScalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), entries_(checked_size(rows, cols), fill) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != checked_size(rows, cols)) {
      throw DimensionError("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                           std::to_string(entries_.size()));
    }
  }

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, ScalarTraits<T>::zero_like(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one_like(like);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const T> entries() const noexcept { return entries_; }

  T zero() const { return ScalarTraits<T>::zero_like(entries_.front()); }
  T one() const { return ScalarTraits<T>::one_like(entries_.front()); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    std::vector<T> out;
    out.reserve(nr * nc);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) out.push_back((*this)(r0 + r, c0 + c));
    }
    return Matrix(nr, nc, std::move(out));
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r) {
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }
  }

  /// Copy embedded in the top-left corner of a zero matrix of the given shape.
  Matrix padded(std::size_t rows, std::size_t cols) const {
    if (rows < rows_ || cols < cols_) throw DimensionError("padding cannot shrink a matrix");
    Matrix out(rows, cols, zero());
    out.set_block(0, 0, *this);
    return out;
  }

  Matrix transposed() const {
    std::vector<T> out;
    out.reserve(entries_.size());
    for (std::size_t c = 0; c < cols_; ++c) {
      for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    }
    return Matrix(cols_, rows_, std::move(out));
  }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (!ScalarTraits<T>::is_zero(x)) return false;
    }
    return true;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.entries_) x = -x;
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] + o.entries_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] - o.entries_[i];
    return *this;
  }

  Matrix& operator*=(const T& s) {
    for (auto& x : entries_) x = x * s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    return rows * cols;
  }

  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionError("shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                           " vs " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> entries_;
};

/// Schoolbook product, the reference every fast algorithm is checked against.
template <RingScalar T>
Matrix<T> mat_classical_multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> c(a.rows(), b.cols(), a.zero());
  for (std::size_t l = 0; l < a.rows(); ++l) {
    for (std::size_t g = 0; g < a.cols(); ++g) {
      const T& alg = a(l, g);
      if (ScalarTraits<T>::is_zero(alg)) continue;
      for (std::size_t q = 0; q < b.cols(); ++q) c(l, q) = c(l, q) + alg * b(g, q);
    }
  }
  return c;
}

/// Entrywise image of a matrix under a scalar map (e.g. reduction mod p).
template <RingScalar To, RingScalar From, class Fn>
Matrix<To> map_entries(const Matrix<From>& m, Fn&& fn) {
  std::vector<To> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& x : m.entries()) out.push_back(fn(x));
  return Matrix<To>(m.rows(), m.cols(), std::move(out));
}

inline Matrix<ModularScalar> reduce_mod(const Matrix<Rational>& m, const PrimeField& field) {
  return map_entries<ModularScalar>(m, [&](const Rational& x) { return field.from_rational(x); });
}

}  // namespace mmwb
