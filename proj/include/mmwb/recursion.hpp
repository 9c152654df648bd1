#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mmwb/bilinear.hpp"
#include "mmwb/linalg.hpp"
#include "mmwb/matrix.hpp"

namespace mmwb {

/// A square base algorithm plus the side length at or below which blocks
/// are multiplied classically. Rectangular algorithms go through squareify
/// first.
class RecursionConfig {
 public:
  explicit RecursionConfig(BilinearAlgorithm base, std::size_t threshold = 1);

  const BilinearAlgorithm& base() const noexcept { return base_; }
  std::size_t threshold() const noexcept { return threshold_; }
  std::size_t base_side() const noexcept { return base_.dims().m; }

  /// Smallest power of the base side that is >= k.
  std::size_t padded_side(std::size_t k) const;

 private:
  BilinearAlgorithm base_;
  std::size_t threshold_;
};

/// Predicted counts of recursive_multiply on K x K inputs, K a power of the
/// base side (BadArgument otherwise).
CostReport cost_model(const BilinearAlgorithm& alg, std::size_t side, std::size_t threshold = 1);

namespace detail {

template <RingScalar T>
Matrix<T> counted_classical(const Matrix<T>& a, const Matrix<T>& b, CostReport& cost) {
  const std::size_t n = a.rows();
  Matrix<T> c(n, n, a.zero());
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t q = 0; q < n; ++q) {
      T acc = a(l, 0) * b(0, q);
      for (std::size_t g = 1; g < n; ++g) acc += a(l, g) * b(g, q);
      c(l, q) = std::move(acc);
    }
  }
  cost.bilinear_mults += std::uint64_t{n} * n * n;
  cost.additions += std::uint64_t{n} * n * (n - 1);
  return c;
}

template <RingScalar T>
Matrix<T> multiply_power_side(const RecursionConfig& cfg, const Matrix<T>& a, const Matrix<T>& b, CostReport& cost) {
  const std::size_t side = a.rows();
  if (side == 1 || side <= cfg.threshold()) return counted_classical(a, b, cost);

  const std::size_t n0 = cfg.base_side();
  const std::size_t bs = side / n0;
  const std::uint64_t weight = std::uint64_t{bs} * bs;
  const T like = a.zero();
  const Matrix<T> zero_block(bs, bs, like);

  std::vector<Matrix<T>> a_blocks, b_blocks;
  a_blocks.reserve(n0 * n0);
  b_blocks.reserve(n0 * n0);
  for (std::size_t r = 0; r < n0; ++r) {
    for (std::size_t c = 0; c < n0; ++c) {
      a_blocks.push_back(a.block(r * bs, c * bs, bs, bs));
      b_blocks.push_back(b.block(r * bs, c * bs, bs, bs));
    }
  }

  std::vector<LinearCombination<Matrix<T>>> out(n0 * n0);
  for (const auto& p : cfg.base().products()) {
    LinearCombination<Matrix<T>> left, right;
    for (const auto& e : p.u) left.add(e.value, a_blocks[e.row * n0 + e.col], like, weight, cost);
    for (const auto& e : p.v) right.add(e.value, b_blocks[e.row * n0 + e.col], like, weight, cost);
    const Matrix<T> prod = multiply_power_side(cfg, left.take_or(zero_block), right.take_or(zero_block), cost);
    for (const auto& e : p.w) out[e.row * n0 + e.col].add(e.value, prod, like, weight, cost);
  }

  Matrix<T> c(side, side, like);
  for (std::size_t r = 0; r < n0; ++r) {
    for (std::size_t col = 0; col < n0; ++col) {
      auto& acc = out[r * n0 + col];
      if (!acc.empty()) c.set_block(r * bs, col * bs, acc.take_or(zero_block));
    }
  }
  return c;
}

}  // namespace detail

/// K x K product by recursive block application of the base algorithm.
/// Inputs are zero-padded to the next power of the base side; the counts
/// include the padded work.
template <RingScalar T>
std::pair<Matrix<T>, CostReport> recursive_multiply(const RecursionConfig& cfg, const Matrix<T>& a,
                                                    const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("recursive_multiply needs two K x K matrices, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  const std::size_t k = a.rows();
  const std::size_t side = cfg.padded_side(k);
  CostReport cost;
  cost.context = "recursive " + cfg.base().dims().to_string() + " rank " + std::to_string(cfg.base().rank()) +
                 ", K=" + std::to_string(k) + " padded to " + std::to_string(side) +
                 ", threshold " + std::to_string(cfg.threshold());
  Matrix<T> c = side == k ? detail::multiply_power_side(cfg, a, b, cost)
                          : detail::multiply_power_side(cfg, a.padded(side, side), b.padded(side, side), cost)
                                .block(0, 0, k, k);
  return {std::move(c), std::move(cost)};
}

namespace detail {

struct LeadingBlockVanished {};

template <RingScalar T>
Matrix<T> invert_power_side(const RecursionConfig& cfg, const Matrix<T>& a, CostReport& cost) {
  const std::size_t n = a.rows();
  if (n == 1) {
    if (ScalarTraits<T>::is_zero(a(0, 0))) throw LeadingBlockVanished{};
    ++cost.divisions;
    return Matrix<T>(1, 1, a.one() / a(0, 0));
  }
  const std::size_t h = n / 2;
  const std::uint64_t weight = std::uint64_t{h} * h;
  auto mul = [&](const Matrix<T>& x, const Matrix<T>& y) {
    auto [prod, sub] = recursive_multiply(cfg, x, y);
    cost += sub;
    return prod;
  };
  const Matrix<T> a11 = a.block(0, 0, h, h);
  const Matrix<T> a12 = a.block(0, h, h, h);
  const Matrix<T> a21 = a.block(h, 0, h, h);
  const Matrix<T> a22 = a.block(h, h, h, h);

  // Block elimination through the Schur complement S = A22 - A21 A11^-1 A12.
  const Matrix<T> x = invert_power_side(cfg, a11, cost);
  const Matrix<T> t1 = mul(a21, x);
  const Matrix<T> t2 = mul(x, a12);
  const Matrix<T> schur = a22 - mul(t1, a12);
  cost.additions += weight;
  const Matrix<T> y = invert_power_side(cfg, schur, cost);
  const Matrix<T> b12 = -mul(t2, y);
  const Matrix<T> b21 = -mul(y, t1);
  const Matrix<T> b11 = x - mul(b12, t1);
  cost.additions += weight;

  Matrix<T> out(n, n, a.zero());
  out.set_block(0, 0, b11);
  out.set_block(0, h, b12);
  out.set_block(h, 0, b21);
  out.set_block(h, h, y);
  return out;
}

}  // namespace detail

/// Inverse by recursive 2x2 block elimination; every block product goes
/// through recursive_multiply. No pivoting: SingularMatrix when A is
/// singular, PivotFailure when A is invertible but a leading principal
/// block is not.
template <RingScalar T>
std::pair<Matrix<T>, CostReport> recursive_invert(const RecursionConfig& cfg, const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("only square matrices have inverses");
  const std::size_t n = a.rows();
  std::size_t side = 1;
  while (side < n) side *= 2;
  Matrix<T> padded = Matrix<T>::identity(side, a.one());
  padded.set_block(0, 0, a);

  CostReport cost;
  cost.context = "recursive inversion, n=" + std::to_string(n) + " padded to " + std::to_string(side);
  try {
    Matrix<T> inv = detail::invert_power_side(cfg, padded, cost);
    return {inv.block(0, 0, n, n), std::move(cost)};
  } catch (const detail::LeadingBlockVanished&) {
    if (matrix_rank(a) < n) throw SingularMatrix();
    throw PivotFailure();
  }
}

/// A*B read off the inverse of [[I, A, 0], [0, I, B], [0, 0, I]], whose
/// top-right block is A*B.
template <RingScalar T>
Matrix<T> multiply_via_inversion(const Matrix<T>& a, const Matrix<T>& b,
                                 const std::function<Matrix<T>(const Matrix<T>&)>& invert) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  Matrix<T> big = Matrix<T>::identity(m + k + n, a.one());
  big.set_block(0, m, a);
  big.set_block(m, m + k, b);
  const Matrix<T> inv = invert(big);
  if (inv.rows() != m + k + n || inv.cols() != m + k + n) throw DimensionError("inversion returned wrong shape");
  return inv.block(0, m + k, m, n);
}

}  // namespace mmwb
