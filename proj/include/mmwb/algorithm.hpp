#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmwb/rational.hpp"

namespace mmwb {

/// Sizes of MM(m,k,n): an m x k matrix times a k x n matrix.
struct DimensionTriple {
  std::size_t m = 1;
  std::size_t k = 1;
  std::size_t n = 1;

  DimensionTriple() = default;
  DimensionTriple(std::size_t m_, std::size_t k_, std::size_t n_);

  std::uint64_t volume() const { return std::uint64_t{m} * k * n; }
  bool is_square() const { return m == k && k == n; }
  std::string to_string() const;

  friend bool operator==(const DimensionTriple&, const DimensionTriple&) = default;
};

struct CoefficientEntry {
  std::uint32_t row;
  std::uint32_t col;
  Rational value;

  friend bool operator==(const CoefficientEntry&, const CoefficientEntry&) = default;
};

/// Sparse coefficient matrix: entries sorted by (row, col), unique, nonzero.
class CoefficientSlice {
 public:
  CoefficientSlice() = default;
  /// Merges duplicate positions by summing and drops zeros.
  explicit CoefficientSlice(std::vector<CoefficientEntry> entries);

  Rational at(std::size_t row, std::size_t col) const;
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::span<const CoefficientEntry> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  CoefficientSlice transposed() const;
  CoefficientSlice with(std::size_t row, std::size_t col, const Rational& value) const;

  friend bool operator==(const CoefficientSlice&, const CoefficientSlice&) = default;

 private:
  std::vector<CoefficientEntry> entries_;
};

/// One bilinear product: (sum u_ij a_ij) * (sum v_gh b_gh), scattered into
/// the output with weights w_lq.
struct BilinearProduct {
  CoefficientSlice u;  // m x k
  CoefficientSlice v;  // k x n
  CoefficientSlice w;  // m x n

  friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;
};

enum class Factor { U, V, W };

/// A triple of coefficient tensors (U, V, W) of rank R for MM(m,k,n).
///
/// Construction checks only shapes. Whether the triple actually computes the
/// matrix product is decided by verify_brent.
class BilinearAlgorithm {
 public:
  BilinearAlgorithm(DimensionTriple dims, std::vector<BilinearProduct> products);

  const DimensionTriple& dims() const noexcept { return dims_; }
  std::size_t rank() const noexcept { return products_.size(); }
  std::span<const BilinearProduct> products() const noexcept { return products_; }
  const BilinearProduct& product(std::size_t s) const { return products_.at(s); }

  /// Row/column count of the slices of one factor.
  std::pair<std::size_t, std::size_t> shape(Factor f) const;

  /// Copy with a single coefficient replaced (s is 0-based).
  BilinearAlgorithm with_coefficient(Factor f, std::size_t s, std::size_t row, std::size_t col,
                                     const Rational& value) const;

  /// Number of nonzero coefficients of one factor, summed over products.
  std::size_t nonzeros(Factor f) const;

  friend bool operator==(const BilinearAlgorithm&, const BilinearAlgorithm&) = default;

 private:
  DimensionTriple dims_;
  std::vector<BilinearProduct> products_;
};

const CoefficientSlice& slice_of(const BilinearProduct& p, Factor f);
CoefficientSlice& slice_of(BilinearProduct& p, Factor f);

}  // namespace mmwb
