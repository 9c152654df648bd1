#include "mmwb/algorithm.hpp"

#include <algorithm>
#include <tuple>

#include "mmwb/errors.hpp"

namespace mmwb {

DimensionTriple::DimensionTriple(std::size_t m_, std::size_t k_, std::size_t n_) : m(m_), k(k_), n(n_) {
  if (m == 0 || k == 0 || n == 0) throw BadArgument("dimensions must be positive, got " + to_string());
}

std::string DimensionTriple::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n) + ")";
}

CoefficientSlice::CoefficientSlice(std::vector<CoefficientEntry> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  std::erase_if(entries_, [](const auto& e) { return e.value.is_zero(); });
}

Rational CoefficientSlice::at(std::size_t row, std::size_t col) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                                   [](const CoefficientEntry& e, const auto& key) {
                                     return std::pair<std::size_t, std::size_t>{e.row, e.col} < key;
                                   });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return Rational(0);
}

CoefficientSlice CoefficientSlice::transposed() const {
  std::vector<CoefficientEntry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({e.col, e.row, e.value});
  return CoefficientSlice(std::move(out));
}

CoefficientSlice CoefficientSlice::with(std::size_t row, std::size_t col, const Rational& value) const {
  std::vector<CoefficientEntry> out;
  out.reserve(entries_.size() + 1);
  for (const auto& e : entries_) {
    if (e.row != row || e.col != col) out.push_back(e);
  }
  out.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), value});
  return CoefficientSlice(std::move(out));
}

const CoefficientSlice& slice_of(const BilinearProduct& p, Factor f) {
  switch (f) {
    case Factor::U: return p.u;
    case Factor::V: return p.v;
    case Factor::W: return p.w;
  }
  return p.w;
}

CoefficientSlice& slice_of(BilinearProduct& p, Factor f) {
  return const_cast<CoefficientSlice&>(slice_of(static_cast<const BilinearProduct&>(p), f));
}

BilinearAlgorithm::BilinearAlgorithm(DimensionTriple dims, std::vector<BilinearProduct> products)
    : dims_(dims), products_(std::move(products)) {
  if (products_.empty()) throw BadArgument("an algorithm needs at least one product");
  constexpr Factor kFactors[] = {Factor::U, Factor::V, Factor::W};
  constexpr const char* kNames[] = {"U", "V", "W"};
  for (std::size_t s = 0; s < products_.size(); ++s) {
    for (int f = 0; f < 3; ++f) {
      const auto [rows, cols] = shape(kFactors[f]);
      for (const auto& e : slice_of(products_[s], kFactors[f])) {
        if (e.row >= rows || e.col >= cols) {
          throw DimensionError(std::string(kNames[f]) + " entry (" + std::to_string(e.row) + "," +
                               std::to_string(e.col) + ") of product " + std::to_string(s + 1) +
                               " outside " + std::to_string(rows) + "x" + std::to_string(cols));
        }
      }
    }
  }
}

std::pair<std::size_t, std::size_t> BilinearAlgorithm::shape(Factor f) const {
  switch (f) {
    case Factor::U: return {dims_.m, dims_.k};
    case Factor::V: return {dims_.k, dims_.n};
    case Factor::W: return {dims_.m, dims_.n};
  }
  return {0, 0};
}

BilinearAlgorithm BilinearAlgorithm::with_coefficient(Factor f, std::size_t s, std::size_t row,
                                                      std::size_t col, const Rational& value) const {
  const auto [rows, cols] = shape(f);
  if (s >= rank() || row >= rows || col >= cols) throw BadArgument("coefficient index out of range");
  auto products = products_;
  auto& slice = slice_of(products[s], f);
  slice = slice.with(row, col, value);
  return BilinearAlgorithm(dims_, std::move(products));
}

std::size_t BilinearAlgorithm::nonzeros(Factor f) const {
  std::size_t total = 0;
  for (const auto& p : products_) total += slice_of(p, f).nnz();
  return total;
}

}  // namespace mmwb
