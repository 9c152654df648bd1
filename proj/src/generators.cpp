#include "mmwb/generators.hpp"

#include <utility>
#include <vector>

#include "mmwb/errors.hpp"

namespace mmwb {

namespace {

using Terms = std::vector<CoefficientEntry>;

CoefficientEntry entry(std::size_t row, std::size_t col, long value) {
  return {static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), Rational(value)};
}

// Adds the trilinear term sign * (a-form)(b-form)(d-form). A d-form term
// d_ql (row q, col l of D) becomes w_lq.
class TrilinearBuilder {
 public:
  void add(Terms a, Terms b, const Terms& d, long sign) {
    Terms w;
    w.reserve(d.size());
    for (const auto& e : d) w.push_back({e.col, e.row, e.value * Rational(sign)});
    products_.push_back({CoefficientSlice(std::move(a)), CoefficientSlice(std::move(b)),
                         CoefficientSlice(std::move(w))});
  }

  std::vector<BilinearProduct> take() { return std::move(products_); }

 private:
  std::vector<BilinearProduct> products_;
};

}  // namespace

BilinearAlgorithm classical(const DimensionTriple& dims) {
  std::vector<BilinearProduct> products;
  products.reserve(dims.volume());
  for (std::size_t l = 0; l < dims.m; ++l) {
    for (std::size_t g = 0; g < dims.k; ++g) {
      for (std::size_t q = 0; q < dims.n; ++q) {
        products.push_back({CoefficientSlice({entry(l, g, 1)}), CoefficientSlice({entry(g, q, 1)}),
                            CoefficientSlice({entry(l, q, 1)})});
      }
    }
  }
  return BilinearAlgorithm(dims, std::move(products));
}

BilinearAlgorithm strassen_222() {
  auto p = [](Terms u, Terms v, Terms w) {
    return BilinearProduct{CoefficientSlice(std::move(u)), CoefficientSlice(std::move(v)),
                           CoefficientSlice(std::move(w))};
  };
  // M1..M7 in the usual order; C11 = M1+M4-M5+M7, C12 = M3+M5,
  // C21 = M2+M4, C22 = M1-M2+M3+M6.
  std::vector<BilinearProduct> products{
      p({entry(0, 0, 1), entry(1, 1, 1)}, {entry(0, 0, 1), entry(1, 1, 1)}, {entry(0, 0, 1), entry(1, 1, 1)}),
      p({entry(1, 0, 1), entry(1, 1, 1)}, {entry(0, 0, 1)}, {entry(1, 0, 1), entry(1, 1, -1)}),
      p({entry(0, 0, 1)}, {entry(0, 1, 1), entry(1, 1, -1)}, {entry(0, 1, 1), entry(1, 1, 1)}),
      p({entry(1, 1, 1)}, {entry(1, 0, 1), entry(0, 0, -1)}, {entry(0, 0, 1), entry(1, 0, 1)}),
      p({entry(0, 0, 1), entry(0, 1, 1)}, {entry(1, 1, 1)}, {entry(0, 0, -1), entry(0, 1, 1)}),
      p({entry(1, 0, 1), entry(0, 0, -1)}, {entry(0, 0, 1), entry(0, 1, 1)}, {entry(1, 1, 1)}),
      p({entry(0, 1, 1), entry(1, 1, -1)}, {entry(1, 0, 1), entry(1, 1, 1)}, {entry(0, 0, 1)}),
  };
  return BilinearAlgorithm(DimensionTriple(2, 2, 2), std::move(products));
}

BilinearAlgorithm pan_aggregation(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw BadArgument("trilinear aggregation needs an even n >= 2, got " + std::to_string(n));
  }
  // Shifted subscripts wrap: index n is identified with 0. Parity tests use
  // the unshifted loop indices.
  const auto up = [n](std::size_t x) { return (x + 1) % n; };
  const auto even = [](std::size_t i, std::size_t j, std::size_t h) { return (i + j + h) % 2 == 0; };

  TrilinearBuilder out;
  // (a_ij + a_{h+1,i+1}) (b_jh + b_{i+1,j+1}) (d_hi + d_{j+1,h+1})
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t h = 0; h < n; ++h) {
        if (!even(i, j, h)) continue;
        out.add({entry(i, j, 1), entry(up(h), up(i), 1)}, {entry(j, h, 1), entry(up(i), up(j), 1)},
                {entry(h, i, 1), entry(up(j), up(h), 1)}, 1);
      }
    }
  }
  // a_{h+1,i+1} * sum_j (b_jh + b_{i+1,j+1}) * d_hi
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t h = 0; h < n; ++h) {
      Terms b;
      for (std::size_t j = 0; j < n; ++j) {
        if (!even(i, j, h)) continue;
        b.push_back(entry(j, h, 1));
        b.push_back(entry(up(i), up(j), 1));
      }
      out.add({entry(up(h), up(i), 1)}, std::move(b), {entry(h, i, 1)}, -1);
    }
  }
  // a_ij * b_{i+1,j+1} * sum_h (d_hi + d_{j+1,h+1})
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Terms d;
      for (std::size_t h = 0; h < n; ++h) {
        if (!even(i, j, h)) continue;
        d.push_back(entry(h, i, 1));
        d.push_back(entry(up(j), up(h), 1));
      }
      out.add({entry(i, j, 1)}, {entry(up(i), up(j), 1)}, d, -1);
    }
  }
  // sum_i (a_ij + a_{h+1,i+1}) * b_jh * d_{j+1,h+1}
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t h = 0; h < n; ++h) {
      Terms a;
      for (std::size_t i = 0; i < n; ++i) {
        if (!even(i, j, h)) continue;
        a.push_back(entry(i, j, 1));
        a.push_back(entry(up(h), up(i), 1));
      }
      out.add(std::move(a), {entry(j, h, 1)}, {entry(up(j), up(h), 1)}, -1);
    }
  }
  return BilinearAlgorithm(DimensionTriple(n, n, n), out.take());
}

}  // namespace mmwb
