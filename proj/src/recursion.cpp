#include "mmwb/recursion.hpp"

#include <algorithm>

#include "mmwb/errors.hpp"

namespace mmwb {

RecursionConfig::RecursionConfig(BilinearAlgorithm base, std::size_t threshold)
    : base_(std::move(base)), threshold_(threshold) {
  if (!base_.dims().is_square()) {
    throw BadArgument("recursion needs a square base algorithm, got " + base_.dims().to_string() +
                      " (squareify it first)");
  }
  if (base_.dims().m < 2) throw BadArgument("recursion needs a base side of at least 2");
  if (threshold_ == 0) throw BadArgument("threshold must be at least 1");
}

std::size_t RecursionConfig::padded_side(std::size_t k) const {
  std::size_t side = 1;
  while (side < k) side *= base_side();
  return side;
}

CostReport cost_model(const BilinearAlgorithm& alg, std::size_t side, std::size_t threshold) {
  const auto& d = alg.dims();
  if (!d.is_square() || d.m < 2) throw BadArgument("cost model needs a square base of side >= 2");
  if (threshold == 0) throw BadArgument("threshold must be at least 1");
  const std::size_t n0 = d.m;
  std::size_t levels = 0;
  for (std::size_t s = side; s > 1; s /= n0, ++levels) {
    if (s % n0 != 0) break;
  }
  std::size_t check = 1;
  for (std::size_t i = 0; i < levels; ++i) check *= n0;
  if (side == 0 || check != side) {
    throw BadArgument(std::to_string(side) + " is not a power of the base side " + std::to_string(n0));
  }

  // Work of one application of the algorithm, in block operations.
  std::uint64_t step_adds = 0;
  std::uint64_t step_scalars = 0;
  std::vector<std::uint64_t> out_terms(d.m * d.n, 0);
  for (const auto& p : alg.products()) {
    step_adds += p.u.nnz() > 0 ? p.u.nnz() - 1 : 0;
    step_adds += p.v.nnz() > 0 ? p.v.nnz() - 1 : 0;
    for (const auto* slice : {&p.u, &p.v, &p.w}) {
      for (const auto& e : *slice) step_scalars += e.value.is_unit_or_zero() ? 0 : 1;
    }
    for (const auto& e : p.w) ++out_terms[e.row * d.n + e.col];
  }
  for (const auto t : out_terms) step_adds += t > 0 ? t - 1 : 0;

  CostReport cost;
  cost.context = "model " + d.to_string() + " rank " + std::to_string(alg.rank()) + ", K=" +
                 std::to_string(side) + ", threshold " + std::to_string(threshold);
  // Descend until blocks are 1x1 or at most the threshold.
  std::size_t leaf = side;
  std::uint64_t leaves = 1;
  while (leaf > 1 && leaf > threshold) {
    leaf /= n0;
    const std::uint64_t block = std::uint64_t{leaf} * leaf;
    cost.additions += leaves * step_adds * block;
    cost.scalar_mults += leaves * step_scalars * block;
    leaves *= alg.rank();
  }
  const std::uint64_t l = leaf;
  cost.bilinear_mults = leaves * l * l * l;
  cost.additions += leaves * l * l * (l - 1);
  return cost;
}

}  // namespace mmwb
