#include "mmwb/bilinear.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "mmwb/errors.hpp"

namespace mmwb {

namespace {

using BrentKey = std::array<std::uint32_t, 6>;  // (l, q, i, j, g, h)

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (x > 1) out.emplace_back(x, 1u);
  return out;
}

// Writes (rank, volume) as (r^g, v^g) with g maximal and returns (r, v).
// The logarithm ratio is the same; reducing first makes it reproducible
// bit-for-bit across tensor powers of one algorithm.
std::pair<std::uint64_t, std::uint64_t> strip_common_power(std::uint64_t rank, std::uint64_t volume) {
  const auto fr = factorize(rank);
  const auto fv = factorize(volume);
  unsigned g = 0;
  for (const auto& [p, e] : fr) g = std::gcd(g, e);
  for (const auto& [p, e] : fv) g = std::gcd(g, e);
  if (g <= 1) return {rank, volume};
  auto root = [g](const auto& factors) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : factors) {
      for (unsigned i = 0; i < e / g; ++i) r *= p;
    }
    return r;
  };
  return {root(fr), root(fv)};
}

}  // namespace

VerificationReport verify_brent(const BilinearAlgorithm& alg) {
  // Sparse contraction: only index tuples reached by some product are
  // touched; the remaining equations have actual = 0.
  std::map<BrentKey, Rational> sums;
  for (const auto& p : alg.products()) {
    for (const auto& eu : p.u) {
      for (const auto& ev : p.v) {
        const Rational uv = eu.value * ev.value;
        for (const auto& ew : p.w) {
          sums[{ew.row, ew.col, eu.row, eu.col, ev.row, ev.col}] += uv * ew.value;
        }
      }
    }
  }
  const auto& d = alg.dims();
  for (std::uint32_t l = 0; l < d.m; ++l) {
    for (std::uint32_t q = 0; q < d.n; ++q) {
      for (std::uint32_t g = 0; g < d.k; ++g) sums.try_emplace({l, q, l, g, g, q}, Rational(0));
    }
  }

  VerificationReport report;
  for (const auto& [key, actual] : sums) {
    const auto [l, q, i, j, g, h] = key;
    const bool target = i == l && j == g && h == q;
    const Rational expected(target ? 1 : 0);
    if (actual != expected) report.violations.push_back({l, q, i, j, g, h, expected, actual});
  }
  report.valid = report.violations.empty();
  return report;
}

bool verify_trilinear_random(const BilinearAlgorithm& alg, std::size_t trials, std::uint64_t prime,
                             std::uint64_t seed) {
  if (trials == 0) throw BadArgument("at least one trial is required");
  const PrimeField field(prime);
  const auto& d = alg.dims();
  const std::uint64_t biggest = std::max<std::uint64_t>({d.m, d.k, d.n, alg.rank()});
  if (prime <= biggest) {
    throw BadArgument("prime " + std::to_string(prime) + " must exceed max(m,k,n,R) = " + std::to_string(biggest));
  }

  struct Embedded {
    std::vector<std::pair<std::size_t, ModularScalar>> u, v, w;
  };
  std::vector<Embedded> coeffs;
  coeffs.reserve(alg.rank());
  for (const auto& p : alg.products()) {
    Embedded e;
    for (const auto& c : p.u) e.u.emplace_back(c.row * d.k + c.col, field.from_rational(c.value));
    for (const auto& c : p.v) e.v.emplace_back(c.row * d.n + c.col, field.from_rational(c.value));
    // w_lq pairs with d_ql; D is n x m.
    for (const auto& c : p.w) e.w.emplace_back(c.col * d.m + c.row, field.from_rational(c.value));
    coeffs.push_back(std::move(e));
  }

  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t count) {
    std::vector<ModularScalar> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(field.element(rng()));
    return out;
  };
  const ModularScalar zero = field.element(0);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = draw(d.m * d.k);  // a_ij at i*k + j
    const auto b = draw(d.k * d.n);  // b_jh at j*n + h
    const auto dd = draw(d.n * d.m);  // d_hi at h*m + i

    ModularScalar lhs = zero;
    for (const auto& e : coeffs) {
      ModularScalar la = zero, lb = zero, ld = zero;
      for (const auto& [idx, c] : e.u) la += c * a[idx];
      for (const auto& [idx, c] : e.v) lb += c * b[idx];
      for (const auto& [idx, c] : e.w) ld += c * dd[idx];
      lhs += la * lb * ld;
    }
    ModularScalar rhs = zero;
    for (std::size_t i = 0; i < d.m; ++i) {
      for (std::size_t j = 0; j < d.k; ++j) {
        for (std::size_t h = 0; h < d.n; ++h) rhs += a[i * d.k + j] * b[j * d.n + h] * dd[h * d.m + i];
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

double exponent(const DimensionTriple& dims, std::uint64_t rank) {
  const std::uint64_t volume = dims.volume();
  if (volume < 2) throw Undefined("exponent is undefined for MM(1,1,1)");
  if (rank == 0) throw BadArgument("rank must be positive");
  const auto [r, v] = strip_common_power(rank, volume);
  return 3.0 * (std::log(static_cast<double>(r)) / std::log(static_cast<double>(v)));
}

double exponent(const BilinearAlgorithm& alg) { return exponent(alg.dims(), alg.rank()); }

const KnownRankBounds& known_bounds() {
  static const KnownRankBounds table{{
      {DimensionTriple(2, 2, 2), 7, 7, "r222 >= 7, and Strassen's algorithm gives r222 <= 7"},
      {DimensionTriple(2, 3, 3), 15, 16, "15 <= r233 <= 16"},
      {DimensionTriple(2, 3, 4), 19, std::nullopt, "r234 >= 19"},
      {DimensionTriple(3, 3, 3), 18, std::nullopt, "r333 >= 18"},
      {DimensionTriple(2, 4, 4), std::nullopt, 27, "r244 <= 27"},
  }};
  return table;
}

std::optional<RankBoundEntry> KnownRankBounds::lookup(const DimensionTriple& dims) const {
  std::array<std::size_t, 3> key{dims.m, dims.k, dims.n};
  std::sort(key.begin(), key.end());
  for (const auto& e : entries) {
    std::array<std::size_t, 3> cand{e.dims.m, e.dims.k, e.dims.n};
    std::sort(cand.begin(), cand.end());
    if (cand == key) return e;
  }
  // (2,2,n), n >= 3, in any order; sorted it reads (2,2,n).
  if (key[0] == 2 && key[1] == 2 && key[2] >= 3) {
    const std::uint64_t n = key[2];
    return RankBoundEntry{dims, 3 * n + 2, std::nullopt, "r22n >= 3n+2 for n >= 3"};
  }
  return std::nullopt;
}

bool sanity_rank_lower_bound(const BilinearAlgorithm& alg) {
  return alg.rank() >= KnownRankBounds::generic_lower_bound(alg.dims());
}

}  // namespace mmwb
