#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmwb/algorithm.hpp"
#include "mmwb/matrix.hpp"
#include "mmwb/modular.hpp"

namespace mmwb {

/// A failing Brent equation, indexed by output (l,q), A entry (i,j) and
/// B entry (g,h).
struct BrentViolation {
  std::size_t l, q, i, j, g, h;
  Rational expected;
  Rational actual;
};

struct VerificationReport {
  bool valid = true;
  std::vector<BrentViolation> violations;  // sorted by (l,q,i,j,g,h)
};

/// Operation counts of one execution. Multiplications and additions by
/// coefficients 0 and +-1 are free; only nonzero terms are added.
struct CostReport {
  std::uint64_t bilinear_mults = 0;  // products of two data entries
  std::uint64_t scalar_mults = 0;    // multiplications by coefficients outside {-1,0,1}
  std::uint64_t additions = 0;       // additions and subtractions
  std::uint64_t divisions = 0;       // scalar reciprocals (inversion only)
  std::string context;

  CostReport& operator+=(const CostReport& o) {
    bilinear_mults += o.bilinear_mults;
    scalar_mults += o.scalar_mults;
    additions += o.additions;
    divisions += o.divisions;
    return *this;
  }
};

/// Exact coefficient-matching check: for every (l,q,i,j,g,h),
/// sum_s u^s_ij v^s_gh w^s_lq == [i=l][j=g][h=q].
VerificationReport verify_brent(const BilinearAlgorithm& alg);

/// Randomized check of sum_s U_s(A) V_s(B) W_s(D) == trace(ABD) over GF(p),
/// with W_s(D) = sum w^s_lq d_ql and D of size n x m. Returns false on the
/// first mismatching trial.
bool verify_trilinear_random(const BilinearAlgorithm& alg, std::size_t trials, std::uint64_t prime,
                             std::uint64_t seed = 0);

/// 3 ln R / ln(mkn). Throws Undefined for MM(1,1,1).
double exponent(const BilinearAlgorithm& alg);
double exponent(const DimensionTriple& dims, std::uint64_t rank);

struct RankBoundEntry {
  DimensionTriple dims;
  std::optional<std::uint64_t> lower;
  std::optional<std::uint64_t> upper;
  std::string note;
};

/// Published bounds on the minimal rank r_mkn.
struct KnownRankBounds {
  std::vector<RankBoundEntry> entries;

  /// Bounds for a triple, or nullopt when none is recorded. Minimal rank is
  /// invariant under permuting (m,k,n), so any ordering of a recorded
  /// triple matches; the (2,2,n) family applies for n >= 3.
  std::optional<RankBoundEntry> lookup(const DimensionTriple& dims) const;

  /// The general rule (m+n-1)k <= r_mkn.
  static std::uint64_t generic_lower_bound(const DimensionTriple& dims) {
    return (std::uint64_t{dims.m} + dims.n - 1) * dims.k;
  }
};

const KnownRankBounds& known_bounds();

/// rank >= (m+n-1)k.
bool sanity_rank_lower_bound(const BilinearAlgorithm& alg);

namespace detail {

/// Builds sum_t c_t x_t term by term while counting work. `weight` is the
/// number of scalar operations one element operation costs (1 for scalars,
/// b*b for b x b blocks).
template <class Elem>
class LinearCombination {
 public:
  template <class Scalar>
  void add(const Rational& coef, const Elem& x, const Scalar& like, std::uint64_t weight, CostReport& cost) {
    if (coef.is_zero()) return;
    const bool plus = coef.is_one();
    const bool minus = coef.is_minus_one();
    if (!value_) {
      if (plus) {
        value_ = x;
      } else if (minus) {
        value_ = -x;
      } else {
        value_ = x * ScalarTraits<Scalar>::embed(coef, like);
        cost.scalar_mults += weight;
      }
      return;
    }
    if (plus) {
      *value_ += x;
    } else if (minus) {
      *value_ -= x;
    } else {
      *value_ += x * ScalarTraits<Scalar>::embed(coef, like);
      cost.scalar_mults += weight;
    }
    cost.additions += weight;
  }

  bool empty() const { return !value_.has_value(); }
  Elem take_or(Elem zero) { return value_ ? std::move(*value_) : std::move(zero); }

 private:
  std::optional<Elem> value_;
};

}  // namespace detail

/// Runs the elementary program once on scalar matrices: R products of
/// linear forms, then the output combinations.
template <RingScalar T>
std::pair<Matrix<T>, CostReport> apply_elementary(const BilinearAlgorithm& alg, const Matrix<T>& a,
                                                  const Matrix<T>& b) {
  const auto& d = alg.dims();
  if (a.rows() != d.m || a.cols() != d.k || b.rows() != d.k || b.cols() != d.n) {
    throw DimensionError("algorithm for " + d.to_string() + " applied to " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  CostReport cost;
  cost.context = "elementary " + d.to_string() + " rank " + std::to_string(alg.rank());
  const T zero = a.zero();
  std::vector<detail::LinearCombination<T>> out(d.m * d.n);
  for (const auto& p : alg.products()) {
    detail::LinearCombination<T> left;
    detail::LinearCombination<T> right;
    for (const auto& e : p.u) left.add(e.value, a(e.row, e.col), zero, 1, cost);
    for (const auto& e : p.v) right.add(e.value, b(e.row, e.col), zero, 1, cost);
    const T product = left.take_or(zero) * right.take_or(zero);
    ++cost.bilinear_mults;
    for (const auto& e : p.w) out[e.row * d.n + e.col].add(e.value, product, zero, 1, cost);
  }
  std::vector<T> entries;
  entries.reserve(out.size());
  for (auto& c : out) entries.push_back(c.take_or(zero));
  return {Matrix<T>(d.m, d.n, std::move(entries)), std::move(cost)};
}

}  // namespace mmwb
