// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mmwb/bilinear.hpp"
#include "mmwb/generators.hpp"
#include "mmwb/linalg.hpp"
#include "mmwb/recursion.hpp"
#include "mmwb/transforms.hpp"
#include "oracles.hpp"

using namespace mmwb;

namespace {

constexpr std::uint64_t kP61 = PrimeField::kMersenne61;
constexpr std::size_t kTrials = 20;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED: " << what << ';';
    }
  }
};

std::vector<BilinearAlgorithm> shipped_algorithms() {
  std::vector<BilinearAlgorithm> out{classical(DimensionTriple(1, 1, 1)), classical(DimensionTriple(2, 2, 2)),
                                     classical(DimensionTriple(2, 3, 4)), classical(DimensionTriple(3, 3, 3)),
                                     classical(DimensionTriple(2, 3, 3)), strassen_222()};
  for (std::size_t n : {2, 4, 6}) out.push_back(pan_aggregation(n));
  for (const auto p : kAllDualities) out.push_back(dual(classical(DimensionTriple(2, 3, 4)), p));
  out.push_back(tensor_product(strassen_222(), strassen_222()));
  return out;
}

// 1. Aggregation scheme: exact Brent validity and rank n^3/2 + 3n^2.
Outcome aggregation_validity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {2, 4, 6, 8, 10, 12}) {
    const auto alg = pan_aggregation(n);
    const std::size_t expected_rank = n * n * n / 2 + 3 * n * n;
    o.require(alg.rank() == expected_rank, "rank at n=" + std::to_string(n));
    o.require(verify_brent(alg).valid, "verify_brent at n=" + std::to_string(n));
    o.detail << " n=" << n << ":R=" << alg.rank();
  }
  o.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(60), "runtime under 60 s");
  return o;
}

// 2. Exponents: pan(34) within 5e-4 of 2.8495, strassen within 1e-12 of
// log2 7; randomized trilinear checks at n = 14, 20, 34.
Outcome exponent_reproduction() {
  Outcome o;
  const auto pan34 = pan_aggregation(34);
  const double e34 = exponent(pan34);
  o.require(pan34.rank() == 23120, "pan(34) rank");
  o.require(std::abs(e34 - 2.8495) <= 5e-4, "pan(34) exponent");
  const double es = exponent(strassen_222());
  o.require(std::abs(es - std::log2(7.0)) <= 1e-12, "strassen exponent");
  o.detail << std::setprecision(10) << " p(34)=" << e34 << " p(strassen)=" << es;
  for (std::size_t n : {14, 20, 34}) {
    const bool ok = verify_trilinear_random(n == 34 ? pan34 : pan_aggregation(n), kTrials, kP61, n);
    o.require(ok, "trilinear check at n=" + std::to_string(n));
  }
  return o;
}

// 3. Brent and randomized trilinear verification agree on >= 200 cases.
Outcome verifier_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::size_t cases = 0, disagreements = 0, valid = 0;
  auto check = [&](const BilinearAlgorithm& alg) {
    const bool exact = verify_brent(alg).valid;
    const bool random = verify_trilinear_random(alg, kTrials, kP61, cases);
    ++cases;
    valid += exact;
    if (exact != random) ++disagreements;
  };
  const auto algs = shipped_algorithms();
  for (const auto& alg : algs) check(alg);
  while (cases < 240) {
    const auto& base = algs[rng() % algs.size()];
    const auto f = static_cast<Factor>(rng() % 3);
    const auto [rows, cols] = base.shape(f);
    const std::size_t s = rng() % base.rank(), r = rng() % rows, c = rng() % cols;
    const long delta = 1 + static_cast<long>(rng() % 3);
    check(base.with_coefficient(f, s, r, c, slice_of(base.product(s), f).at(r, c) + Rational(rng() % 2 ? delta : -delta)));
  }
  o.require(cases >= 200, "at least 200 cases");
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail << " cases=" << cases << " valid=" << valid << " invalid=" << cases - valid
           << " disagreements=" << disagreements;
  return o;
}

// 4. All six duals of strassen and classical(2,3,4) verify with equal rank.
Outcome duality_suite() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& alg : {strassen_222(), classical(DimensionTriple(2, 3, 4))}) {
    for (const auto p : kAllDualities) {
      const auto d = dual(alg, p);
      o.require(d.rank() == alg.rank(), "rank of dual " + std::string(name(p)));
      o.require(d.dims() == permuted_dims(alg.dims(), p), "dims of dual " + std::string(name(p)));
      o.require(verify_brent(d).valid, "validity of dual " + std::string(name(p)) + " of " + alg.dims().to_string());
      ++checked;
    }
  }
  o.detail << " duals=" << checked;
  return o;
}

// 5. Strassen recursion, threshold 1, K = 2^t: 7^t multiplications, modelled
// additions, exact products over GF(p).
Outcome recursion_counts() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const RecursionConfig cfg(strassen_222(), 1);
  const PrimeField f(kP61);
  std::mt19937_64 rng(5);
  std::uint64_t expected = 1;
  for (unsigned t = 1; t <= 6; ++t) {
    expected *= 7;
    const std::size_t k = std::size_t{1} << t;
    const auto a = oracle::random_modular(k, k, f, rng);
    const auto b = oracle::random_modular(k, k, f, rng);
    const auto [c, cost] = recursive_multiply(cfg, a, b);
    const auto model = cost_model(strassen_222(), k, 1);
    o.require(cost.bilinear_mults == expected, "mults at K=" + std::to_string(k));
    o.require(cost.additions == model.additions, "additions at K=" + std::to_string(k));
    o.require(c == mat_classical_multiply(a, b), "product at K=" + std::to_string(k));
    o.detail << " K=" << k << ":" << cost.bilinear_mults << "/" << cost.additions;
  }
  o.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(10), "runtime under 10 s");
  return o;
}

// 6. Inversion round trips (50 matrices up to 32x32) and multiplication
// through inversion (50 pairs up to 8x8).
Outcome inversion_reductions() {
  Outcome o;
  const RecursionConfig cfg(strassen_222(), 1);
  std::mt19937_64 rng(6);
  std::size_t inverted = 0, multiplied = 0;
  for (std::size_t t = 0; t < 50; ++t) {
    const std::size_t n = 1 + (t * 31) / 49;  // 1 .. 32
    const auto a = oracle::unit_lu(n, rng);
    const auto [x, cost] = recursive_invert(cfg, a);
    o.require(is_identity(mat_classical_multiply(a, x)), "A*X=I at n=" + std::to_string(n));
    ++inverted;
  }
  const std::function<Matrix<Rational>(const Matrix<Rational>&)> invert = [&](const Matrix<Rational>& m) {
    return recursive_invert(cfg, m).first;
  };
  for (std::size_t t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng() % 8, k = 1 + rng() % 8, n = 1 + rng() % 8;
    const auto a = oracle::random_rational(m, k, rng);
    const auto b = oracle::random_rational(k, n, rng);
    o.require(multiply_via_inversion(a, b, invert) == mat_classical_multiply(a, b), "multiply via inversion");
    ++multiplied;
  }
  o.detail << " inversions=" << inverted << " products=" << multiplied;
  return o;
}

// 7. 100 random equivalence transforms of strassen stay valid rank-7
// algorithms; the identity transform is a fixed point.
Outcome equivalence_action() {
  Outcome o;
  const auto s = strassen_222();
  o.require(apply_equivalence(s, EquivalenceTransform::identity(s.dims(), s.rank())) == s, "identity fixed point");
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto r = apply_equivalence(s, random_equivalence(s.dims(), s.rank(), seed));
    const bool good = r.rank() == 7 && verify_brent(r).valid;
    o.require(good, "seed " + std::to_string(seed));
    ok += good;
  }
  o.detail << " valid=" << ok << "/100";
  return o;
}

// 8. Rank lower bound on shipped algorithms; bounds table entries.
Outcome bounds_sanity() {
  Outcome o;
  auto algs = shipped_algorithms();
  for (std::size_t n : {8, 10, 12, 34}) algs.push_back(pan_aggregation(n));
  algs.push_back(squareify(strassen_222()));
  for (const auto& alg : algs) {
    o.require(sanity_rank_lower_bound(alg), "lower bound for " + alg.dims().to_string());
  }
  const auto& table = known_bounds();
  auto row_is = [&](DimensionTriple d, std::optional<std::uint64_t> lo, std::optional<std::uint64_t> hi) {
    const auto r = table.lookup(d);
    o.require(r && r->lower == lo && r->upper == hi, "bounds row " + d.to_string());
  };
  row_is(DimensionTriple(2, 2, 2), 7, 7);
  row_is(DimensionTriple(2, 3, 3), 15, 16);
  row_is(DimensionTriple(2, 3, 4), 19, std::nullopt);
  row_is(DimensionTriple(3, 3, 3), 18, std::nullopt);
  row_is(DimensionTriple(2, 4, 4), std::nullopt, 27);
  for (std::size_t n = 3; n <= 10; ++n) row_is(DimensionTriple(2, 2, n), 3 * n + 2, std::nullopt);
  o.require(table.entries.size() == 5, "five explicit table rows");
  o.detail << " algorithms=" << algs.size() << " table_rows=" << table.entries.size();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 aggregation validity n=2..12, R=n^3/2+3n^2", aggregation_validity},
      {"C2 exponent pan(34)=2.8495+-5e-4, strassen=log2(7)+-1e-12", exponent_reproduction},
      {"C3 Brent vs randomized trilinear agreement (>=200 cases)", verifier_equivalence},
      {"C4 six duals of strassen and classical(2,3,4)", duality_suite},
      {"C5 strassen recursion counts 7^t, modelled additions", recursion_counts},
      {"C6 inversion round trip and multiplication via inversion", inversion_reductions},
      {"C7 equivalence action on strassen", equivalence_action},
      {"C8 rank lower bound and bounds table", bounds_sanity},
  };
  int failures = 0;
  for (const auto& [label, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << label << " (" << std::fixed << std::setprecision(2) << secs
              << " s)" << o.detail.str() << std::endl;
    failures += !o.pass;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
