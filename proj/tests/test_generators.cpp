#include <doctest.h>

#include <random>
#include <set>

#include "mmwb/bilinear.hpp"
#include "mmwb/errors.hpp"
#include "mmwb/generators.hpp"
#include "oracles.hpp"

using namespace mmwb;

namespace {

std::set<Rational> coefficient_values(const BilinearAlgorithm& alg) {
  std::set<Rational> out;
  for (const auto& p : alg.products()) {
    for (const auto* s : {&p.u, &p.v, &p.w}) {
      for (const auto& e : *s) out.insert(e.value);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("classical") {
  const auto c1 = classical(DimensionTriple(1, 1, 1));
  CHECK(c1.rank() == 1);
  const auto [prod, cost] =
      apply_elementary(c1, Matrix<Rational>(1, 1, Rational(3)), Matrix<Rational>(1, 1, Rational(-4)));
  CHECK(prod(0, 0) == Rational(-12));
  CHECK(classical(DimensionTriple(2, 2, 2)).rank() == 8);
  const auto c234 = classical(DimensionTriple(2, 3, 4));
  CHECK(c234.rank() == 24);
  CHECK(verify_brent(c234).valid);
  CHECK(oracle::dense_brent(c234));
  CHECK(coefficient_values(c234) == std::set<Rational>{Rational(1)});
}

TEST_CASE("strassen") {
  const auto s = strassen_222();
  CHECK(s.rank() == 7);
  CHECK(s.dims() == DimensionTriple(2, 2, 2));
  CHECK(verify_brent(s).valid);
  CHECK(oracle::dense_brent(s));
  for (const auto& v : coefficient_values(s)) CHECK(v.is_unit_or_zero());
  CHECK(exponent(s) == doctest::Approx(std::log2(7.0)));
}

TEST_CASE("strassen and classical differ as triples but agree as products") {
  const auto s = strassen_222();
  const auto c = classical(DimensionTriple(2, 2, 2));
  CHECK_FALSE(s == c);
  std::mt19937_64 rng(99);
  const PrimeField f(PrimeField::kMersenne61);
  for (int t = 0; t < 100; ++t) {
    const auto a = oracle::random_modular(2, 2, f, rng);
    const auto b = oracle::random_modular(2, 2, f, rng);
    CHECK(apply_elementary(s, a, b).first == apply_elementary(c, a, b).first);
  }
}

TEST_CASE("the printed aggregation identity expands to trace(ABD)") {
  // Independent of the generator: expands the identity monomial by monomial.
  for (std::size_t n : {2, 4, 6}) {
    CAPTURE(n);
    CHECK(oracle::aggregation_identity(n) == oracle::trace_form(n, n, n));
  }
}

TEST_CASE("pan_aggregation") {
  for (std::size_t n : {2, 4, 6, 8, 10, 12}) {
    CAPTURE(n);
    const auto alg = pan_aggregation(n);
    CHECK(alg.rank() == n * n * n / 2 + 3 * n * n);
    CHECK(alg.dims() == DimensionTriple(n, n, n));
    CHECK(verify_brent(alg).valid);
    // Beats the classical rank exactly from n = 8 on.
    CHECK((alg.rank() < n * n * n) == (n >= 8));
    CHECK(sanity_rank_lower_bound(alg));
    // Wraparound makes some aggregates repeat a variable, hence +-2.
    for (const auto& v : coefficient_values(alg)) {
      CHECK((v == Rational(1) || v == Rational(-1) || v == Rational(2) || v == Rational(-2)));
    }
  }
  for (std::size_t n : {2, 4}) CHECK(oracle::dense_brent(pan_aggregation(n)));
  for (std::size_t n : {2, 4, 6}) CHECK(oracle::trilinear_of(pan_aggregation(n)) == oracle::trace_form(n, n, n));

  CHECK(pan_aggregation(34).rank() == 23120);
  CHECK_THROWS_AS(pan_aggregation(3), BadArgument);
  CHECK_THROWS_AS(pan_aggregation(0), BadArgument);
  CHECK_THROWS_AS(pan_aggregation(1), BadArgument);
}
