#include <doctest.h>

#include <random>
#include <sstream>

#include "mmwb/errors.hpp"
#include "mmwb/linalg.hpp"
#include "mmwb/matrix.hpp"
#include "mmwb/matrix_io.hpp"
#include "oracles.hpp"

using namespace mmwb;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK(Rational(0, -5).to_fraction_string() == "0/1");
  CHECK(Rational(7).to_fraction_string() == "7/1");
  CHECK((Rational(-3, 4) * Rational(4, 9)) == Rational(-1, 3));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  for (const char* bad : {"", "/", "1/", "a", "1.5", "1/-2", "--1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), BadArgument);
  }
}

TEST_CASE("canonical form from any (num, den) pair") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 2001) - 1000;
    if (den == 0) den = 1;
    const Rational r(num, den);
    CHECK(r.denominator() > 0);
    CHECK(gcd(abs(r.numerator()), r.denominator()) == 1);
    // Same value as num/den: cross-multiplication in exact integers.
    CHECK(r.numerator() * den == r.denominator() * num);
  }
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(3);
  auto draw = [&] { return Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 12)); };
  for (int t = 0; t < 1000; ++t) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("modular arithmetic") {
  const PrimeField f7(7);
  CHECK((f7.element(3) * f7.element(5)).value() == 1);
  CHECK((f7.element(3) - f7.element(5)).value() == 5);
  CHECK((-f7.element(0)).value() == 0);
  CHECK(f7.from_signed(-1).value() == 6);
  CHECK(f7.from_rational(Rational(1, 2)).value() == 4);
  CHECK(f7.element(3).inverse().value() == 5);
  CHECK_THROWS_AS(f7.element(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(f7.from_rational(Rational(1, 7)), BadField);
  CHECK_THROWS_AS(PrimeField(9), BadField);
  CHECK_THROWS_AS(PrimeField(1), BadField);
  CHECK_THROWS_AS(f7.element(1) + PrimeField(11).element(1), BadArgument);

  const PrimeField big(PrimeField::kMersenne61);
  const auto x = big.element(PrimeField::kMersenne61 - 1);  // -1
  CHECK((x * x).value() == 1);
  CHECK((x + x).value() == PrimeField::kMersenne61 - 2);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(PrimeField::kMersenne61));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  int count = 0;
  for (std::uint64_t n = 0; n < 1000; ++n) count += is_prime(n);
  CHECK(count == 168);
}

TEST_CASE("classical multiplication") {
  const Matrix<Rational> a(2, 2, {Rational(1), Rational(2), Rational(3), Rational(4)});
  const Matrix<Rational> b(2, 2, {Rational(5), Rational(6), Rational(7), Rational(8)});
  const Matrix<Rational> expected(2, 2, {Rational(19), Rational(22), Rational(43), Rational(50)});
  CHECK(mat_classical_multiply(a, b) == expected);
  CHECK(mat_classical_multiply(Matrix<Rational>::identity(2, Rational(1)), b) == b);
  CHECK_THROWS_AS(mat_classical_multiply(Matrix<Rational>(2, 3, Rational(1)), b), DimensionError);
  CHECK_THROWS_AS(Matrix<Rational>(0, 3, Rational(1)), DimensionError);
  CHECK_THROWS_AS(Matrix<Rational>(2, 2, std::vector<Rational>(3)), DimensionError);
}

TEST_CASE("classical multiplication commutes with reduction mod p") {
  std::mt19937_64 rng(5);
  const PrimeField f(1000003);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng() % 5, k = 1 + rng() % 5, n = 1 + rng() % 5;
    const auto a = oracle::random_rational(m, k, rng, 1000, 1);
    const auto b = oracle::random_rational(k, n, rng, 1000, 1);
    CHECK(reduce_mod(mat_classical_multiply(a, b), f) ==
          mat_classical_multiply(reduce_mod(a, f), reduce_mod(b, f)));
  }
}

TEST_CASE("gauss-jordan inverse and rank") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = oracle::unit_lu(n, rng);
    CHECK(is_identity(mat_classical_multiply(a, gauss_jordan_inverse(a))));
    CHECK(matrix_rank(a) == n);
  }
  Matrix<Rational> singular(3, 3, Rational(1));
  CHECK(matrix_rank(singular) == 1);
  CHECK_THROWS_AS(gauss_jordan_inverse(singular), SingularMatrix);
}

TEST_CASE("matrix text format") {
  std::istringstream in("2 3\n1 -2/4 0\n\n7/3 5 -1\n");
  const auto m = read_matrix(in);
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == Rational(-1, 2));
  std::ostringstream out;
  write_matrix(out, m);
  CHECK(out.str() == "2 3\n1 -1/2 0\n7/3 5 -1\n");

  std::mt19937_64 rng(2);
  const auto r = oracle::random_rational(4, 3, rng);
  std::ostringstream w;
  write_matrix(w, r);
  std::istringstream back(w.str());
  CHECK(read_matrix(back) == r);

  auto line_of = [](const char* text) {
    std::istringstream s(text);
    try {
      read_matrix(s);
    } catch (const FormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("2 2\n1 2\n3\n") == 3);
  CHECK(line_of("2 2\n1 2\n") == 3);
  CHECK(line_of("2 x\n") == 1);
  CHECK(line_of("1 1\n1/0\n") == 2);
  CHECK(line_of("1 1\n1\n2\n") == 3);
}
