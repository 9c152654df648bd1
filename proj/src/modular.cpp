#include "mmwb/modular.hpp"

#include <array>
#include <ostream>

#include "mmwb/errors.hpp"

namespace mmwb {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (const auto a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw BadField(std::to_string(p) + " is not prime");
}

ModularScalar PrimeField::element(std::uint64_t value) const { return {value % p_, p_}; }

ModularScalar PrimeField::from_signed(std::int64_t value) const {
  if (value >= 0) return element(static_cast<std::uint64_t>(value));
  // Magnitude of a negative int64 as unsigned, valid for INT64_MIN too.
  const std::uint64_t mag = ~static_cast<std::uint64_t>(value) + 1;
  return -element(mag);
}

ModularScalar PrimeField::from_rational(const Rational& r) const {
  const mpz_class p(std::to_string(p_));
  mpz_class num = r.numerator() % p;
  if (num < 0) num += p;
  mpz_class den = r.denominator() % p;
  if (den == 0) throw BadField("denominator of " + r.to_string() + " vanishes mod " + std::to_string(p_));
  const auto to_u64 = [](const mpz_class& z) { return std::stoull(z.get_str()); };
  return element(to_u64(num)) / element(to_u64(den));
}

ModularScalar ModularScalar::inverse() const {
  if (value_ == 0) throw DivisionByZero();
  return {pow_mod(value_, p_ - 2, p_), p_};
}

void ModularScalar::require_same_field(const ModularScalar& o) const {
  if (p_ != o.p_) throw BadArgument("mixed moduli in modular arithmetic");
}

ModularScalar& ModularScalar::operator+=(const ModularScalar& o) {
  require_same_field(o);
  value_ = value_ >= p_ - o.value_ ? value_ - (p_ - o.value_) : value_ + o.value_;
  return *this;
}

ModularScalar& ModularScalar::operator-=(const ModularScalar& o) {
  require_same_field(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (p_ - o.value_);
  return *this;
}

ModularScalar& ModularScalar::operator*=(const ModularScalar& o) {
  require_same_field(o);
  value_ = mul_mod(value_, o.value_, p_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ModularScalar& x) { return os << x.value(); }

}  // namespace mmwb
