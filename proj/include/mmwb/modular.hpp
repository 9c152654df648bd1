#pragma once

#include <cstdint>
#include <iosfwd>

#include "mmwb/rational.hpp"

namespace mmwb {

class ModularScalar;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// GF(p) for a prime p < 2^64. Primality is checked on construction.
class PrimeField {
 public:
  /// 2^61 - 1, the default modulus for randomized checks.
  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  ModularScalar element(std::uint64_t value) const;
  ModularScalar from_signed(std::int64_t value) const;
  /// Image of a rational; throws BadField when p divides the denominator.
  ModularScalar from_rational(const Rational& r) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Element of GF(p). Carries its modulus; mixing moduli is a BadArgument.
class ModularScalar {
 public:
  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  bool is_zero() const noexcept { return value_ == 0; }

  ModularScalar inverse() const;

  ModularScalar operator-() const noexcept { return {value_ == 0 ? 0 : p_ - value_, p_}; }
  ModularScalar& operator+=(const ModularScalar& o);
  ModularScalar& operator-=(const ModularScalar& o);
  ModularScalar& operator*=(const ModularScalar& o);
  ModularScalar& operator/=(const ModularScalar& o) { return *this *= o.inverse(); }

  friend ModularScalar operator+(ModularScalar a, const ModularScalar& b) { return a += b; }
  friend ModularScalar operator-(ModularScalar a, const ModularScalar& b) { return a -= b; }
  friend ModularScalar operator*(ModularScalar a, const ModularScalar& b) { return a *= b; }
  friend ModularScalar operator/(ModularScalar a, const ModularScalar& b) { return a /= b; }
  friend bool operator==(const ModularScalar&, const ModularScalar&) = default;

 private:
  friend class PrimeField;
  ModularScalar(std::uint64_t value, std::uint64_t p) noexcept : value_(value), p_(p) {}

  void require_same_field(const ModularScalar& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const ModularScalar& x);

/// Modular multiplication without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

}  // namespace mmwb
