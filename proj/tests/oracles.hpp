#pragma once

// Test-only reference computations. Nothing here calls the code under test
// beyond reading an algorithm's coefficient lists.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "mmwb/algorithm.hpp"
#include "mmwb/matrix.hpp"

namespace oracle {

using mmwb::Matrix;
using mmwb::Rational;

/// Dense 6-index Brent check over every (l,q,i,j,g,h).
inline bool dense_brent(const mmwb::BilinearAlgorithm& alg) {
  const auto& d = alg.dims();
  const std::size_t m = d.m, k = d.k, n = d.n;
  std::vector<std::vector<Rational>> u, v, w;
  for (const auto& p : alg.products()) {
    std::vector<Rational> du(m * k), dv(k * n), dw(m * n);
    for (const auto& e : p.u) du[e.row * k + e.col] = e.value;
    for (const auto& e : p.v) dv[e.row * n + e.col] = e.value;
    for (const auto& e : p.w) dw[e.row * n + e.col] = e.value;
    u.push_back(std::move(du));
    v.push_back(std::move(dv));
    w.push_back(std::move(dw));
  }
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t g = 0; g < k; ++g)
            for (std::size_t h = 0; h < n; ++h) {
              Rational sum(0);
              for (std::size_t s = 0; s < alg.rank(); ++s) {
                sum += u[s][i * k + j] * v[s][g * n + h] * w[s][l * n + q];
              }
              const bool target = i == l && j == g && h == q;
              if (sum != Rational(target ? 1 : 0)) return false;
            }
  return true;
}

/// Monomial a_{ai,aj} b_{bg,bh} d_{dq,dl}.
using Monomial = std::array<std::size_t, 6>;
using Polynomial = std::map<Monomial, long>;

struct Var {
  std::size_t r, c;
};

inline void add_expansion(Polynomial& poly, const std::vector<Var>& a, const std::vector<Var>& b,
                          const std::vector<Var>& d, long sign) {
  for (const auto& x : a)
    for (const auto& y : b)
      for (const auto& z : d) poly[{x.r, x.c, y.r, y.c, z.r, z.c}] += sign;
}

inline void drop_zeros(Polynomial& poly) {
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
}

/// The aggregation identity expanded straight from its printed form (third
/// correction summed over (i,j)), as a polynomial in a, b, d.
inline Polynomial aggregation_identity(std::size_t n) {
  Polynomial poly;
  auto s = [n](std::size_t x) { return (x + 1) % n; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t h = 0; h < n; ++h)
        if ((i + j + h) % 2 == 0)
          add_expansion(poly, {{i, j}, {s(h), s(i)}}, {{j, h}, {s(i), s(j)}}, {{h, i}, {s(j), s(h)}}, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < n; ++h) {
      std::vector<Var> b;
      for (std::size_t j = 0; j < n; ++j)
        if ((i + j + h) % 2 == 0) {
          b.push_back({j, h});
          b.push_back({s(i), s(j)});
        }
      add_expansion(poly, {{s(h), s(i)}}, b, {{h, i}}, -1);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Var> d;
      for (std::size_t h = 0; h < n; ++h)
        if ((i + j + h) % 2 == 0) {
          d.push_back({h, i});
          d.push_back({s(j), s(h)});
        }
      add_expansion(poly, {{i, j}}, {{s(i), s(j)}}, d, -1);
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t h = 0; h < n; ++h) {
      std::vector<Var> a;
      for (std::size_t i = 0; i < n; ++i)
        if ((i + j + h) % 2 == 0) {
          a.push_back({i, j});
          a.push_back({s(h), s(i)});
        }
      add_expansion(poly, a, {{j, h}}, {{s(j), s(h)}}, -1);
    }
  drop_zeros(poly);
  return poly;
}

/// trace(ABD) = sum a_ij b_jh d_hi for MM(m,k,n).
inline Polynomial trace_form(std::size_t m, std::size_t k, std::size_t n) {
  Polynomial poly;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t h = 0; h < n; ++h) poly[{i, j, j, h, h, i}] += 1;
  return poly;
}

/// Trilinear polynomial of an algorithm with l''(D) = sum w_lq d_ql.
/// Requires integer coefficients.
inline Polynomial trilinear_of(const mmwb::BilinearAlgorithm& alg) {
  Polynomial poly;
  for (const auto& p : alg.products())
    for (const auto& eu : p.u)
      for (const auto& ev : p.v)
        for (const auto& ew : p.w) {
          const Rational c = eu.value * ev.value * ew.value;
          poly[{eu.row, eu.col, ev.row, ev.col, ew.col, ew.row}] += std::stol(c.to_string());
        }
  drop_zeros(poly);
  return poly;
}

inline Matrix<Rational> random_rational(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                        long span = 9, long max_den = 4) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
    const long den = 1 + static_cast<long>(rng() % max_den);
    e.emplace_back(num, den);
  }
  return Matrix<Rational>(rows, cols, std::move(e));
}

inline Matrix<mmwb::ModularScalar> random_modular(std::size_t rows, std::size_t cols, const mmwb::PrimeField& f,
                                                  std::mt19937_64& rng) {
  std::vector<mmwb::ModularScalar> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(f.element(rng()));
  return Matrix<mmwb::ModularScalar>(rows, cols, std::move(e));
}

/// L*U with unit-triangular integer factors: determinant 1 and every
/// leading principal minor equal to 1.
inline Matrix<Rational> unit_lu(std::size_t n, std::mt19937_64& rng, long span = 3) {
  Matrix<Rational> lower(n, n, Rational(0)), upper(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    lower(i, i) = upper(i, i) = Rational(1);
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
      upper(j, i) = Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
    }
  }
  // Plain triple loop, independent of mat_classical_multiply.
  Matrix<Rational> out(n, n, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t t = 0; t < n; ++t) out(r, c) += lower(r, t) * upper(t, c);
  return out;
}

}  // namespace oracle
