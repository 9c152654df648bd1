#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mmwb/algorithm.hpp"
#include "mmwb/matrix.hpp"

namespace mmwb {

/// The six role permutations of (A, B, D) in trace(ABD), named by the
/// dimension triple they produce from (m,k,n).
enum class DualityPermutation { MKN, KNM, NMK, MNK, KMN, NKM };

inline constexpr std::array<DualityPermutation, 6> kAllDualities{
    DualityPermutation::MKN, DualityPermutation::KNM, DualityPermutation::NMK,
    DualityPermutation::MNK, DualityPermutation::KMN, DualityPermutation::NKM};

std::string_view name(DualityPermutation p);
/// Accepts "mkn", "knm", ...; throws BadArgument otherwise.
DualityPermutation parse_duality(std::string_view text);
DimensionTriple permuted_dims(const DimensionTriple& dims, DualityPermutation p);

/// Algorithm for the permuted problem with the same rank. The input must
/// pass verify_brent (InvalidAlgorithm otherwise).
BilinearAlgorithm dual(const BilinearAlgorithm& alg, DualityPermutation p);

/// Kronecker composition: a1 runs on blocks, a2 inside each block. Row
/// index i = i1*m2 + i2 (likewise for every index), product s = s1*R2 + s2.
BilinearAlgorithm tensor_product(const BilinearAlgorithm& a1, const BilinearAlgorithm& a2);

/// alg (x) knm-dual (x) nmk-dual: an MM(mkn, mkn, mkn) algorithm of rank
/// R^3 with the same exponent.
BilinearAlgorithm squareify(const BilinearAlgorithm& alg);

/// Three mutually inverse matrix pairs and a product permutation acting on
/// (U, V, W):
///   U'^s = sigma U^t(s) nabla^T,  V'^s = lambda^T V^t(s) mu^T,
///   W'^s = gamma^T W^t(s) beta.
/// sigma, gamma are m x m; nabla, lambda are k x k; mu, beta are n x n.
struct EquivalenceTransform {
  Matrix<Rational> sigma, gamma;
  Matrix<Rational> nabla, lambda;
  Matrix<Rational> mu, beta;
  std::vector<std::size_t> perm;  // 0-based t(s)

  /// Throws BadTransform unless shapes fit (dims, rank), sigma*gamma,
  /// nabla*lambda and mu*beta are identities and perm is a bijection.
  void validate(const DimensionTriple& dims, std::size_t rank) const;

  static EquivalenceTransform identity(const DimensionTriple& dims, std::size_t rank);
};

BilinearAlgorithm apply_equivalence(const BilinearAlgorithm& alg, const EquivalenceTransform& t);

/// Reproducible random transform: each matrix is L*D*U with small integer
/// unit-triangular L, U and a small rational diagonal D; partners are exact
/// inverses.
EquivalenceTransform random_equivalence(const DimensionTriple& dims, std::size_t rank, std::uint64_t seed);

/// `mmequiv-v1 m k n R`, then the labelled matrices sigma, gamma, nabla,
/// lambda, mu, beta (one row per line) and `perm` followed by the 1-based
/// t(1) .. t(R).
void write_transform(std::ostream& out, const EquivalenceTransform& t);
EquivalenceTransform read_transform(std::istream& in);

}  // namespace mmwb
