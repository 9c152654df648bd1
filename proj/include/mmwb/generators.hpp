#pragma once

#include <cstddef>

#include "mmwb/algorithm.hpp"

namespace mmwb {

/// The schoolbook algorithm: one product a_lg * b_gq per (l,g,q), rank mkn.
BilinearAlgorithm classical(const DimensionTriple& dims);

/// Strassen's seven products for MM(2,2,2).
BilinearAlgorithm strassen_222();

/// Trilinear aggregation for MM(n,n,n), n even: n^3/2 aggregated products
/// over the triples (i,j,h) with i+j+h even, plus three families of n^2
/// correction products. Rank n^3/2 + 3n^2. Throws BadArgument for odd n.
BilinearAlgorithm pan_aggregation(std::size_t n);

}  // namespace mmwb
