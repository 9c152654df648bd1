#pragma once

#include <iosfwd>

#include "mmwb/algorithm.hpp"

namespace mmwb {

/// mmalg-v1 text format:
///
///     mmalg-v1 m k n R
///
///     U
///     i j p/q
///     ...
///     V
///     ...
///     W
///     ...
///
/// one U/V/W group per product, groups separated by blank lines, only
/// nonzero entries listed. The writer sorts entries; the reader accepts any
/// order, blank lines anywhere and `#` comment lines. Malformed or truncated
/// input throws FormatError carrying the line number.
BilinearAlgorithm read_algorithm(std::istream& in);
void write_algorithm(std::ostream& out, const BilinearAlgorithm& alg);

}  // namespace mmwb
