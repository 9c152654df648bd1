#pragma once

#include <iosfwd>

#include "mmwb/matrix.hpp"

namespace mmwb {

/// Text format: a `rows cols` line, then `rows` lines of `cols` scalars
/// written as `p/q` or bare integers. Throws FormatError with a line number.
Matrix<Rational> read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix<Rational>& m);

}  // namespace mmwb
