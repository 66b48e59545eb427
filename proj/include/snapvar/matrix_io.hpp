#pragma once

#include <iosfwd>
#include <string>

#include "snapvar/linalg.hpp"

namespace snapvar {

/// Text matrix format: first non-comment line holds the integer dimension d,
/// followed by d lines of d whitespace-separated entries written as `re,im`
/// decimal pairs, row-major. Lines starting with `#` are comments.
/// Throws std::runtime_error with the offending line number on parse errors.
ComplexMatrix read_matrix_file(const std::string& path);
ComplexMatrix read_matrix(std::istream& in, const std::string& origin);

/// Writes with 17 significant digits so a read back is bit-exact.
void write_matrix_file(const std::string& path, const ComplexMatrix& m);
void write_matrix(std::ostream& out, const ComplexMatrix& m);

}  // namespace snapvar
