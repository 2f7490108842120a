#pragma once

#include <iosfwd>
#include <string>

#include "lmt/complex_matrix.hpp"

namespace lmt {

/// Shared matrix file format:
///   {"n": <int>, "entries": [[re, im], ...]}   (row-major, n*n pairs)
/// Parsing rejects non-square data and non-finite entries (FormatError).
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);
std::string matrix_to_json(const ComplexMatrix& m);

}  // namespace lmt
