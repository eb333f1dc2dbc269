#pragma once

#include "qcomm/matrix_ops.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace qcomm {

class MatrixParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: first line the dimension n, then n lines of n whitespace-
// separated entries "re+imi" (e.g. "1.5-0.25i", "0+1i").  Written with 17
// significant digits so a write/read round trip is lossless.

std::string format_complex(Complex z);
Complex parse_complex(const std::string& token);  // throws MatrixParseError

ComplexMatrix read_matrix(std::istream& in, const std::string& source = "<stream>");
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace qcomm
