#include "qcomm/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace qcomm {

namespace {

constexpr Eigen::Index kMaxDim = 4096;

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw MatrixParseError(source + ": " + what);
}

}  // namespace

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

Complex parse_complex(const std::string& token) {
  if (token.empty()) throw MatrixParseError("empty entry token");
  if (token.back() != 'i') {
    throw MatrixParseError("entry '" + token + "' does not end in 'i'");
  }
  // Split at the sign of the imaginary part: the last '+'/'-' that is not an
  // exponent sign and not the leading sign of the real part.
  std::size_t split = std::string::npos;
  for (std::size_t pos = token.size() - 1; pos > 0; --pos) {
    const char ch = token[pos];
    if ((ch == '+' || ch == '-') && token[pos - 1] != 'e' && token[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  if (split == std::string::npos) {
    throw MatrixParseError("entry '" + token + "' has no imaginary part sign");
  }
  const std::string re_str = token.substr(0, split);
  const std::string im_str = token.substr(split, token.size() - split - 1);
  auto parse_double = [&](const std::string& s) {
    if (s.empty()) throw MatrixParseError("entry '" + token + "' has an empty component");
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
      throw MatrixParseError("entry '" + token + "' has a malformed component '" + s + "'");
    }
    return value;
  };
  const double re = parse_double(re_str);
  const double im = parse_double(im_str);
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw MatrixParseError("entry '" + token + "' is not finite");
  }
  return {re, im};
}

ComplexMatrix read_matrix(std::istream& in, const std::string& source) {
  long long dim = 0;
  if (!(in >> dim)) fail(source, "missing or malformed dimension line");
  if (dim < 1 || dim > kMaxDim) {
    fail(source, "dimension " + std::to_string(dim) + " out of range [1, " +
                     std::to_string(kMaxDim) + "]");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(n, n);
  std::string token;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(in >> token)) {
        fail(source, "unexpected end of input at entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
      try {
        m(i, j) = parse_complex(token);
      } catch (const MatrixParseError& e) {
        fail(source, "entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " + e.what());
      }
    }
  }
  if (in >> token) fail(source, "trailing content after the last entry: '" + token + "'");
  return m;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MatrixParseError(path.string() + ": cannot open for reading");
  return read_matrix(in, path.string());
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  require_square(m, "write_matrix");
  require_finite(m, "write_matrix");
  out << m.rows() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_complex(m(i, j));
    }
    out << "\n";
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw MatrixParseError(path.string() + ": cannot open for writing");
  write_matrix(out, m);
  out.flush();
  if (!out) throw MatrixParseError(path.string() + ": write failed");
}

}  // namespace qcomm
