#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcomm/matrix_io.hpp"
#include "qcomm/random_matrices.hpp"
#include "test_support.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

using namespace qcomm;

TEST_CASE("complex tokens round-trip through 17 significant digits") {
  const Complex values[] = {
      {0.0, 0.0},
      {1.0, 2.0},
      {-1.5, 0.25},
      {1.0 / 3.0, -2.0 / 7.0},
      {1.2345678901234567e-100, -9.876543210987654e+200},
      {5e-324, -5e-324},  // denormal extremes
  };
  for (const Complex z : values) {
    const Complex back = parse_complex(format_complex(z));
    CHECK(back.real() == z.real());
    CHECK(back.imag() == z.imag());
  }
}

TEST_CASE("parse_complex accepts the documented shapes") {
  CHECK(parse_complex("1+2i") == Complex(1, 2));
  CHECK(parse_complex("-1-2i") == Complex(-1, -2));
  CHECK(parse_complex("0.5e1+0.25e-2i") == Complex(5, 0.0025));
  CHECK(parse_complex("1e+5-3i") == Complex(1e5, -3));
  CHECK(parse_complex("0+0i") == Complex(0, 0));
}

TEST_CASE("parse_complex rejects malformed tokens") {
  CHECK_THROWS_AS(parse_complex(""), MatrixParseError);
  CHECK_THROWS_AS(parse_complex("1+2"), MatrixParseError);      // no trailing i
  CHECK_THROWS_AS(parse_complex("12i"), MatrixParseError);      // no im sign
  CHECK_THROWS_AS(parse_complex("i"), MatrixParseError);
  CHECK_THROWS_AS(parse_complex("1x+2i"), MatrixParseError);    // junk in real part
  CHECK_THROWS_AS(parse_complex("1+2yi"), MatrixParseError);    // junk in imag part
  CHECK_THROWS_AS(parse_complex("nan+0i"), MatrixParseError);   // non-finite
  CHECK_THROWS_AS(parse_complex("1+infi"), MatrixParseError);
}

TEST_CASE("write_matrix emits the frozen layout") {
  ComplexMatrix m(1, 1);
  m(0, 0) = Complex(1.0, 2.0);
  std::ostringstream os;
  write_matrix(os, m);
  CHECK(os.str() == "1\n1+2i\n");
}

TEST_CASE("matrix round trip is bitwise lossless") {
  Rng rng(71);
  for (const Eigen::Index n : {1, 2, 5}) {
    const ComplexMatrix m = random_ginibre(n, rng);
    std::ostringstream os;
    write_matrix(os, m);
    std::istringstream is(os.str());
    const ComplexMatrix back = read_matrix(is);
    CHECK(test::matrices_equal(m, back));
  }
}

TEST_CASE("read_matrix rejects malformed input with located errors") {
  auto read_str = [](const std::string& s) {
    std::istringstream is(s);
    return read_matrix(is, "test");
  };
  CHECK_THROWS_AS(read_str(""), MatrixParseError);
  CHECK_THROWS_AS(read_str("x"), MatrixParseError);            // malformed dimension
  CHECK_THROWS_AS(read_str("0"), MatrixParseError);            // dimension out of range
  CHECK_THROWS_AS(read_str("-3"), MatrixParseError);
  CHECK_THROWS_AS(read_str("5000"), MatrixParseError);         // beyond the cap
  CHECK_THROWS_AS(read_str("2\n1+0i 0+0i\n0+0i"), MatrixParseError);  // truncated
  CHECK_THROWS_AS(read_str("1\nbogus"), MatrixParseError);     // bad token
  CHECK_THROWS_AS(read_str("1\n1+0i extra"), MatrixParseError);  // trailing content
  try {
    read_str("2\n1+0i 0+0i\n0+0i zzz");
    FAIL("expected MatrixParseError");
  } catch (const MatrixParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(1, 1)") != std::string::npos);  // row, col of the bad entry
  }
}

TEST_CASE("whitespace layout inside the body is free-form") {
  std::istringstream is("2\n  1+0i\n0+0i\t0+0i   1+0i\n");
  const ComplexMatrix m = read_matrix(is);
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(1, 1) == Complex(1, 0));
}

TEST_CASE("file round trip and file error paths") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qcomm_io_test";
  fs::create_directories(dir);
  const fs::path path = dir / "m.txt";

  Rng rng(72);
  const ComplexMatrix m = random_ginibre(3, rng);
  write_matrix_file(path, m);
  CHECK(test::matrices_equal(read_matrix_file(path), m));

  CHECK_THROWS_AS(read_matrix_file(dir / "missing.txt"), MatrixParseError);
  // The reported message carries the file name for located diagnostics.
  try {
    read_matrix_file(dir / "missing.txt");
  } catch (const MatrixParseError& e) {
    CHECK(std::string(e.what()).find("missing.txt") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("write_matrix refuses non-square and non-finite matrices") {
  std::ostringstream os;
  CHECK_THROWS_AS(write_matrix(os, ComplexMatrix::Zero(2, 3)), std::invalid_argument);
  ComplexMatrix bad = ComplexMatrix::Zero(1, 1);
  bad(0, 0) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  CHECK_THROWS_AS(write_matrix(os, bad), std::invalid_argument);
}
