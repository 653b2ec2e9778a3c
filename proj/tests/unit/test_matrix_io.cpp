#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ckron/ckron.hpp"
#include "test_support.hpp"

using namespace ckron;
using testing::Rng;

TEST_CASE("read_matrix: well-formed documents") {
  const CMatrix one = read_matrix(std::string(R"({"rows":1,"cols":1,"data":[[1,0]]})"));
  REQUIRE(one.rows() == 1);
  CHECK(one(0, 0) == cdouble{1.0, 0.0});

  const CMatrix diag = read_matrix(
      std::string(R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0],[0,0]]})"));
  CHECK(max_abs_diff(diag, CMatrix::diagonal(std::vector<double>{1.0, 0.0})) == 0.0);

  // Field order is free; values may be fractional or exponent-form.
  const CMatrix m = read_matrix(
      std::string(R"({"data":[[0.5,-2e-3]],"cols":1,"rows":1})"));
  CHECK(m(0, 0) == cdouble{0.5, -2e-3});
}

TEST_CASE("read_matrix: rejections carry context") {
  const auto fails = [](const std::string& text) {
    CHECK_THROWS_AS(read_matrix(text), ParseError);
  };
  fails(R"({"rows":2,"cols":2,"data":[[1,0]]})");              // count mismatch
  fails(R"({"rows":1,"cols":1})");                             // missing data
  fails(R"({"rows":0,"cols":1,"data":[]})");                   // non-positive dimension
  fails(R"({"rows":1.5,"cols":1,"data":[[1,0]]})");            // non-integer dimension
  fails(R"({"lines":1,"cols":1,"data":[[1,0]]})");             // wrong field name
  fails(R"({"rows":1,"cols":1,"data":[[1,0]],"extra":true})"); // unexpected field
  fails(R"({"rows":1,"cols":1,"data":[[1]]})");                // entry not a pair
  fails(R"({"rows":1,"cols":1,"data":[[1,"x"]]})");            // non-numeric component
  fails(R"([1,2,3])");                                         // not an object
  fails("{rows:1}");                                           // malformed JSON
  fails("");                                                   // empty input

  CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.json"), ParseError);
}

TEST_CASE("matrix round trip through the interchange format is bit-exact") {
  Rng rng(601);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_complex(1 + trial % 4, 1 + (trial / 2) % 3, rng);
    const CMatrix back = read_matrix(matrix_to_json(m));
    REQUIRE(back.rows() == m.rows());
    REQUIRE(back.cols() == m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) CHECK(back(i, j) == m(i, j));
  }
}

TEST_CASE("serialized values use 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-1e-9) == "-1.0000000000000001e-09");

  const CMatrix m{{cdouble{1.0 / 3.0, 0.0}}};
  CHECK(matrix_to_json(m) ==
        R"({"rows":1,"cols":1,"data":[[0.33333333333333331,0]]})");
}

TEST_CASE("write_matrix emits a single line") {
  std::ostringstream out;
  write_matrix(out, CMatrix::identity(1));
  CHECK(out.str() == "{\"rows\":1,\"cols\":1,\"data\":[[1,0]]}\n");
}
