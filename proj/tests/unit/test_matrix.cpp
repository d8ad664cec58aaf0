#include <doctest.h>

#include "generators.hpp"
#include "oinv/errors.hpp"
#include "oinv/matrix.hpp"
#include "oracles.hpp"

using namespace oinv;

namespace {

Matrix random_matrix(SeededRng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.uniform(0, 3) != 0) m(r, c) = rng.rational(4);
  return m;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz formula") {
  SeededRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix m = random_matrix(rng, n, n);
    REQUIRE(determinant(m) == oracle::leibniz_determinant(m));
  }
  CHECK(determinant(Matrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("rank agrees with naive elimination") {
  SeededRng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    Matrix m = random_matrix(rng, rows, cols);
    if (rows > 1 && rng.uniform(0, 1) == 0) {
      // Force a dependent row.
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * make_rational(3, 2);
    }
    REQUIRE(rank(m) == oracle::naive_rank(m));
  }
}

TEST_CASE("inverse") {
  const Matrix m{{make_rational(1), make_rational(2)}, {make_rational(3), make_rational(4)}};
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(2));
  const Matrix singular{{make_rational(1), make_rational(2)}, {make_rational(2), make_rational(4)}};
  CHECK_FALSE(inverse(singular));
}
