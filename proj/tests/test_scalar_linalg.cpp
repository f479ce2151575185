#include <doctest.h>

#include <random>

#include "hsfact/linalg.hpp"
#include "hsfact/scalar.hpp"

using namespace hsfact;
using linalg::Matrix;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, int density_percent) {
  std::uniform_int_distribution<int> value(-4, 4);
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < density_percent) a(r, c) = GaussianRational(fraction(value(rng), 1 + pct(rng) % 3), Rational(value(rng) % 2));
  return a;
}

}  // namespace

TEST_CASE("rationals render as num/den") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(fraction(-2, 4)) == "-1/2");
  CHECK(fraction(3, -6) == Rational(-1, 2));
  CHECK_THROWS(fraction(1, 0));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS(parse_rational("x/2"));
}

TEST_CASE("gaussian rationals") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1) + i) * (GaussianRational(1) - i) == GaussianRational(2));
  CHECK(GaussianRational(1) / i == -i);
  CHECK(to_string(GaussianRational(Rational(1, 2), Rational(-3))) == "1/2-3/1*i");
}

TEST_CASE("parallel multiply matches the serial reference") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    const Matrix a = random_matrix(13, 9, rng, 40);
    const Matrix b = random_matrix(9, 11, rng, 40);
    CHECK(linalg::multiply(a, b) == linalg::serial::multiply(a, b));
  }
}

TEST_CASE("parallel row reduction matches the serial reference") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    Matrix a = random_matrix(12, 15, rng, 30);
    // Force a dependent row.
    for (std::size_t c = 0; c < a.cols(); ++c) a(11, c) = a(0, c) + a(3, c) * GaussianRational(2);
    const auto fast = linalg::row_reduce(a);
    const auto slow = linalg::serial::row_reduce(a);
    CHECK(fast.reduced == slow.reduced);
    CHECK(fast.pivot_columns == slow.pivot_columns);
    CHECK(fast.rank() <= 11);
  }
}

TEST_CASE("nullspace and solve") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const Matrix n = linalg::nullspace(a);
  CHECK(n.cols() == 1);
  CHECK(linalg::multiply(a, n).is_zero());
  CHECK(linalg::rank(a) == 2);

  const Matrix b = Matrix::from_rows({{6}, {12}, {2}});
  const auto x = linalg::solve(a, b);
  REQUIRE(x);
  CHECK(linalg::multiply(a, *x) == b);
  CHECK_FALSE(linalg::solve(a, Matrix::from_rows({{1}, {0}, {0}})));
}

TEST_CASE("kron and commutator") {
  const Matrix s1 = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix s3 = Matrix::from_rows({{1, 0}, {0, -1}});
  CHECK(linalg::kron(s1, s3).rows() == 4);
  CHECK(linalg::commutator(s1, s3) == linalg::multiply(s1, s3) * GaussianRational(2));
  CHECK(linalg::commutator(s1, s1).is_zero());
}
