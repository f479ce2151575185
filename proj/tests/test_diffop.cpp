#include <doctest.h>

#include "hsfact/clifford.hpp"
#include "hsfact/diffop.hpp"
#include "hsfact/polyspace.hpp"

using namespace hsfact;
using linalg::Matrix;

namespace {

DiffOp dirac(int m) {
  const auto& rep = cached_gamma_rep(m);
  return DiffOp::first_order(m, rep.generators);
}

}  // namespace

TEST_CASE("Dirac squared is minus Laplace") {
  for (int m : {3, 5}) {
    const auto d = dirac(m);
    const auto dim = cached_gamma_rep(m).spinor_dim;
    CHECK(d * d == DiffOp::laplace(m, dim) * GaussianRational(-1));
    CHECK((d * d).order() == 2);
  }
}

TEST_CASE("composition and arithmetic") {
  const auto d = dirac(3);
  const auto id = DiffOp::identity(3, 2);
  CHECK(id * d == d);
  CHECK(d * id == d);
  CHECK(d - d == DiffOp(3, 2, 2, 1));
  CHECK((d - d).is_zero());
  CHECK(d + d == d * GaussianRational(2));
  const Matrix c = Matrix::from_rows({{1, 2}, {0, GaussianRational::i()}});
  CHECK(d.left_multiply(c) == DiffOp::constant(3, c) * d);
  CHECK(d.right_multiply(c) == d * DiffOp::constant(3, c));
  CHECK_THROWS(d + DiffOp::laplace(3, 2));
}

TEST_CASE("materialize agrees with the polynomial action") {
  // Basis: monomials_of_degree x spinor index, spinor fastest, as in homogeneous_basis.
  const auto d = dirac(3);
  for (int h = 1; h <= 3; ++h) {
    const auto domain = homogeneous_basis(3, 0, {h});
    const Coordinatizer codomain(homogeneous_basis(3, 0, {h - 1}));
    CHECK(materialize(d, h) == operator_matrix(OperatorSpec::dirac(0), domain, codomain));
  }
  const auto lap = DiffOp::laplace(3, 2);
  const auto domain = homogeneous_basis(3, 0, {3});
  const Coordinatizer codomain(homogeneous_basis(3, 0, {1}));
  CHECK(materialize(lap, 3) == operator_matrix(OperatorSpec::laplace(0), domain, codomain));
}

TEST_CASE("materialize is multiplicative and matches the serial reference") {
  const auto d = dirac(5);
  for (int h = 2; h <= 3; ++h) {
    CHECK(materialize(d * d, h) == materialize(d, h - 1) * materialize(d, h));
    CHECK(materialize(d * d, h) == serial::materialize(d * d, h));
  }
  CHECK(materialize(d, 0).rows() == 0);
}
