#include <doctest.h>

#include "hsfact/errors.hpp"
#include "hsfact/polyspace.hpp"

using namespace hsfact;

namespace {

// |x|^2 e_s in m variables, k = 0.
SpinorPoly norm_squared(int m, std::size_t s) {
  SpinorPoly f(m, 0);
  for (int i = 0; i < m; ++i) {
    Monomial mono(static_cast<std::size_t>(m), 0);
    mono[static_cast<std::size_t>(i)] = 2;
    f.add(mono, s, 1);
  }
  return f;
}

}  // namespace

TEST_CASE("homogeneous bases") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(4, 3).size() == 20);
  CHECK(homogeneous_basis(3, 0, {2}).size() == 12);
  CHECK(homogeneous_basis(3, 1, {1, 1}).size() == 18);
  const auto monos = monomials_of_degree(3, 1);
  CHECK(monos.front() == Monomial{1, 0, 0});
  CHECK(monos.back() == Monomial{0, 0, 1});
}

TEST_CASE("Dirac squares to minus Laplace") {
  for (int m : {3, 5}) {
    const auto f = norm_squared(m, 0);
    const auto dd = apply(OperatorSpec::compose({OperatorSpec::dirac(0), OperatorSpec::dirac(0)}), f);
    SpinorPoly expected(m, 0);
    expected.add(Monomial(static_cast<std::size_t>(m), 0), 0, GaussianRational(-2 * m));
    CHECK(dd == expected);
    CHECK(laplace(0, f) == expected * GaussianRational(-1));
  }
  for (const auto& b : homogeneous_basis(3, 0, {3})) {
    const auto dd = apply(OperatorSpec::compose({OperatorSpec::dirac(0), OperatorSpec::dirac(0)}), b);
    CHECK(dd == laplace(0, b) * GaussianRational(-1));
  }
}

TEST_CASE("euler operator measures degree") {
  for (const auto& b : homogeneous_basis(3, 1, {2, 1}))
    CHECK(apply(OperatorSpec::euler(0), b) == b * GaussianRational(2));
}

TEST_CASE("Dirac from degree 1 to degree 0") {
  const auto domain = homogeneous_basis(3, 0, {1});
  const Coordinatizer codomain(homogeneous_basis(3, 0, {0}));
  const auto mat = operator_matrix(OperatorSpec::dirac(0), domain, codomain);
  CHECK(mat.rows() == 2);
  CHECK(mat.cols() == 6);
  CHECK(linalg::rank(mat) == 2);
}

TEST_CASE("operator_matrix matches the serial reference") {
  const auto domain = homogeneous_basis(5, 1, {2, 1});
  const Coordinatizer codomain(homogeneous_basis(5, 1, {1, 1}));
  const auto spec = OperatorSpec::compose(
      {OperatorSpec::scalar_mix({{Rational(1), OperatorSpec::identity()},
                                 {Rational(1, 3), OperatorSpec::compose({OperatorSpec::vector_mult(1), OperatorSpec::dirac(1)})}}),
       OperatorSpec::dirac(0)});
  CHECK(operator_matrix(spec, domain, codomain) == serial::operator_matrix(spec, domain, codomain));
}

TEST_CASE("apply is linear") {
  const auto basis = homogeneous_basis(3, 1, {1, 1});
  const auto f = basis[0] + basis[5] * GaussianRational(Rational(2, 3), Rational(1));
  const auto g = basis[7] * GaussianRational(-1);
  for (const auto& spec : {OperatorSpec::dirac(0), OperatorSpec::mixed_euler(1, 0), OperatorSpec::angular(0, 2),
                           OperatorSpec::gamma(1)})
    CHECK(apply(spec, f + g) == apply(spec, f) + apply(spec, g));
}

TEST_CASE("coordinatizer") {
  const auto basis = homogeneous_basis(3, 0, {1});
  const Coordinatizer c(basis);
  const auto f = basis[1] + basis[4] * GaussianRational(5);
  const auto coords = c.coordinates(f);
  CHECK(coords[1] == GaussianRational(1));
  CHECK(coords[4] == GaussianRational(5));
  CHECK(c.combine(coords) == f);
  CHECK_FALSE(c.in_span(homogeneous_basis(3, 0, {2})[0]));
}

TEST_CASE("common kernel of the Dirac operator") {
  // Monogenic polynomials of degree h in m = 3 have dimension 2(h+1).
  for (int h = 0; h <= 3; ++h) {
    const auto ker = common_kernel(3, {h}, {{OperatorSpec::dirac(0), {h - 1}}}, 100000);
    CHECK(ker.size() == static_cast<std::size_t>(2 * (h + 1)));
  }
  CHECK_THROWS_AS(common_kernel(5, {4}, {{OperatorSpec::dirac(0), {3}}}, 10), ResourceLimitError);
}
