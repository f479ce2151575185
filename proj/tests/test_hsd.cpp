#include <doctest.h>

#include "hsfact/hsd.hpp"

using namespace hsfact;

namespace {

Weight W(const char* s) { return parse_weight(s); }

SpinorPoly constant_spinor(int m, int k, std::size_t s) {
  SpinorPoly f(m, k);
  f.add(Monomial(static_cast<std::size_t>((k + 1) * m), 0), s, 1);
  return f;
}

}  // namespace

TEST_CASE("explicit factors") {
  CHECK(explicit_hsd_factors(W("1"), 3) == std::vector<Rational>{Rational(1, 3)});
  CHECK(explicit_hsd_factors(W("1,1"), 5) == std::vector<Rational>{Rational(1, 5), Rational(1, 3)});
  CHECK(explicit_hsd_factors(W("2"), 3) == std::vector<Rational>{Rational(1, 5)});
  CHECK_THROWS_AS(explicit_hsd_factors(W("1,1,1"), 7), std::invalid_argument);
}

TEST_CASE("explicit operators preserve their value spaces") {
  for (const auto& [s, m, dim] : std::vector<std::tuple<const char*, int, std::size_t>>{
           {"0", 3, 2}, {"1", 3, 4}, {"2", 3, 6}, {"1", 5, 16}, {"1,1", 5, 20}}) {
    const auto op = explicit_hsd(W(s), m);
    CHECK(op.is_hsd());
    CHECK(op.spec.has_value());
    CHECK(op.source_basis->size() == dim);
    CHECK(op.op.rows() == dim);
    CHECK(op.op.order() == 1);
  }
  CHECK(explicit_hsd(W("1"), 3).name() == "R[(1)']");
}

TEST_CASE("the generic family") {
  const auto fam = generic_twistor_hsd(W("1"), 5);
  CHECK(fam.summands.size() == 2);
  CHECK(fam.operators.size() == 4);
  CHECK(fam.far_blocks_vanish);
  CHECK(fam.dirac_squares_to_laplace);
  CHECK(fam.has_block(W("1,0").primed(), W("0,0").primed()));
  CHECK(fam.block(W("0,0").primed(), W("1,0").primed()).name() == "T[(0,0)'<-(1,0)']");
  for (const auto& s : fam.summands) CHECK(s.left * s.basis == linalg::Matrix::identity(s.dimension()));
}

TEST_CASE("explicit and generic realizations agree up to one scalar") {
  for (const auto& [s, m] : std::vector<std::pair<const char*, int>>{{"0", 3}, {"1", 3}, {"1", 5}}) {
    const auto c = compare_realizations(W(s), m, {1, 2, 3});
    CHECK(c.proportional);
    CHECK(c.degree_independent);
    REQUIRE(c.ratio.has_value());
    CHECK_FALSE(c.ratio->is_zero());
  }
}

TEST_CASE("identities on small ambients") {
  for (const auto& [s, m] : std::vector<std::pair<const char*, int>>{{"0", 3}, {"1", 3}, {"1", 5}}) {
    const auto r = verify_identities(W(s), m, 2);
    CHECK(r.pass());
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("kernels") {
  const auto r1 = explicit_hsd(W("1"), 3);
  CHECK(kernel_basis(r1, 0).size() == r1.source_basis->size());
  CHECK(kernel_basis(r1, 1).size() == 8);
  CHECK(kernel_basis(r1, 2).size() == 12);
  for (const auto& f : kernel_basis(r1, 2)) CHECK(apply(*r1.spec, f).is_zero());
}

TEST_CASE("twistor inversion") {
  const int m = 3;
  const auto r1 = explicit_hsd(W("1"), m);
  const auto g = constant_spinor(m, 1, 0);
  const auto f = twistor_inversion(g, 1, 1, m);
  CHECK(apply(OperatorSpec::dirac(0), f) == apply(OperatorSpec::vector_mult(1), g));
  CHECK(apply(OperatorSpec::dirac(1), f).is_zero());
  CHECK(apply(*r1.spec, f).is_zero());

  CHECK(twistor_inversion(SpinorPoly(m, 1), 2, 1, m).is_zero());

  // x_1 e_1 is not monogenic.
  SpinorPoly bad(m, 1);
  Monomial x1(6, 0);
  x1[0] = 1;
  bad.add(x1, 0, 1);
  CHECK_THROWS_AS(twistor_inversion(bad, 2, 1, m), std::invalid_argument);
}

TEST_CASE("polyharmonic order") {
  SpinorPoly r2(3, 0);
  for (int i = 0; i < 3; ++i) {
    Monomial mono(3, 0);
    mono[static_cast<std::size_t>(i)] = 2;
    r2.add(mono, 0, 1);
  }
  CHECK(polyharmonic_order(r2) == 2);
  CHECK(polyharmonic_order(constant_spinor(3, 0, 1)) == 1);
  CHECK(polyharmonic_order(SpinorPoly(3, 0)) == 1);
}

TEST_CASE("induction dimensions") {
  for (int h = 1; h <= 2; ++h) {
    const auto r = verify_induction_dims(1, h, 3);
    CHECK(r.pass());
  }
  const auto r = verify_induction_dims(1, 2, 3);
  CHECK(r.kernel_dim == 12);
  CHECK(r.kernel_dim == r.monogenic_dim + r.lower_kernel_dim);
}

TEST_CASE("polyharmonic bound on ker R_1") {
  const auto c = verify_corollary(W("1"), 3, 2);
  CHECK(c.pass());
  CHECK(c.bound == 2);
  CHECK(c.max_order == 2);
  CHECK(c.sharp);
}

TEST_CASE("numeric factorization") {
  const auto r0 = verify_factorization_numeric(W("0"), 1, 3, {2, 3});
  CHECK(r0.pass());
  REQUIRE(r0.terms.size() == 1);
  CHECK(r0.terms[0].numeric == GaussianRational(-1));

  const auto r1 = verify_factorization_numeric(W("1"), 2, 3, {4});
  CHECK(r1.pass());
  CHECK(r1.terms.size() == 2);

  CHECK_THROWS_AS(verify_factorization_numeric(W("1"), 1, 3, {2}), std::invalid_argument);
  CHECK_THROWS_AS(verify_factorization_numeric(W("1"), 2, 3, {3}), std::invalid_argument);
}

TEST_CASE("intertwiners are unique up to scale") {
  const auto a = cached_family(W("1"), 3);
  const auto& s = a->summand(W("1").primed());
  const auto j = intertwiner(s, s);
  CHECK(j == linalg::Matrix::identity(s.dimension()));
}
