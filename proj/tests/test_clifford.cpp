#include <doctest.h>

#include "hsfact/clifford.hpp"

using namespace hsfact;

TEST_CASE("generators square to -1 and anticommute") {
  const auto e1 = CliffordElement::generator(3, 1);
  const auto e2 = CliffordElement::generator(3, 2);
  CHECK(e1 * e1 == CliffordElement::scalar(3, -1));
  CHECK(e1 * e2 == CliffordElement::blade(3, 0b011));
  CHECK(e2 * e1 == CliffordElement::blade(3, 0b011, -1));
  CHECK(e1 * e2 + e2 * e1 == CliffordElement(3));
  // (e1 e2)(e2 e1) = e1 (e2 e2) e1 = -e1 e1 = 1
  CHECK((e1 * e2) * (e2 * e1) == CliffordElement::scalar(3, 1));
}

TEST_CASE("products are associative") {
  const auto a = CliffordElement::generator(5, 1) + CliffordElement::blade(5, 0b10110, GaussianRational::i());
  const auto b = CliffordElement::blade(5, 0b00111, 2) - CliffordElement::generator(5, 4);
  const auto c = CliffordElement::blade(5, 0b11000) + CliffordElement::scalar(5, Rational(1, 3));
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("gamma matrices satisfy the Clifford relations") {
  for (int m : {3, 5, 7}) {
    const auto rep = gamma_rep(m);
    CHECK(rep.spinor_dim == (std::size_t{1} << ((m - 1) / 2)));
    CHECK(rep.generators.size() == static_cast<std::size_t>(m));
    CHECK(check_gamma_relations(rep));
    for (const auto& g : rep.generators) CHECK(g.adjoint() == g * GaussianRational(-1));
  }
  CHECK_THROWS(gamma_rep(4));
  CHECK_THROWS(gamma_rep(1));
  CHECK_THROWS(gamma_rep(0));
}

TEST_CASE("the representation is a homomorphism") {
  const auto rep = gamma_rep(5);
  const auto a = CliffordElement::blade(5, 0b00101) + CliffordElement::generator(5, 3);
  const auto b = CliffordElement::blade(5, 0b11010, GaussianRational::i());
  CHECK(rep.represent(a * b) == rep.represent(a) * rep.represent(b));
}

TEST_CASE("spin generators") {
  for (int m : {3, 5}) {
    const auto rep = gamma_rep(m);
    const auto gens = spin_generators(rep);
    CHECK(gens.size() == static_cast<std::size_t>(m * (m - 1) / 2));
    CHECK(check_spin_brackets(gens));
    for (const auto& g : gens) CHECK(g.matrix.trace() == GaussianRational(0));
  }
}

TEST_CASE("distinct gamma products are traceless") {
  const auto rep = gamma_rep(5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      if (a != b) CHECK((rep.generators[a] * rep.generators[b]).trace() == GaussianRational(0));
}
