#include <doctest.h>

#include <numeric>

#include "hsfact/repthy.hpp"

using namespace hsfact;

namespace {
Weight W(const char* s) { return parse_weight(s); }
}  // namespace

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(W("0"), 3) == 1);
  CHECK(weyl_dim(W("1"), 3) == 3);
  CHECK(weyl_dim(W("0,0").primed(), 5) == 4);
  CHECK(weyl_dim(W("1,0").primed(), 5) == 16);
  CHECK(weyl_dim(W("1,1").primed(), 5) == 20);
  CHECK(weyl_dim(W("2,1").primed(), 5) == 64);
  CHECK(rank_for_dimension(7) == 3);
  CHECK_THROWS(rank_for_dimension(6));
}

TEST_CASE("simplicial monogenics realize the spin representations") {
  for (const char* s : {"0,0", "1,0", "2,0", "1,1", "2,1"}) {
    const auto lambda = W(s);
    const auto space = simplicial_monogenic_basis(lambda, 5);
    CHECK(space.dimension() == weyl_dim(lambda.primed(), 5));
  }
  CHECK(simplicial_monogenic_basis(W("2"), 3).dimension() == 6);
}

TEST_CASE("Casimir eigenvalues") {
  CHECK(casimir_eigenvalue(W("1,0").primed(), 5) == Rational(15, 2));
  CHECK(casimir_eigenvalue(W("0,0").primed(), 5) == Rational(5, 2));
  CHECK(casimir_eigenvalue(W("0"), 3) == Rational(0));
  CHECK(casimir_eigenvalue(W("1"), 3) == Rational(2));
}

TEST_CASE("projectors split V_lambda (x) S") {
  for (const auto& [s, m] : std::vector<std::pair<const char*, int>>{{"1", 3}, {"2", 3}, {"1,0", 5}, {"1,1", 5}}) {
    const auto amb = build_ambient(W(s), m);
    const auto set = casimir_projectors(amb);
    CHECK(check_projectors(amb, set).pass());
    std::size_t total = 0;
    for (const auto& e : set.entries) {
      const auto r = linalg::rank(e.projector);
      CHECK(r == weyl_dim(e.kappa, m));
      total += r;
    }
    CHECK(total == amb.dimension());
    CHECK(amb.dimension() == weyl_dim(amb.lambda, m) * (std::size_t{1} << ((m - 1) / 2)));
  }
}

TEST_CASE("(1,1) at m = 5 has ranks summing to 40") {
  const auto amb = cached_ambient(W("1,1"), 5);
  const auto set = casimir_projectors(*amb);
  std::size_t total = 0;
  for (const auto& e : set.entries) total += linalg::rank(e.projector);
  CHECK(total == 40);
  CHECK(set.entries.size() == summand_weights(W("1,1")).size());
}

TEST_CASE("ambient generators close under brackets") {
  const auto amb = cached_ambient(W("1"), 3);
  CHECK(check_spin_brackets(amb->generators));
  for (const auto& g : amb->generators) CHECK(linalg::commutator(amb->casimir, g.matrix).is_zero());
}
