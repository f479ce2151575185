#include <doctest.h>

#include "hsfact/opalgebra.hpp"

using namespace hsfact;

namespace {
Weight W(const char* s) { return parse_weight(s); }
}  // namespace

TEST_CASE("symbol constructors follow the zero convention") {
  CHECK(make_twistor(W("1,0"), W("0,0")).size() == 1);
  CHECK(make_twistor(W("1,2"), W("1,1")).is_zero());
  CHECK(make_hsd(W("3")).size() == 1);
  CHECK(make_laplace(W("2,1"), 2).size() == 1);
  CHECK_THROWS_AS(make_twistor(W("2,0"), W("0,0")), std::invalid_argument);
}

TEST_CASE("normalization signs") {
  CHECK(normalization_sign(W("0,0"), 0) == 1);
  CHECK(normalization_sign(W("1,0"), 1) == 1);
  CHECK(normalization_sign(W("1,1"), 0) == -1);
  CHECK_THROWS(normalization_sign(W("1,1"), 1));
}

TEST_CASE("elementary squares commute after normalization") {
  for (std::size_t rank = 2; rank <= 3; ++rank)
    for (const auto& w : dominant_weights(rank, 2))
      for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = a + 1; b < rank; ++b) {
          const Weight top = w.plus_unit(a).plus_unit(b);
          if (!is_dominant(w.plus_unit(a)) || !is_dominant(w.plus_unit(b))) continue;
          const auto via_a = make_twistor(top, w.plus_unit(a)) * make_twistor(w.plus_unit(a), w);
          const auto via_b = make_twistor(top, w.plus_unit(b)) * make_twistor(w.plus_unit(b), w);
          CHECK(normal_form(via_a) == normal_form(via_b));
          CHECK(normal_form(via_a, TwistorConvention::raw) == normal_form(via_b, TwistorConvention::raw) * Rational(-1));
        }
}

TEST_CASE("normal form examples") {
  const auto chain = make_twistor(W("2,1"), W("1,1")) * make_twistor(W("1,1"), W("1,0"));
  const auto canonical = path_operator(canonical_path(W("1,0"), W("2,1")));
  CHECK(normal_form(chain) == normal_form(canonical));
  CHECK(normal_form(chain).terms().begin()->second == Rational(1));
  CHECK(normal_form(chain).terms().begin()->first.to_string() == "T[(2,1)'<-(2,0)'] T[(2,0)'<-(1,0)']");

  CHECK(normal_form(make_twistor(W("2,2"), W("2,1")) * make_twistor(W("2,1"), W("1,1"))).is_zero());

  const auto rt = make_hsd(W("1")) * make_twistor(W("1"), W("0"));
  const auto tr = make_twistor(W("1"), W("0")) * make_hsd(W("0"));
  CHECK(normal_form(rt) == normal_form(tr) * Rational(-1));
}

TEST_CASE("normal form is idempotent and Laplace symbols are central") {
  const auto e = make_laplace(W("2,1")) * make_twistor(W("2,1"), W("2,0")) * make_hsd(W("2,0")) +
                 make_twistor(W("2,1"), W("2,0")) * make_laplace(W("2,0"));
  const auto nf = normal_form(e);
  CHECK(normal_form(nf) == nf);
  const auto a = make_laplace(W("1,0")) * make_twistor(W("1,0"), W("0,0"));
  const auto b = make_twistor(W("1,0"), W("0,0")) * make_laplace(W("0,0"));
  CHECK(normal_form(a) == normal_form(b));
}

TEST_CASE("path operators") {
  const auto p = path_operator(canonical_path(W("0,0"), W("2,1")));
  REQUIRE(p.size() == 1);
  CHECK(p.terms().begin()->first.symbols.size() == 3);
  CHECK(path_operator(canonical_path(W("1,1"), W("1,1"))) == OperatorExpr::identity(W("1,1")));
}

TEST_CASE("path independence") {
  const auto r = verify_path_independence(W("1,0"), W("2,1"), 100);
  CHECK(r.pass);
  CHECK(r.paths.size() == 2);
  CHECK(verify_path_independence(W("0"), W("3"), 100).paths.size() == 1);
  CHECK(verify_path_independence(W("0,0"), W("2,2"), 100).pass);
}

TEST_CASE("the raw convention is path dependent") {
  const auto r = verify_path_independence(W("1,0"), W("2,1"), 100, TwistorConvention::raw);
  CHECK(r.paths.size() == 2);
  CHECK_FALSE(r.pass);
}

TEST_CASE("range sweeps") {
  const auto paths = sweep_path_independence(2, 3, 100000);
  CHECK(paths.pass());
  CHECK(paths.pairs > 0);
  const auto boxes = sweep_box_vanishing(2, 3);
  CHECK(boxes.pass());
}

TEST_CASE("vanishing outside the box") {
  const auto t = vanish_outside_box(W("2,2"), W("1,1"));
  CHECK(t.alternate == W("1,2").primed());
  CHECK(t.forward_form.is_zero());
  CHECK(t.reverse_form.is_zero());

  const auto u = vanish_outside_box(W("3,2"), W("1,0"));
  CHECK(u.index == 0);
  CHECK(u.route.nodes == std::vector<Weight>{W("1,0"), W("1,1"), W("2,1"), W("2,2"), W("3,2")});
  CHECK(u.alternate == W("1,2").primed());
  CHECK(u.forward_form.is_zero());
  CHECK_FALSE(u.steps.empty());

  CHECK_THROWS_AS(vanish_outside_box(W("2,2,0"), W("2,1,0")), std::invalid_argument);
}

TEST_CASE("split Laplace at a top vertex") {
  const auto d = split_laplace(W("1,0"));
  CHECK(d.size() == 2);
  CHECK(split_laplace(W("0,0")) == make_hsd(W("0,0")) * make_hsd(W("0,0")) * Rational(-1));
}

TEST_CASE("certificates") {
  const auto c0 = expand_laplace_power(W("0,0"), 1);
  CHECK(c0.coefficients() == std::map<Weight, Rational>{{W("0,0"), Rational(-1)}});
  CHECK(c0.residual.is_zero());
  CHECK(certificate_reproduces_power(c0));

  const auto c1 = expand_laplace_power(W("1,0"), 2);
  REQUIRE(c1.terms.size() == 2);
  CHECK(c1.coefficients().at(W("1,0")) == Rational(-1));
  CHECK(c1.coefficients().at(W("0,0")) == Rational(1));
  CHECK(c1.terms[0].laplace_power == 1);
  CHECK(c1.terms[1].laplace_power == 0);
  CHECK(c1.residual.is_zero());
  CHECK(certificate_reproduces_power(c1));

  const auto low = expand_laplace_power(W("1,0"), 1);
  CHECK_FALSE(low.residual.is_zero());
  CHECK(certificate_reproduces_power(low));

  const auto c2 = expand_laplace_power(W("2,1"), 3);
  const std::map<Weight, Rational> expected{
      {W("2,1"), Rational(-1)}, {W("2,0"), Rational(1)}, {W("1,1"), Rational(1)}, {W("1,0"), Rational(-2)}};
  CHECK(c2.coefficients() == expected);
  CHECK(c2.residual.is_zero());
  CHECK(certificate_reproduces_power(c2));
}

TEST_CASE("certificates over rank <= 3 with mu_1 <= 2") {
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (const auto& mu : dominant_weights(rank, 2))
      for (int p = mu[0] + 1; p <= mu[0] + 2; ++p) {
        const auto c = expand_laplace_power(mu, p);
        CHECK(c.residual.is_zero());
        for (const auto& t : c.terms) CHECK(in_box(mu, t.lambda));
        CHECK(certificate_reproduces_power(c));
      }
}
