// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hsfact/clifford.hpp"
#include "hsfact/diffop.hpp"
#include "hsfact/hsd.hpp"
#include "hsfact/opalgebra.hpp"
#include "hsfact/polyspace.hpp"
#include "hsfact/repthy.hpp"

using namespace hsfact;

namespace {

Weight W(const char* s) { return parse_weight(s); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome path_independence() {
  const auto s = sweep_path_independence(3, 3, 1000000);
  std::ostringstream d;
  d << s.pairs << " pairs, " << s.paths << " paths, " << s.failures.size() << " failures";
  return {s.pass(), d.str()};
}

Outcome box_vanishing() {
  const auto s = sweep_box_vanishing(3, 3);
  std::ostringstream d;
  d << s.pairs << " pairs, " << s.failures.size() << " failures";
  return {s.pass(), d.str()};
}

Outcome certificates() {
  bool ok = true;
  int count = 0;
  int residual_reported = 0;
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (const auto& mu : dominant_weights(rank, 2)) {
      for (int p = mu[0] + 1; p <= mu[0] + 2; ++p) {
        const auto c = expand_laplace_power(mu, p);
        bool support = true;
        for (const auto& t : c.terms) support = support && in_box(mu, t.lambda);
        ok = ok && c.residual.is_zero() && support && certificate_reproduces_power(c);
        ++count;
      }
      if (mu[0] >= 1) {
        const auto low = expand_laplace_power(mu, mu[0]);
        ok = ok && certificate_reproduces_power(low);
        residual_reported += low.residual.is_zero() ? 0 : 1;
      }
    }
  std::ostringstream d;
  d << count << " certificates, " << residual_reported << " non-empty residuals at p = mu_1";
  return {ok, d.str()};
}

Outcome identities() {
  bool ok = true;
  std::size_t checks = 0;
  std::ostringstream d;
  for (const auto& [s, m] : std::vector<std::pair<const char*, int>>{{"0", 3}, {"1", 3}, {"2", 3}, {"1", 5}, {"1,1", 5}}) {
    const auto r = verify_identities(W(s), m, 3);
    checks += r.checks.size();
    if (!r.pass()) {
      ok = false;
      d << "(" << s << "),m=" << m << " failed; ";
    }
  }
  d << checks << " checks";
  return {ok, d.str()};
}

Outcome theorem() {
  const auto a = verify_factorization_numeric(W("1"), 2, 3, {4, 5});
  const auto b = verify_factorization_numeric(W("1,0"), 2, 5, {4});
  std::ostringstream d;
  d << "(1) m=3 degrees 4,5: " << (a.pass() ? "ok" : a.failure) << "; (1,0) m=5 degree 4: " << (b.pass() ? "ok" : b.failure);
  return {a.pass() && b.pass(), d.str()};
}

// Delta^2 f = 0 on every kernel element, and Delta f != 0 for some.
Outcome corollary() {
  const auto r1 = explicit_hsd(W("1"), 3);
  bool ok = true;
  bool sharp = false;
  std::size_t total = 0;
  for (int h = 0; h <= 3; ++h)
    for (const auto& f : kernel_basis(r1, h)) {
      ++total;
      const auto lap = laplace(0, f);
      ok = ok && laplace(0, lap).is_zero();
      sharp = sharp || !lap.is_zero();
    }
  std::ostringstream d;
  d << total << " kernel elements, bound attained: " << (sharp ? "yes" : "no");
  return {ok && sharp, d.str()};
}

Outcome induction() {
  bool ok = true;
  std::ostringstream d;
  std::size_t inversions = 0;
  for (int k = 1; k <= 2; ++k)
    for (int h = 1; h <= 3; ++h) {
      const auto r = verify_induction_dims(k, h, 3);
      inversions += r.inversions;
      if (!r.pass()) {
        ok = false;
        d << "k=" << k << " h=" << h << " failed; ";
      }
    }
  d << inversions << " inversions";
  return {ok, d.str()};
}

Outcome dimensions() {
  bool ok = true;
  std::ostringstream d;
  for (const char* s : {"0", "1", "2", "1,1", "2,1"}) {
    const auto lambda = pad_to_rank(W(s), 2);
    const auto dim = simplicial_monogenic_basis(lambda, 5).dimension();
    const auto weyl = weyl_dim(lambda.primed(), 5);
    ok = ok && dim == weyl;
    d << "(" << s << ")'=" << dim << "/" << weyl << " ";
  }
  return {ok, d.str()};
}

Outcome structure() {
  bool ok = true;
  for (const auto& [s, m] : std::vector<std::pair<const char*, int>>{{"0", 3}, {"1", 3}, {"2", 3}, {"1", 5}, {"1,1", 5}}) {
    const auto amb = cached_ambient(W(s), m);
    ok = ok && check_projectors(*amb, casimir_projectors(*amb)).pass();
  }
  for (int m : {3, 5, 7}) ok = ok && check_gamma_relations(gamma_rep(m));
  for (int m : {3, 5}) {
    const auto& rep = cached_gamma_rep(m);
    const auto d = DiffOp::first_order(m, rep.generators);
    const auto minus_lap = DiffOp::laplace(m, rep.spinor_dim) * GaussianRational(-1);
    ok = ok && d * d == minus_lap;
    for (int h = 2; h <= 4; ++h) {
      const auto domain = homogeneous_basis(m, 0, {h});
      const Coordinatizer codomain(homogeneous_basis(m, 0, {h - 2}));
      const auto dd = OperatorSpec::compose({OperatorSpec::dirac(0), OperatorSpec::dirac(0)});
      ok = ok && operator_matrix(dd, domain, codomain) ==
                     operator_matrix(OperatorSpec::laplace(0), domain, codomain) * GaussianRational(-1);
    }
  }
  return {ok, "projectors, gamma relations, Dirac squared"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"path independence", path_independence},
      {"box vanishing", box_vanishing},
      {"factorization certificates", certificates},
      {"operator identities", identities},
      {"numeric factorization", theorem},
      {"polyharmonic bound and sharpness", corollary},
      {"induction principle", induction},
      {"dimension oracles", dimensions},
      {"structural exactness", structure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("criterion %zu [%s] %s: %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
