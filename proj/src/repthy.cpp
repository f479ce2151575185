#include "hsfact/repthy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hsfact {

using linalg::Matrix;

int rank_for_dimension(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("odd dimension m >= 3 required, got " + std::to_string(m));
  return (m - 1) / 2;
}

std::vector<int> dummy_degrees(const Weight& lambda) {
  std::vector<int> degrees{0};
  for (int v : lambda.entries)
    if (v != 0) degrees.push_back(v);
  return degrees;
}

namespace {

Weight padded_integral(const Weight& lambda, int m) {
  if (lambda.spin_shift) throw std::invalid_argument("integral weight expected, got " + lambda.to_string());
  const Weight w = pad_to_rank(lambda, static_cast<std::size_t>(rank_for_dimension(m)));
  if (!is_dominant(w)) throw std::invalid_argument(w.to_string() + " is not dominant");
  return w;
}

RealizedSpace null_space_of(const Weight& lambda, int m, const std::vector<int>& degrees,
                            const std::vector<KernelConstraint>& ops, std::size_t cap) {
  RealizedSpace out;
  out.label = lambda;
  out.m = m;
  out.k = static_cast<int>(degrees.size()) - 1;
  out.degrees = degrees;
  out.basis = common_kernel(m, degrees, ops, cap);
  return out;
}

std::vector<int> shifted(std::vector<int> d, int block, int delta) {
  d[static_cast<std::size_t>(block)] += delta;
  return d;
}

}  // namespace

RealizedSpace simplicial_monogenic_basis(const Weight& lambda, int m, std::size_t cap) {
  const Weight w = padded_integral(lambda, m);
  const std::vector<int> degrees = dummy_degrees(w);
  const int k = static_cast<int>(degrees.size()) - 1;
  std::vector<KernelConstraint> ops;
  for (int p = 1; p <= k; ++p) ops.emplace_back(OperatorSpec::dirac(p), shifted(degrees, p, -1));
  for (int p = 1; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q)
      ops.emplace_back(OperatorSpec::mixed_euler(p, q), shifted(shifted(degrees, p, 1), q, -1));
  return null_space_of(w.primed(), m, degrees, ops, cap);
}

RealizedSpace simplicial_harmonic_basis(const Weight& lambda, int m, std::size_t cap) {
  const Weight w = padded_integral(lambda, m);
  const std::vector<int> degrees = dummy_degrees(w);
  const int k = static_cast<int>(degrees.size()) - 1;
  std::vector<KernelConstraint> ops;
  for (int p = 1; p <= k; ++p) ops.emplace_back(OperatorSpec::laplace(p), shifted(degrees, p, -2));
  for (int p = 1; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q) {
      ops.emplace_back(OperatorSpec::mixed_euler(p, q), shifted(shifted(degrees, p, 1), q, -1));
      ops.emplace_back(OperatorSpec::cross_laplace(p, q), shifted(shifted(degrees, p, -1), q, -1));
    }
  return null_space_of(w, m, degrees, ops, cap);
}

unsigned long weyl_dim(const Weight& w, int m) {
  const int n = rank_for_dimension(m);
  const Weight padded = pad_to_rank(w, static_cast<std::size_t>(n));
  if (!is_dominant(padded)) throw std::invalid_argument("weyl_dim: " + padded.to_string() + " is not dominant");
  std::vector<Rational> v(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = Rational(padded[static_cast<std::size_t>(i)]) + (padded.spin_shift ? Rational(1, 2) : Rational(0));
    rho[static_cast<std::size_t>(i)] = Rational(m - 2 * (i + 1), 2);
  }
  Rational num = 1, den = 1;
  auto root = [&](const std::vector<Rational>& x, int i, int j, int sj) {
    Rational r = x[static_cast<std::size_t>(i)];
    if (j >= 0) r += sj * x[static_cast<std::size_t>(j)];
    return r;
  };
  std::vector<Rational> shifted_v(v);
  for (int i = 0; i < n; ++i) shifted_v[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i) {
    num *= root(shifted_v, i, -1, 0);
    den *= root(rho, i, -1, 0);
    for (int j = i + 1; j < n; ++j)
      for (int sj : {-1, 1}) {
        num *= root(shifted_v, i, j, sj);
        den *= root(rho, i, j, sj);
      }
  }
  const Rational d = num / den;
  if (d.get_den() != 1 || sgn(d) <= 0) throw std::logic_error("weyl_dim: non-integral result " + to_string(d));
  return d.get_num().get_ui();
}

Rational casimir_eigenvalue(const Weight& kappa, int m) {
  const int n = rank_for_dimension(m);
  const Weight padded = pad_to_rank(kappa, static_cast<std::size_t>(n));
  Rational out = 0;
  for (int i = 0; i < n; ++i) {
    const Rational k = Rational(padded[static_cast<std::size_t>(i)]) + (padded.spin_shift ? Rational(1, 2) : Rational(0));
    out += k * (k + Rational(m - 2 * (i + 1)));
  }
  return out;
}

Ambient build_ambient(const Weight& lambda, int m, std::size_t cap) {
  Ambient a;
  a.lambda = padded_integral(lambda, m);
  a.m = m;
  a.space = simplicial_harmonic_basis(a.lambda, m, cap);
  a.coords = std::make_shared<const Coordinatizer>(a.space.basis);
  for (int i = 0; i < m; ++i) a.gamma.push_back(operator_matrix(OperatorSpec::gamma(i), a.space.basis, *a.coords));
  const std::size_t dim = a.dimension();
  a.casimir = Matrix(dim, dim);
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      SpinGenerator g{x + 1, y + 1, operator_matrix(OperatorSpec::angular(x, y), a.space.basis, *a.coords)};
      a.casimir -= linalg::multiply(g.matrix, g.matrix);
      a.generators.push_back(std::move(g));
    }
  return a;
}

std::shared_ptr<const Ambient> cached_ambient(const Weight& lambda, int m, std::size_t cap) {
  static std::mutex mutex;
  static std::map<std::pair<Weight, int>, std::shared_ptr<const Ambient>> cache;
  const Weight key = padded_integral(lambda, m);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({key, m});
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Ambient>(build_ambient(key, m, cap));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(key, m), built).first->second;
}

ProjectorSet casimir_projectors(const Ambient& ambient) {
  ProjectorSet set;
  set.lambda = ambient.lambda;
  set.m = ambient.m;
  for (const auto& [kappa, code] : summand_weights(ambient.lambda))
    set.entries.push_back({kappa, casimir_eigenvalue(kappa, ambient.m), Matrix()});
  for (std::size_t a = 0; a < set.entries.size(); ++a)
    for (std::size_t b = a + 1; b < set.entries.size(); ++b)
      if (set.entries[a].eigenvalue == set.entries[b].eigenvalue)
        throw std::runtime_error("Casimir eigenvalue collision between " + set.entries[a].kappa.to_string() + " and " +
                                 set.entries[b].kappa.to_string());
  const std::size_t dim = ambient.dimension();
  const Matrix id = Matrix::identity(dim);
  for (auto& e : set.entries) {
    Matrix p = id;
    for (const auto& other : set.entries) {
      if (&other == &e) continue;
      const Rational scale = Rational(1) / (e.eigenvalue - other.eigenvalue);
      p = linalg::multiply(p, (ambient.casimir - id * GaussianRational(other.eigenvalue)) * GaussianRational(scale));
    }
    e.projector = std::move(p);
  }
  return set;
}

ProjectorCheck check_projectors(const Ambient& ambient, const ProjectorSet& set) {
  ProjectorCheck c;
  const std::size_t dim = ambient.dimension();
  Matrix sum(dim, dim);
  for (std::size_t a = 0; a < set.entries.size(); ++a) {
    const Matrix& pa = set.entries[a].projector;
    sum += pa;
    if (linalg::multiply(pa, pa) != pa) c.idempotent = false;
    for (std::size_t b = 0; b < set.entries.size(); ++b)
      if (a != b && !linalg::multiply(pa, set.entries[b].projector).is_zero()) c.orthogonal = false;
  }
  if (sum != Matrix::identity(dim)) c.complete = false;
  for (const auto& g : ambient.generators)
    if (!linalg::commutator(ambient.casimir, g.matrix).is_zero()) c.casimir_invariant = false;
  return c;
}

}  // namespace hsfact
