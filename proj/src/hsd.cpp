#include "hsfact/hsd.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hsfact/opalgebra.hpp"

namespace hsfact {

using linalg::Matrix;
using linalg::Scalar;

namespace {

Weight padded_label(const Weight& lambda, int m) {
  return pad_to_rank(lambda.integral_part(), static_cast<std::size_t>(rank_for_dimension(m)));
}

int entry_sum(const Weight& w) { return std::accumulate(w.entries.begin(), w.entries.end(), 0); }

Matrix column(const Matrix& a, std::size_t c) { return a.column_block(c, 1); }

Matrix identity_like(std::size_t n) { return Matrix::identity(n); }

std::vector<Scalar> column_vector(const Matrix& a, std::size_t c) {
  std::vector<Scalar> v(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, c);
  return v;
}

// 1 + u_p d_{u_p} / den as an operator on the dummy variables.
OperatorSpec euler_factor(int block, const Rational& factor) {
  return OperatorSpec::scalar_mix(
      {{Rational(1), OperatorSpec::identity()},
       {factor, OperatorSpec::compose({OperatorSpec::vector_mult(block), OperatorSpec::dirac(block)})}});
}

// The u-part of the explicit formula; the full operator is this after d_x.
OperatorSpec value_projection(const std::vector<Rational>& factors) {
  if (factors.empty()) return OperatorSpec::identity();
  std::vector<OperatorSpec> chain;
  for (std::size_t i = 0; i < factors.size(); ++i) chain.push_back(euler_factor(static_cast<int>(i) + 1, factors[i]));
  return chain.size() == 1 ? chain.front() : OperatorSpec::compose(std::move(chain));
}

Matrix inverse(const Matrix& a) {
  auto inv = linalg::solve(a, Matrix::identity(a.rows()));
  if (!inv || linalg::rank(a) != a.rows()) throw std::logic_error("matrix is not invertible");
  return *inv;
}

DiffOp laplace_power(int m, std::size_t dim, int power) {
  DiffOp out = DiffOp::identity(m, dim);
  for (int i = 0; i < power; ++i) out = DiffOp::laplace(m, dim) * out;
  return out;
}

DiffOp zero_op(int m, std::size_t rows, std::size_t cols, int order) { return DiffOp(m, rows, cols, order); }

// Single scalar c with a == c * b, if any. Both zero gives c = nullopt with true.
bool proportional(const Matrix& a, const Matrix& b, std::optional<Scalar>& c) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  c.reset();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(r, k);
      const Scalar& y = b(r, k);
      if (y.is_zero()) {
        if (!x.is_zero()) return false;
        continue;
      }
      if (!c) c = x / y;
      if (x != *c * y) return false;
    }
  return true;
}

bool proportional(const DiffOp& a, const DiffOp& b, std::optional<Scalar>& c) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.order() != b.order()) return false;
  c.reset();
  for (const auto& [alpha, cb] : b.terms()) {
    auto it = a.terms().find(alpha);
    const Matrix ca = it == a.terms().end() ? Matrix(cb.rows(), cb.cols()) : it->second;
    std::optional<Scalar> local;
    if (!proportional(ca, cb, local)) return false;
    if (local && c && *local != *c) return false;
    if (local) c = local;
  }
  for (const auto& [alpha, ca] : a.terms())
    if (!b.terms().count(alpha)) return false;
  return true;
}

}  // namespace

std::string HsdOperator::name() const {
  if (is_hsd()) return "R[" + target.to_string() + "]";
  return "T[" + target.to_string() + "<-" + source.to_string() + "]";
}

std::vector<Rational> explicit_hsd_factors(const Weight& lambda, int m) {
  const auto& e = lambda.entries;
  for (std::size_t i = 2; i < e.size(); ++i)
    if (e[i] != 0) throw std::invalid_argument("explicit formulas exist for shapes (k) and (k,l) only");
  const int k = e.empty() ? 0 : e[0];
  const int l = e.size() > 1 ? e[1] : 0;
  if (l < 0 || k < l) throw std::invalid_argument("explicit_hsd: need k >= l >= 0");
  std::vector<Rational> out;
  if (k == 0) return out;
  if (2 * k + m - 2 == 0) throw std::invalid_argument("explicit_hsd: vanishing denominator 2k+m-2");
  out.push_back(fraction(1, 2 * k + m - 2));
  if (l > 0) {
    if (2 * l + m - 4 == 0) throw std::invalid_argument("explicit_hsd: vanishing denominator 2l+m-4");
    out.push_back(fraction(1, 2 * l + m - 4));
  }
  return out;
}

HsdOperator explicit_hsd(const Weight& lambda, int m, std::size_t cap) {
  const std::vector<Rational> factors = explicit_hsd_factors(lambda, m);
  const Weight label = padded_label(lambda, m);
  if (factors.size() == 2 && label.rank() < 2) throw std::invalid_argument("explicit_hsd: (k,l) needs m >= 5");

  RealizedSpace space = simplicial_monogenic_basis(label, m, cap);
  auto basis = std::make_shared<const std::vector<SpinorPoly>>(space.basis);
  const Coordinatizer coords(space.basis);
  const OperatorSpec projection = value_projection(factors);

  std::vector<Matrix> coefficients;
  for (int i = 0; i < m; ++i) {
    const OperatorSpec value_map = OperatorSpec::compose({projection, OperatorSpec::gamma(i)});
    try {
      coefficients.push_back(operator_matrix(value_map, space.basis, coords));
    } catch (const std::domain_error&) {
      throw std::logic_error("explicit_hsd: formula for " + label.primed().to_string() + " leaves the value space");
    }
  }

  HsdOperator op;
  op.source = op.target = label.primed();
  op.kind = HsdKind::explicit_formula;
  op.spec = factors.empty() ? OperatorSpec::dirac(0) : OperatorSpec::compose({projection, OperatorSpec::dirac(0)});
  op.op = DiffOp::first_order(m, coefficients);
  op.source_basis = op.target_basis = basis;
  op.ambient = label;
  return op;
}

const SummandRealization& GenericFamily::summand(const Weight& kappa) const {
  for (const auto& s : summands)
    if (s.kappa == kappa) return s;
  throw std::out_of_range("no summand " + kappa.to_string() + " in V_" + lambda.to_string() + " (x) S");
}

bool GenericFamily::has_block(const Weight& target, const Weight& source) const {
  return std::any_of(operators.begin(), operators.end(),
                     [&](const HsdOperator& o) { return o.target == target && o.source == source; });
}

const HsdOperator& GenericFamily::block(const Weight& target, const Weight& source) const {
  for (const auto& o : operators)
    if (o.target == target && o.source == source) return o;
  throw std::out_of_range("no block " + target.to_string() + " <- " + source.to_string());
}

GenericFamily generic_twistor_hsd(const Weight& lambda, int m, std::size_t cap) {
  GenericFamily fam;
  fam.ambient = cached_ambient(padded_label(lambda, m), m, cap);
  const Ambient& amb = *fam.ambient;
  fam.lambda = amb.lambda;
  fam.m = m;
  fam.projectors = casimir_projectors(amb);

  for (const auto& entry : fam.projectors.entries) {
    SummandRealization s;
    s.kappa = entry.kappa;
    const linalg::RowEchelon re = linalg::row_reduce(entry.projector);
    std::vector<Matrix> cols;
    for (auto c : re.pivot_columns) cols.push_back(column(entry.projector, c));
    s.basis = linalg::hstack(cols);
    s.left = Matrix(re.rank(), amb.dimension());
    for (std::size_t r = 0; r < re.rank(); ++r)
      for (std::size_t c = 0; c < amb.dimension(); ++c) s.left(r, c) = re.reduced(r, c);
    if (linalg::multiply(s.left, s.basis) != Matrix::identity(re.rank()))
      throw std::logic_error("summand realization: L B != 1 for " + s.kappa.to_string());
    for (const auto& g : amb.generators)
      s.generators.push_back({g.a, g.b, linalg::multiply(linalg::multiply(s.left, g.matrix), s.basis)});
    std::vector<SpinorPoly> polys;
    for (std::size_t c = 0; c < s.basis.cols(); ++c) polys.push_back(amb.coords->combine(column_vector(s.basis, c)));
    s.polys = std::make_shared<const std::vector<SpinorPoly>>(std::move(polys));
    fam.summands.push_back(std::move(s));
  }

  for (const auto& target : fam.summands)
    for (const auto& source : fam.summands) {
      std::vector<Matrix> coefficients;
      for (const auto& g : amb.gamma)
        coefficients.push_back(linalg::multiply(linalg::multiply(target.left, g), source.basis));
      const int distance = manhattan_distance(target.kappa, source.kappa);
      if (distance >= 2) {
        for (const auto& c : coefficients)
          if (!c.is_zero()) fam.far_blocks_vanish = false;
        continue;
      }
      HsdOperator op;
      op.source = source.kappa;
      op.target = target.kappa;
      op.kind = HsdKind::generic;
      op.op = DiffOp::first_order(m, coefficients);
      op.source_basis = source.polys;
      op.target_basis = target.polys;
      op.ambient = fam.lambda;
      fam.operators.push_back(std::move(op));
    }

  const DiffOp dirac = DiffOp::first_order(m, amb.gamma);
  fam.dirac_squares_to_laplace = dirac * dirac == DiffOp::laplace(m, amb.dimension()) * Scalar(-1);
  return fam;
}

std::shared_ptr<const GenericFamily> cached_family(const Weight& lambda, int m, std::size_t cap) {
  static std::mutex mutex;
  static std::map<std::pair<Weight, int>, std::shared_ptr<const GenericFamily>> cache;
  const Weight key = padded_label(lambda, m);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({key, m});
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const GenericFamily>(generic_twistor_hsd(key, m, cap));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(key, m), built).first->second;
}

RealizationComparison compare_realizations(const Weight& lambda, int m, const std::vector<int>& degrees,
                                           std::size_t cap) {
  RealizationComparison out;
  out.lambda = padded_label(lambda, m);
  out.m = m;
  out.degrees = degrees;
  const HsdOperator expl = explicit_hsd(lambda, m, cap);
  const auto fam = cached_family(lambda, m, cap);
  const Weight kappa = out.lambda.primed();
  const SummandRealization& top = fam->summand(kappa);

  // The monogenic basis in ambient coordinates, then in summand coordinates.
  std::vector<Matrix> cols;
  for (const auto& v : *expl.source_basis) {
    const auto c = fam->ambient->coords->coordinates(v);
    Matrix col(c.size(), 1);
    for (std::size_t r = 0; r < c.size(); ++r) col(r, 0) = c[r];
    cols.push_back(std::move(col));
  }
  const Matrix in_ambient = linalg::hstack(cols);
  const Matrix change = linalg::multiply(top.left, in_ambient);
  if (linalg::multiply(top.basis, change) != in_ambient || change.rows() != change.cols()) return out;
  const DiffOp generic = fam->block(kappa, kappa).op.left_multiply(inverse(change)).right_multiply(change);

  std::optional<Scalar> ratio;
  if (!proportional(expl.op, generic, ratio) || !ratio) return out;
  out.ratio = ratio;
  out.proportional = true;
  out.degree_independent = true;
  for (int h : degrees) {
    std::optional<Scalar> local;
    if (!proportional(materialize(expl.op, h), materialize(generic, h), local)) {
      out.proportional = false;
      out.degree_independent = false;
    } else if (local && *local != *ratio) {
      out.degree_independent = false;
    }
  }
  return out;
}

bool IdentityReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport verify_identities(const Weight& lambda, int m, int max_degree, std::size_t cap) {
  IdentityReport rep;
  const auto fam = cached_family(lambda, m, cap);
  rep.lambda = fam->lambda;
  rep.m = m;
  rep.max_degree = max_degree;
  for (const auto& s : fam->summands) rep.summands.push_back(s.kappa);

  auto check_equal = [&](const std::string& id, const std::string& what, const DiffOp& lhs, const DiffOp& rhs) {
    rep.checks.push_back({id, what, -1, lhs == rhs});
    for (int h = 0; h <= max_degree; ++h)
      rep.checks.push_back({id, what, h, materialize(lhs, h) == materialize(rhs, h)});
  };

  const auto& amb = *fam->ambient;
  const DiffOp dirac = DiffOp::first_order(m, amb.gamma);
  check_equal("dirac-square", "(id (x) d_x)^2 = -Delta on V_" + fam->lambda.to_string() + " (x) S", dirac * dirac,
              DiffOp::laplace(m, amb.dimension()) * Scalar(-1));
  rep.checks.push_back({"far-blocks", "blocks at distance >= 2 vanish", -1, fam->far_blocks_vanish});

  for (const auto& k : fam->summands) {
    const std::size_t dk = k.dimension();
    DiffOp lhs = fam->block(k.kappa, k.kappa).op * fam->block(k.kappa, k.kappa).op;
    for (const auto& w : fam->summands)
      if (manhattan_distance(k.kappa, w.kappa) == 1)
        lhs += fam->block(k.kappa, w.kappa).op * fam->block(w.kappa, k.kappa).op;
    check_equal("laplace-split", "R^2 + sum T T = -Delta at " + k.kappa.to_string(), lhs, DiffOp::laplace(m, dk) * Scalar(-1));
  }

  for (const auto& k : fam->summands)
    for (const auto& i : fam->summands) {
      if (manhattan_distance(k.kappa, i.kappa) != 1) continue;
      const DiffOp& t = fam->block(k.kappa, i.kappa).op;
      const DiffOp& rk = fam->block(k.kappa, k.kappa).op;
      const DiffOp& ri = fam->block(i.kappa, i.kappa).op;
      const std::string pair = k.kappa.to_string() + "<-" + i.kappa.to_string();
      check_equal("anticommute", "T R + R T = 0 for " + pair, t * ri + rk * t, zero_op(m, k.dimension(), i.dimension(), 2));
      // Consequence of anticommuting: T maps ker R_iota into ker R_kappa.
      for (int h = 1; h <= max_degree; ++h) {
        const Matrix null = linalg::nullspace(materialize(ri, h));
        const Matrix image = linalg::multiply(materialize(rk, h - 1), linalg::multiply(materialize(t, h), null));
        rep.checks.push_back({"kernel-transfer", "T ker R is in ker R for " + pair, h, image.is_zero()});
      }
    }

  for (const auto& k : fam->summands)
    for (const auto& i : fam->summands) {
      if (manhattan_distance(k.kappa, i.kappa) != 2) continue;
      DiffOp lhs = zero_op(m, k.dimension(), i.dimension(), 2);
      std::string via;
      for (const auto& w : fam->summands)
        if (manhattan_distance(k.kappa, w.kappa) == 1 && manhattan_distance(w.kappa, i.kappa) == 1) {
          lhs += fam->block(k.kappa, w.kappa).op * fam->block(w.kappa, i.kappa).op;
          via += (via.empty() ? "" : ",") + w.kappa.to_string();
        }
      if (via.empty()) continue;
      check_equal("square-cancel", "sum T T = 0 for " + k.kappa.to_string() + "<-" + i.kappa.to_string() + " via " + via, lhs,
                  zero_op(m, k.dimension(), i.dimension(), 2));
    }
  return rep;
}

SpinorPoly times_x_monomial(const MultiIndex& alpha, const SpinorPoly& f) {
  SpinorPoly out(f.m(), f.k());
  for (const auto& [mono, s] : f.terms()) {
    Monomial shifted = mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) shifted[i] = static_cast<std::uint8_t>(shifted[i] + alpha[i]);
    out.add(shifted, s);
  }
  return out;
}

SpinorPoly with_blocks(const SpinorPoly& f, int k) {
  if (k < f.k()) throw std::invalid_argument("with_blocks: cannot drop variable blocks");
  SpinorPoly out(f.m(), k);
  for (const auto& [mono, s] : f.terms()) {
    Monomial longer = mono;
    longer.resize(static_cast<std::size_t>((k + 1) * f.m()), 0);
    out.add(longer, s);
  }
  return out;
}

std::vector<SpinorPoly> kernel_basis(const HsdOperator& op, int h, std::size_t cap) {
  const auto monos = monomials_of_degree(op.op.m(), h);
  const std::size_t dim = op.source_basis->size();
  if (monos.size() * dim > cap)
    throw ResourceLimitError("kernel_basis: " + std::to_string(monos.size() * dim) + " unknowns exceed cap " +
                             std::to_string(cap));
  const Matrix null = linalg::nullspace(materialize(op.op, h));
  std::vector<SpinorPoly> out;
  for (std::size_t c = 0; c < null.cols(); ++c) {
    SpinorPoly f;
    for (std::size_t a = 0; a < monos.size(); ++a)
      for (std::size_t s = 0; s < dim; ++s)
        if (!null(a * dim + s, c).is_zero()) f += times_x_monomial(monos[a], (*op.source_basis)[s]) * null(a * dim + s, c);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<SpinorPoly> double_monogenic_basis(int m, int h, int k, std::size_t cap) {
  if (k == 0) return common_kernel(m, {h}, {{OperatorSpec::dirac(0), {h - 1}}}, cap);
  return common_kernel(m, {h, k}, {{OperatorSpec::dirac(0), {h - 1, k}}, {OperatorSpec::dirac(1), {h, k - 1}}}, cap);
}

SpinorPoly twistor_inversion(const SpinorPoly& g, int h, int k, int m) {
  if (h < 1 || k < 1) throw std::invalid_argument("twistor_inversion: need h >= 1 and k >= 1");
  if (g.m() != m || g.k() != 1) throw std::invalid_argument("twistor_inversion: g must have one dummy block");
  if (g.is_zero()) return SpinorPoly(m, 1);
  if (g.block_degree(0) != h - 1 || g.block_degree(1) != k - 1)
    throw std::invalid_argument("twistor_inversion: g has the wrong bidegree");
  const OperatorSpec lower = k == 1 ? OperatorSpec::dirac(0)
                                    : OperatorSpec::compose({euler_factor(1, fraction(1, 2 * (k - 1) + m - 2)),
                                                             OperatorSpec::dirac(0)});
  if (!apply(OperatorSpec::dirac(1), g).is_zero() || !apply(lower, g).is_zero())
    throw std::invalid_argument("twistor_inversion: g is not in ker R_" + std::to_string(k - 1));

  const std::vector<SpinorPoly> unknowns = homogeneous_basis(m, 1, {h, k});
  const Coordinatizer image_x(homogeneous_basis(m, 1, {h - 1, k}));
  const Coordinatizer image_u(homogeneous_basis(m, 1, {h, k - 1}));
  const Matrix ax = operator_matrix(OperatorSpec::dirac(0), unknowns, image_x);
  const Matrix au = operator_matrix(OperatorSpec::dirac(1), unknowns, image_u);

  // Fischer product <p, f> = sum alpha! conj(p_alpha) f_alpha on monomials.
  const std::vector<SpinorPoly> mono = double_monogenic_basis(m, h, k);
  Matrix orth(mono.size(), unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const auto& [exps, unit] = *unknowns[j].terms().begin();
    const auto s = static_cast<std::size_t>(std::find_if(unit.begin(), unit.end(), [](const auto& z) { return !z.is_zero(); }) - unit.begin());
    Rational weight = 1;
    for (auto e : exps)
      for (int t = 2; t <= e; ++t) weight *= t;
    for (std::size_t r = 0; r < mono.size(); ++r) {
      auto it = mono[r].terms().find(exps);
      if (it != mono[r].terms().end()) orth(r, j) = it->second[s].conj() * Scalar(weight);
    }
  }

  const auto rhs_coords = image_x.coordinates(apply(OperatorSpec::vector_mult(1), g));
  Matrix rhs(ax.rows() + au.rows() + orth.rows(), 1);
  for (std::size_t r = 0; r < rhs_coords.size(); ++r) rhs(r, 0) = rhs_coords[r];
  const Matrix system = linalg::vstack(std::vector<Matrix>{ax, au, orth});
  const auto sol = linalg::solve(system, rhs);
  if (!sol) throw std::runtime_error("twistor_inversion: inconsistent system");
  if (linalg::rank(system) != unknowns.size()) throw std::runtime_error("twistor_inversion: solution is not unique");
  SpinorPoly f(m, 1);
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    if (!(*sol)(j, 0).is_zero()) f += unknowns[j] * (*sol)(j, 0);
  return f;
}

std::optional<int> polyharmonic_order(const SpinorPoly& f) {
  if (f.is_zero()) return 1;
  const int degree = f.block_degree(0);
  int bound = 0;
  if (degree >= 0) {
    bound = (degree + 1) / 2 + 1;
  } else {
    for (const auto& [mono, s] : f.terms())
      bound = std::max(bound, static_cast<int>(std::accumulate(mono.begin(), mono.begin() + f.m(), 0)));
    bound = (bound + 1) / 2 + 1;
  }
  SpinorPoly cur = f;
  for (int p = 1; p <= bound; ++p) {
    cur = laplace(0, cur);
    if (cur.is_zero()) return p;
  }
  return std::nullopt;
}

InductionReport verify_induction_dims(int k, int h, int m, std::size_t cap) {
  InductionReport rep;
  rep.k = k;
  rep.h = h;
  rep.m = m;
  const HsdOperator rk = explicit_hsd(Weight({k}), m, cap);
  const std::vector<SpinorPoly> kernel = kernel_basis(rk, h, cap);
  rep.kernel_dim = kernel.size();
  const std::vector<SpinorPoly> mono = double_monogenic_basis(m, h, k, cap);
  rep.monogenic_dim = mono.size();
  if (k == 0 || h == 0) return rep;

  const HsdOperator lower = explicit_hsd(Weight({k - 1}), m, cap);
  const std::vector<SpinorPoly> lower_kernel = kernel_basis(lower, h - 1, cap);
  rep.lower_kernel_dim = lower_kernel.size();

  std::vector<SpinorPoly> spanning = mono;
  for (const auto& g : lower_kernel) {
    try {
      const SpinorPoly f = twistor_inversion(with_blocks(g, 1), h, k, m);
      ++rep.inversions;
      if (!apply(*rk.spec, f).is_zero()) rep.inversions_ok = false;
      spanning.push_back(f);
    } catch (const std::exception& e) {
      rep.inversions_ok = false;
      rep.errors.emplace_back(e.what());
    }
  }
  const Coordinatizer monomials(homogeneous_basis(m, 1, {h, k}));
  Matrix coords(monomials.dimension(), spanning.size());
  for (std::size_t c = 0; c < spanning.size(); ++c) {
    const auto v = monomials.coordinates(spanning[c]);
    for (std::size_t r = 0; r < v.size(); ++r) coords(r, c) = v[r];
  }
  rep.spans_kernel = linalg::rank(coords) == rep.kernel_dim;
  return rep;
}

CorollaryReport verify_corollary(const Weight& lambda, int m, int h, std::size_t cap) {
  CorollaryReport rep;
  rep.lambda = padded_label(lambda, m);
  rep.m = m;
  rep.h = h;
  rep.bound = (rep.lambda.rank() == 0 ? 0 : rep.lambda[0]) + 1;
  const HsdOperator op = explicit_hsd(lambda, m, cap);
  const std::vector<SpinorPoly> kernel = kernel_basis(op, h, cap);
  rep.kernel_dim = kernel.size();
  for (const auto& f : kernel) {
    const auto order = polyharmonic_order(f);
    if (!order || *order > rep.bound) rep.bound_holds = false;
    if (order) rep.max_order = std::max(rep.max_order, *order);
  }
  rep.sharp = rep.max_order == rep.bound;
  return rep;
}

Matrix intertwiner(const SummandRealization& from, const SummandRealization& to) {
  const std::size_t da = from.dimension();
  const std::size_t db = to.dimension();
  if (from.generators.size() != to.generators.size()) throw std::invalid_argument("intertwiner: different algebras");
  // Adjacent generators L_{a,a+1} already generate so(m).
  std::vector<std::size_t> chosen;
  for (std::size_t g = 0; g < from.generators.size(); ++g)
    if (from.generators[g].b == from.generators[g].a + 1) chosen.push_back(g);
  Matrix eq(chosen.size() * db * da, db * da);
  std::size_t row = 0;
  for (auto g : chosen) {
    const Matrix& ga = from.generators[g].matrix;
    const Matrix& gb = to.generators[g].matrix;
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < da; ++c, ++row) {
        for (std::size_t t = 0; t < da; ++t)
          if (!ga(t, c).is_zero()) eq(row, r * da + t) += ga(t, c);
        for (std::size_t t = 0; t < db; ++t)
          if (!gb(r, t).is_zero()) eq(row, t * da + c) -= gb(r, t);
      }
  }
  const Matrix null = linalg::nullspace(eq);
  if (null.cols() != 1)
    throw std::logic_error("intertwiner for " + from.kappa.to_string() + ": commutant of dimension " +
                           std::to_string(null.cols()));
  Matrix j(db, da);
  Scalar lead;
  for (std::size_t i = 0; i < db * da; ++i)
    if (lead.is_zero() && !null(i, 0).is_zero()) lead = null(i, 0);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t c = 0; c < da; ++c) j(r, c) = null(r * da + c, 0) / lead;
  return j;
}

CanonicalOperators::CanonicalOperators(int m, std::size_t cap) : m_(m), cap_(cap) {}

std::shared_ptr<const GenericFamily> CanonicalOperators::family(const Weight& kappa) {
  return cached_family(kappa.integral_part(), m_, cap_);
}

std::size_t CanonicalOperators::dimension(const Weight& kappa) { return family(kappa)->summand(kappa).dimension(); }

DiffOp CanonicalOperators::hsd(const Weight& kappa) { return family(kappa)->block(kappa, kappa).op; }

DiffOp CanonicalOperators::laplace(const Weight& kappa, int power) { return laplace_power(m_, dimension(kappa), power); }

const Matrix& CanonicalOperators::transfer(const Weight& kappa, const Weight& from_ambient, const Weight& to_ambient) {
  const auto key = std::make_pair(kappa, std::make_pair(from_ambient, to_ambient));
  auto it = transfers_.find(key);
  if (it != transfers_.end()) return it->second;
  Matrix j = from_ambient == to_ambient
                 ? identity_like(dimension(kappa))
                 : intertwiner(cached_family(from_ambient, m_, cap_)->summand(kappa),
                               cached_family(to_ambient, m_, cap_)->summand(kappa));
  return transfers_.emplace(key, std::move(j)).first->second;
}

DiffOp CanonicalOperators::twistor(const Weight& target, const Weight& source) {
  if (manhattan_distance(target, source) != 1) throw std::invalid_argument("twistor: endpoints not adjacent");
  const Weight home = (entry_sum(target) > entry_sum(source) ? target : source).integral_part();
  const DiffOp& block = cached_family(home, m_, cap_)->block(target, source).op;
  const Matrix& out = transfer(target, home, target.integral_part());
  const Matrix& in = transfer(source, source.integral_part(), home);
  return block.left_multiply(out).right_multiply(in);
}

DiffOp CanonicalOperators::path(const Path& path) {
  const Weight start = path.start().primed();
  DiffOp out = DiffOp::identity(m_, dimension(start));
  for (std::size_t p = 0; p < path.length(); ++p)
    out = twistor(path.nodes[p + 1].primed(), path.nodes[p].primed()) * out;
  return out;
}

bool FactorizationReport::pass() const {
  return residual_empty && solved && symbol_equal &&
         std::all_of(checks.begin(), checks.end(), [](const DegreeCheck& c) { return c.pass; });
}

FactorizationReport verify_factorization_numeric(const Weight& mu, int power, int m, const std::vector<int>& degrees,
                                                 std::size_t cap) {
  FactorizationReport rep;
  rep.mu = padded_label(mu, m);
  rep.power = power;
  rep.m = m;
  if (power <= (rep.mu.rank() == 0 ? 0 : rep.mu[0]))
    throw std::invalid_argument("verify_factorization_numeric: need power > mu_1");
  if (degrees.empty()) throw std::invalid_argument("verify_factorization_numeric: no degrees given");
  for (int d : degrees)
    if (d < 2 * power)
      throw std::invalid_argument("verify_factorization_numeric: degree " + std::to_string(d) + " is below 2p = " +
                                  std::to_string(2 * power));

  const FactorizationCertificate cert = expand_laplace_power(rep.mu, power);
  rep.residual_empty = cert.residual.is_zero();
  CanonicalOperators ops(m, cap);
  const Weight top = rep.mu.primed();
  const DiffOp r = ops.hsd(top);
  std::vector<DiffOp> sandwiches;
  for (const auto& t : cert.terms) {
    rep.terms.push_back({t.lambda.primed(), t.laplace_power, t.coefficient, std::nullopt, std::nullopt});
    const Path up = canonical_path(t.lambda, rep.mu);
    const DiffOp middle = ops.path(up) * ops.laplace(t.lambda.primed(), t.laplace_power) * ops.path(reversed(up));
    sandwiches.push_back(r * middle * r);
  }
  const DiffOp target = ops.laplace(top, power);

  rep.solve_degree = degrees.front();
  std::vector<Matrix> columns;
  for (const auto& x : sandwiches) columns.push_back(materialize(x, rep.solve_degree));
  const Matrix goal = materialize(target, rep.solve_degree);
  std::vector<std::size_t> rows;  // flattened entries where something is nonzero
  for (std::size_t i = 0; i < goal.rows() * goal.cols(); ++i) {
    const std::size_t a = i / goal.cols(), b = i % goal.cols();
    bool any = !goal(a, b).is_zero();
    for (const auto& c : columns) any = any || !c(a, b).is_zero();
    if (any) rows.push_back(i);
  }
  Matrix system(rows.size(), columns.size());
  Matrix rhs(rows.size(), 1);
  for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
    const std::size_t a = rows[r2] / goal.cols(), b = rows[r2] % goal.cols();
    rhs(r2, 0) = goal(a, b);
    for (std::size_t c = 0; c < columns.size(); ++c) system(r2, c) = columns[c](a, b);
  }
  const auto sol = linalg::solve(system, rhs);
  if (!sol) {
    rep.failure = "no scalars reproduce Delta^p on degree " + std::to_string(rep.solve_degree);
    return rep;
  }
  if (linalg::rank(system) != columns.size()) {
    rep.failure = "normalization scalars are not determined on degree " + std::to_string(rep.solve_degree);
    return rep;
  }
  rep.solved = true;
  DiffOp assembled = zero_op(m, target.rows(), target.cols(), 2 * power);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Scalar value = (*sol)(c, 0);
    rep.terms[c].numeric = value;
    rep.terms[c].ratio = value / Scalar(rep.terms[c].symbolic);
    assembled += sandwiches[c] * value;
  }
  rep.symbol_equal = assembled == target;
  for (int d : degrees) rep.checks.push_back({d, materialize(assembled, d) == materialize(target, d)});
  if (!rep.pass()) rep.failure = rep.residual_empty ? "R A R differs from Delta^p" : "certificate has a residual";
  return rep;
}

}  // namespace hsfact
