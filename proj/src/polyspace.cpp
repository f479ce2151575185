#include "hsfact/polyspace.hpp"

#include "hsfact/errors.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hsfact {

using linalg::Matrix;

namespace {

// Pauli tensor products are monomial matrices: (gamma s)[r] = value[r] * s[column[r]].
struct MonomialAction {
  std::vector<std::size_t> column;
  std::vector<GaussianRational> value;
};

struct SpinorActions {
  std::vector<MonomialAction> gamma;
};

const SpinorActions& actions_for(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<SpinorActions>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    const GammaRep& rep = cached_gamma_rep(m);
    auto acts = std::make_unique<SpinorActions>();
    for (const auto& g : rep.generators) {
      MonomialAction a;
      for (std::size_t r = 0; r < g.rows(); ++r) {
        std::size_t found = g.cols();
        for (std::size_t c = 0; c < g.cols(); ++c)
          if (!g(r, c).is_zero()) {
            if (found != g.cols()) throw std::logic_error("gamma generator is not a monomial matrix");
            found = c;
          }
        a.column.push_back(found);
        a.value.push_back(g(r, found));
      }
      acts->gamma.push_back(std::move(a));
    }
    slot = std::move(acts);
  }
  return *slot;
}

Spinor act(const MonomialAction& a, const Spinor& s) {
  Spinor out(s.size());
  for (std::size_t r = 0; r < s.size(); ++r)
    if (!s[a.column[r]].is_zero()) out[r] = a.value[r] * s[a.column[r]];
  return out;
}

bool spinor_is_zero(const Spinor& s) {
  return std::all_of(s.begin(), s.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

Spinor scaled(const Spinor& s, const GaussianRational& c) {
  Spinor out(s);
  for (auto& z : out)
    if (!z.is_zero()) z *= c;
  return out;
}

void require_var(const SpinorPoly& f, int var) {
  if (var < 0 || var > f.k()) throw std::out_of_range("variable block " + std::to_string(var) + " out of range");
}

// Visits every (monomial, spinor) term.
template <typename F>
void for_each_coordinate_term(const SpinorPoly& f, F&& fn) {
  for (const auto& [mono, s] : f.terms()) fn(mono, s);
}

SpinorPoly dirac(const SpinorPoly& f, int var) {
  require_var(f, var);
  const auto& acts = actions_for(f.m());
  SpinorPoly out(f.m(), f.k());
  for_each_coordinate_term(f, [&](const Monomial& mono, const Spinor& s) {
    for (int i = 0; i < f.m(); ++i) {
      const std::size_t c = coordinate(f.m(), var, i);
      if (mono[c] == 0) continue;
      Monomial d = mono;
      --d[c];
      out.add(d, scaled(act(acts.gamma[static_cast<std::size_t>(i)], s), GaussianRational(mono[c])));
    }
  });
  return out;
}

SpinorPoly vector_mult(const SpinorPoly& f, int var) {
  require_var(f, var);
  const auto& acts = actions_for(f.m());
  SpinorPoly out(f.m(), f.k());
  for_each_coordinate_term(f, [&](const Monomial& mono, const Spinor& s) {
    for (int i = 0; i < f.m(); ++i) {
      Monomial d = mono;
      ++d[coordinate(f.m(), var, i)];
      out.add(d, act(acts.gamma[static_cast<std::size_t>(i)], s));
    }
  });
  return out;
}

// Adds sign * v_to d/dv_from applied to one term.
void add_shift(SpinorPoly& out, const Monomial& mono, const Spinor& s, std::size_t to, std::size_t from,
               const GaussianRational& sign) {
  if (mono[from] == 0) return;
  Monomial d = mono;
  const int e = d[from];
  --d[from];
  ++d[to];
  out.add(d, scaled(s, sign * GaussianRational(e)));
}

SpinorPoly mixed_euler(const SpinorPoly& f, int p, int q) {
  require_var(f, p);
  require_var(f, q);
  SpinorPoly out(f.m(), f.k());
  for_each_coordinate_term(f, [&](const Monomial& mono, const Spinor& s) {
    for (int i = 0; i < f.m(); ++i) add_shift(out, mono, s, coordinate(f.m(), p, i), coordinate(f.m(), q, i), 1);
  });
  return out;
}

SpinorPoly euler(const SpinorPoly& f, int var) {
  require_var(f, var);
  SpinorPoly out(f.m(), f.k());
  for_each_coordinate_term(f, [&](const Monomial& mono, const Spinor& s) {
    int deg = 0;
    for (int i = 0; i < f.m(); ++i) deg += mono[coordinate(f.m(), var, i)];
    if (deg != 0) out.add(mono, scaled(s, GaussianRational(deg)));
  });
  return out;
}

SpinorPoly second_order(const SpinorPoly& f, int p, int q) {
  require_var(f, p);
  require_var(f, q);
  SpinorPoly out(f.m(), f.k());
  for_each_coordinate_term(f, [&](const Monomial& mono, const Spinor& s) {
    for (int i = 0; i < f.m(); ++i) {
      const std::size_t a = coordinate(f.m(), p, i), b = coordinate(f.m(), q, i);
      Monomial d = mono;
      if (d[a] == 0) continue;
      long factor = d[a]--;
      if (d[b] == 0) continue;
      factor *= d[b]--;
      out.add(d, scaled(s, GaussianRational(factor)));
    }
  });
  return out;
}

SpinorPoly gamma_mult(const SpinorPoly& f, int i) {
  if (i < 0 || i >= f.m()) throw std::out_of_range("gamma index out of range");
  const auto& acts = actions_for(f.m());
  SpinorPoly out(f.m(), f.k());
  for (const auto& [mono, s] : f.terms()) out.add(mono, act(acts.gamma[static_cast<std::size_t>(i)], s));
  return out;
}

SpinorPoly angular(const SpinorPoly& f, int a, int b) {
  if (a < 0 || b < 0 || a >= f.m() || b >= f.m() || a == b) throw std::out_of_range("angular indices out of range");
  SpinorPoly out(f.m(), f.k());
  for_each_coordinate_term(f, [&](const Monomial& mono, const Spinor& s) {
    for (int var = 0; var <= f.k(); ++var) {
      add_shift(out, mono, s, coordinate(f.m(), var, a), coordinate(f.m(), var, b), 1);
      add_shift(out, mono, s, coordinate(f.m(), var, b), coordinate(f.m(), var, a), -1);
    }
  });
  out -= gamma_mult(gamma_mult(f, b), a) * GaussianRational(Rational(1, 2));
  return out;
}

SpinorPoly apply_impl(const OperatorSpec& spec, const SpinorPoly& f) {
  using K = OperatorSpec::Kind;
  switch (spec.kind) {
    case K::identity: return f;
    case K::dirac: return dirac(f, spec.var);
    case K::vector_mult: return vector_mult(f, spec.var);
    case K::mixed_euler: return mixed_euler(f, spec.p, spec.q);
    case K::euler: return euler(f, spec.var);
    case K::laplace: return second_order(f, spec.var, spec.var);
    case K::cross_laplace: return second_order(f, spec.p, spec.q);
    case K::gamma: return gamma_mult(f, spec.index);
    case K::angular: return angular(f, spec.index, spec.q);
    case K::compose: {
      SpinorPoly g = f;
      for (auto it = spec.children.rbegin(); it != spec.children.rend(); ++it) g = apply_impl(*it, g);
      return g;
    }
    case K::scalar_mix: {
      SpinorPoly out(f.m(), f.k());
      for (std::size_t j = 0; j < spec.children.size(); ++j)
        out += apply_impl(spec.children[j], f) * GaussianRational(spec.coefficients[j]);
      return out;
    }
  }
  throw std::logic_error("unknown operator kind");
}

}  // namespace

SpinorPoly::SpinorPoly(int m, int k) : m_(m), k_(k), spinor_dim_(cached_gamma_rep(m).spinor_dim) {
  if (k < 0) throw std::invalid_argument("SpinorPoly: negative number of dummy variables");
}

void SpinorPoly::require_compatible(const SpinorPoly& o) const {
  if (m_ != o.m_ || k_ != o.k_) throw std::invalid_argument("SpinorPoly: incompatible spaces");
}

void SpinorPoly::add(const Monomial& mono, std::size_t spinor_index, const GaussianRational& c) {
  if (spinor_index >= spinor_dim_) throw std::out_of_range("spinor index");
  Spinor s(spinor_dim_);
  s[spinor_index] = c;
  add(mono, s);
}

void SpinorPoly::add(const Monomial& mono, const Spinor& s) {
  if (mono.size() != num_vars() || s.size() != spinor_dim_) throw std::invalid_argument("SpinorPoly::add: shape mismatch");
  if (spinor_is_zero(s)) return;
  auto [it, inserted] = terms_.try_emplace(mono, s);
  if (inserted) return;
  for (std::size_t r = 0; r < s.size(); ++r)
    if (!s[r].is_zero()) it->second[r] += s[r];
  if (spinor_is_zero(it->second)) terms_.erase(it);
}

int SpinorPoly::block_degree(int block) const {
  int deg = -1;
  for (const auto& [mono, s] : terms_) {
    int d = 0;
    for (int i = 0; i < m_; ++i) d += mono[coordinate(m_, block, i)];
    if (deg >= 0 && d != deg) return -1;
    deg = d;
  }
  return std::max(deg, 0);
}

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& o) {
  if (m_ == 0) *this = SpinorPoly(o.m_, o.k_);
  require_compatible(o);
  for (const auto& [mono, s] : o.terms_) add(mono, s);
  return *this;
}

SpinorPoly& SpinorPoly::operator-=(const SpinorPoly& o) {
  if (m_ == 0) *this = SpinorPoly(o.m_, o.k_);
  require_compatible(o);
  for (const auto& [mono, s] : o.terms_) add(mono, scaled(s, GaussianRational(-1)));
  return *this;
}

SpinorPoly& SpinorPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, s] : terms_)
    for (auto& z : s)
      if (!z.is_zero()) z *= c;
  return *this;
}

std::string SpinorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[";
    for (std::size_t r = 0; r < s.size(); ++r) os << (r ? "," : "") << hsfact::to_string(s[r]);
    os << "]";
    for (std::size_t c = 0; c < mono.size(); ++c) {
      if (mono[c] == 0) continue;
      const int block = static_cast<int>(c) / m_;
      const int i = static_cast<int>(c) % m_ + 1;
      os << (block == 0 ? "x" : "u" + std::to_string(block) + "_") << i;
      if (mono[c] > 1) os << "^" << int(mono[c]);
    }
  }
  return os.str();
}

OperatorSpec OperatorSpec::dirac(int var) {
  OperatorSpec s;
  s.kind = Kind::dirac;
  s.var = var;
  return s;
}
OperatorSpec OperatorSpec::vector_mult(int var) {
  OperatorSpec s;
  s.kind = Kind::vector_mult;
  s.var = var;
  return s;
}
OperatorSpec OperatorSpec::mixed_euler(int p, int q) {
  OperatorSpec s;
  s.kind = Kind::mixed_euler;
  s.p = p;
  s.q = q;
  return s;
}
OperatorSpec OperatorSpec::euler(int var) {
  OperatorSpec s;
  s.kind = Kind::euler;
  s.var = var;
  return s;
}
OperatorSpec OperatorSpec::laplace(int var) {
  OperatorSpec s;
  s.kind = Kind::laplace;
  s.var = var;
  return s;
}
OperatorSpec OperatorSpec::cross_laplace(int p, int q) {
  OperatorSpec s;
  s.kind = Kind::cross_laplace;
  s.p = p;
  s.q = q;
  return s;
}
OperatorSpec OperatorSpec::gamma(int i) {
  OperatorSpec s;
  s.kind = Kind::gamma;
  s.index = i;
  return s;
}
OperatorSpec OperatorSpec::angular(int a, int b) {
  OperatorSpec s;
  s.kind = Kind::angular;
  s.index = a;
  s.q = b;
  return s;
}
OperatorSpec OperatorSpec::compose(std::vector<OperatorSpec> chain) {
  OperatorSpec s;
  s.kind = Kind::compose;
  s.children = std::move(chain);
  return s;
}
OperatorSpec OperatorSpec::scalar_mix(std::vector<std::pair<Rational, OperatorSpec>> terms) {
  OperatorSpec s;
  s.kind = Kind::scalar_mix;
  for (auto& [c, spec] : terms) {
    s.coefficients.push_back(c);
    s.children.push_back(std::move(spec));
  }
  return s;
}

std::string OperatorSpec::to_string() const {
  auto v = [](int var) { return var == 0 ? std::string("x") : "u" + std::to_string(var); };
  switch (kind) {
    case Kind::identity: return "id";
    case Kind::dirac: return "D(" + v(var) + ")";
    case Kind::vector_mult: return v(var) + ".";
    case Kind::mixed_euler: return "<" + v(p) + ",d" + v(q) + ">";
    case Kind::euler: return "E(" + v(var) + ")";
    case Kind::laplace: return "Lap(" + v(var) + ")";
    case Kind::cross_laplace: return "<d" + v(p) + ",d" + v(q) + ">";
    case Kind::gamma: return "g" + std::to_string(index + 1);
    case Kind::angular: return "L" + std::to_string(index + 1) + std::to_string(q + 1);
    case Kind::compose: {
      std::string s;
      for (const auto& c : children) s += (s.empty() ? "" : " o ") + c.to_string();
      return "(" + s + ")";
    }
    case Kind::scalar_mix: {
      std::string s;
      for (std::size_t j = 0; j < children.size(); ++j)
        s += (j ? " + " : "") + hsfact::to_string(coefficients[j]) + "*" + children[j].to_string();
      return "(" + s + ")";
    }
  }
  return "?";
}

SpinorPoly apply(const OperatorSpec& spec, const SpinorPoly& f) { return apply_impl(spec, f); }

SpinorPoly laplace(int var, const SpinorPoly& f) { return second_order(f, var, var); }

std::vector<std::vector<std::uint8_t>> monomials_of_degree(int m, int d) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
      self(self, i + 1, left - e);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

std::vector<SpinorPoly> homogeneous_basis(int m, int k, const std::vector<int>& degrees) {
  if (degrees.size() != static_cast<std::size_t>(k + 1))
    throw std::invalid_argument("homogeneous_basis: need one degree per variable block");
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 0 || d > 255; }))
    throw std::invalid_argument("homogeneous_basis: degree out of range");
  const std::size_t sdim = cached_gamma_rep(m).spinor_dim;
  std::vector<Monomial> monos{Monomial{}};
  for (int block = 0; block <= k; ++block) {
    std::vector<Monomial> next;
    for (const auto& prefix : monos)
      for (const auto& part : monomials_of_degree(m, degrees[static_cast<std::size_t>(block)])) {
        Monomial mono = prefix;
        mono.insert(mono.end(), part.begin(), part.end());
        next.push_back(std::move(mono));
      }
    monos = std::move(next);
  }
  std::vector<SpinorPoly> out;
  out.reserve(monos.size() * sdim);
  for (const auto& mono : monos)
    for (std::size_t s = 0; s < sdim; ++s) {
      SpinorPoly f(m, k);
      f.add(mono, s, 1);
      out.push_back(std::move(f));
    }
  return out;
}

std::size_t Coordinatizer::KeyHash::operator()(const std::pair<Monomial, std::size_t>& k) const {
  std::size_t h = std::hash<std::size_t>()(k.second);
  for (auto e : k.first) h = h * 131 + e;
  return h;
}

Coordinatizer::Coordinatizer(std::vector<SpinorPoly> basis) : basis_(std::move(basis)) {
  monomial_basis_ = true;
  for (std::size_t j = 0; j < basis_.size() && monomial_basis_; ++j) {
    const auto& t = basis_[j].terms();
    if (t.size() != 1) {
      monomial_basis_ = false;
      break;
    }
    const Spinor& s = t.begin()->second;
    std::size_t nonzero = 0, where = 0;
    for (std::size_t r = 0; r < s.size(); ++r)
      if (!s[r].is_zero()) {
        ++nonzero;
        where = r;
      }
    if (nonzero != 1 || !(s[where] == GaussianRational(1)) ||
        !monomial_index_.emplace(Key{t.begin()->first, where}, j).second)
      monomial_basis_ = false;
  }
  if (monomial_basis_) return;
  monomial_index_.clear();

  for (const auto& f : basis_)
    for (const auto& [mono, s] : f.terms())
      for (std::size_t r = 0; r < s.size(); ++r)
        if (!s[r].is_zero() && key_index_.emplace(Key{mono, r}, keys_.size()).second) keys_.push_back({mono, r});

  const std::size_t nb = basis_.size(), nk = keys_.size();
  Matrix aug(nb, nk + nb);
  for (std::size_t j = 0; j < nb; ++j) {
    for (const auto& [mono, s] : basis_[j].terms())
      for (std::size_t r = 0; r < s.size(); ++r)
        if (!s[r].is_zero()) aug(j, key_index_.at({mono, r})) = s[r];
    aug(j, nk + j) = 1;
  }
  const linalg::RowEchelon e = linalg::row_reduce(aug);
  if (e.rank() != nb || (nb > 0 && e.pivot_columns.back() >= nk))
    throw std::invalid_argument("Coordinatizer: basis is linearly dependent");
  pivots_ = e.pivot_columns;
  reduced_ = Matrix(nb, nk);
  transform_ = Matrix(nb, nb);
  for (std::size_t r = 0; r < nb; ++r) {
    for (std::size_t c = 0; c < nk; ++c) reduced_(r, c) = e.reduced(r, c);
    for (std::size_t c = 0; c < nb; ++c) transform_(r, c) = e.reduced(r, nk + c);
  }
}

bool Coordinatizer::solve_coordinates(const SpinorPoly& f, std::vector<GaussianRational>& out) const {
  const std::size_t nb = basis_.size();
  out.assign(nb, GaussianRational());
  if (monomial_basis_) {
    for (const auto& [mono, s] : f.terms())
      for (std::size_t r = 0; r < s.size(); ++r) {
        if (s[r].is_zero()) continue;
        auto it = monomial_index_.find({mono, r});
        if (it == monomial_index_.end()) return false;
        out[it->second] = s[r];
      }
    return true;
  }
  std::vector<GaussianRational> values(keys_.size());
  for (const auto& [mono, s] : f.terms())
    for (std::size_t r = 0; r < s.size(); ++r) {
      if (s[r].is_zero()) continue;
      auto it = key_index_.find({mono, r});
      if (it == key_index_.end()) return false;
      values[it->second] = s[r];
    }
  // f^T = d^T R with d read off at the pivot columns; coordinates are d^T E.
  std::vector<GaussianRational> d(nb);
  for (std::size_t r = 0; r < nb; ++r) d[r] = values[pivots_[r]];
  for (std::size_t c = 0; c < keys_.size(); ++c) {
    GaussianRational v;
    for (std::size_t r = 0; r < nb; ++r)
      if (!d[r].is_zero() && !reduced_(r, c).is_zero()) v.add_product(d[r], reduced_(r, c));
    if (!(v == values[c])) return false;
  }
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t r = 0; r < nb; ++r)
      if (!d[r].is_zero() && !transform_(r, j).is_zero()) out[j].add_product(d[r], transform_(r, j));
  return true;
}

std::vector<GaussianRational> Coordinatizer::coordinates(const SpinorPoly& f) const {
  std::vector<GaussianRational> out;
  if (!solve_coordinates(f, out)) throw std::domain_error("polynomial lies outside the codomain span: " + f.to_string());
  return out;
}

bool Coordinatizer::in_span(const SpinorPoly& f) const {
  std::vector<GaussianRational> out;
  return solve_coordinates(f, out);
}

SpinorPoly Coordinatizer::combine(const std::vector<GaussianRational>& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("combine: wrong number of coordinates");
  SpinorPoly out;
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (!coords[j].is_zero()) out += basis_[j] * coords[j];
  return out;
}

Matrix operator_matrix(const OperatorSpec& spec, const std::vector<SpinorPoly>& domain, const Coordinatizer& codomain) {
  Matrix out(codomain.dimension(), domain.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(domain.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < n; ++j) {
    try {
      const auto col = static_cast<std::size_t>(j);
      const auto coords = codomain.coordinates(apply(spec, domain[col]));
      for (std::size_t r = 0; r < coords.size(); ++r) out(r, col) = coords[r];
    } catch (...) {
#pragma omp critical(hsfact_operator_matrix)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

LinOpMatrix operator_matrix(const OperatorSpec& spec, const std::vector<SpinorPoly>& domain,
                            std::shared_ptr<const Coordinatizer> codomain) {
  LinOpMatrix out;
  out.domain = domain;
  out.matrix = operator_matrix(spec, domain, *codomain);
  out.codomain = std::move(codomain);
  return out;
}

std::vector<SpinorPoly> common_kernel(int m, const std::vector<int>& degrees,
                                      const std::vector<KernelConstraint>& constraints, std::size_t cap) {
  const int k = static_cast<int>(degrees.size()) - 1;
  std::vector<SpinorPoly> domain = homogeneous_basis(m, k, degrees);
  if (domain.size() > cap)
    throw ResourceLimitError("component of dimension " + std::to_string(domain.size()) + " exceeds cap " +
                             std::to_string(cap));
  std::vector<Matrix> blocks;
  for (const auto& c : constraints) {
    if (std::any_of(c.target_degrees.begin(), c.target_degrees.end(), [](int d) { return d < 0; })) continue;
    const Coordinatizer codomain(homogeneous_basis(m, k, c.target_degrees));
    blocks.push_back(operator_matrix(c.op, domain, codomain));
  }
  if (blocks.empty()) return domain;
  const Matrix null = linalg::nullspace(linalg::vstack(blocks));
  std::vector<SpinorPoly> out;
  for (std::size_t col = 0; col < null.cols(); ++col) {
    SpinorPoly f(m, k);
    for (std::size_t j = 0; j < null.rows(); ++j)
      if (!null(j, col).is_zero()) f += domain[j] * null(j, col);
    out.push_back(std::move(f));
  }
  return out;
}

namespace serial {

Matrix operator_matrix(const OperatorSpec& spec, const std::vector<SpinorPoly>& domain, const Coordinatizer& codomain) {
  Matrix out(codomain.dimension(), domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const auto coords = codomain.coordinates(apply(spec, domain[col]));
    for (std::size_t r = 0; r < coords.size(); ++r) out(r, col) = coords[r];
  }
  return out;
}

}  // namespace serial

}  // namespace hsfact
