#include "hsfact/clifford.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hsfact {

using linalg::Matrix;

namespace {

void require_same_dimension(const CliffordElement& a, const CliffordElement& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("Clifford dimension mismatch");
}

// Sign of e_A e_B relative to e_{A xor B}: reordering swaps plus one -1 per
// repeated generator.
int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

CliffordElement CliffordElement::scalar(int m, const GaussianRational& c) { return blade(m, 0, c); }

CliffordElement CliffordElement::generator(int m, int p) {
  if (p < 1 || p > m) throw std::out_of_range("Clifford generator index");
  return blade(m, std::uint32_t{1} << (p - 1));
}

CliffordElement CliffordElement::blade(int m, std::uint32_t mask, const GaussianRational& c) {
  if (m < 1 || m > 31) throw std::invalid_argument("Clifford dimension out of range");
  if (mask >> m) throw std::out_of_range("blade mask exceeds dimension");
  CliffordElement x(m);
  x.add(mask, c);
  return x;
}

GaussianRational CliffordElement::coefficient(std::uint32_t mask) const {
  auto it = blades_.find(mask);
  return it == blades_.end() ? GaussianRational() : it->second;
}

void CliffordElement::add(std::uint32_t mask, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = blades_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) blades_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  require_same_dimension(*this, o);
  for (const auto& [k, v] : o.blades_) add(k, v);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  require_same_dimension(*this, o);
  for (const auto& [k, v] : o.blades_) add(k, -v);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    blades_.clear();
    return *this;
  }
  for (auto& [k, v] : blades_) v *= s;
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  require_same_dimension(a, b);
  CliffordElement out(a.dimension());
  for (const auto& [ka, va] : a.blades_)
    for (const auto& [kb, vb] : b.blades_) {
      GaussianRational c = va * vb;
      if (blade_sign(ka, kb) < 0) c = -c;
      out.add(ka ^ kb, c);
    }
  return out;
}

std::string CliffordElement::to_string() const {
  if (blades_.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : blades_) {
    if (!s.empty()) s += " + ";
    s += "(" + hsfact::to_string(v) + ")";
    if (k == 0) continue;
    s += "e";
    for (int p = 0; p < m_; ++p)
      if ((k >> p) & 1U) s += std::to_string(p + 1);
  }
  return s;
}

CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b) { return a * b; }

Matrix GammaRep::represent(const CliffordElement& x) const {
  if (x.dimension() != m) throw std::invalid_argument("represent: dimension mismatch");
  Matrix out(spinor_dim, spinor_dim);
  for (const auto& [mask, c] : x.blades()) {
    Matrix term = Matrix::identity(spinor_dim);
    for (int p = 0; p < m; ++p)
      if ((mask >> p) & 1U) term = linalg::multiply(term, generators[static_cast<std::size_t>(p)]);
    out += term * c;
  }
  return out;
}

GammaRep gamma_rep(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("gamma_rep: odd dimension m >= 3 required, got " + std::to_string(m));
  if (m > 15) throw std::invalid_argument("gamma_rep: dimension too large");
  const GaussianRational i = GaussianRational::i();
  const Matrix id = Matrix::identity(2);
  const Matrix s1 = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix s2 = Matrix::from_rows({{0, -i}, {i, 0}});
  const Matrix s3 = Matrix::from_rows({{1, 0}, {0, -1}});

  GammaRep rep;
  rep.m = m;
  rep.n = (m - 1) / 2;
  rep.spinor_dim = std::size_t{1} << rep.n;

  // Hermitian Clifford generators squaring to +1; multiplying by i flips the square.
  auto chain = [&](int k, const Matrix& middle) {
    Matrix out = Matrix::identity(1);
    for (int j = 0; j < rep.n; ++j) out = linalg::kron(out, j < k ? s3 : (j == k ? middle : id));
    return out;
  };
  for (int k = 0; k < rep.n; ++k) {
    rep.generators.push_back(chain(k, s1) * i);
    rep.generators.push_back(chain(k, s2) * i);
  }
  rep.generators.push_back(chain(rep.n, id) * i);
  return rep;
}

const GammaRep& cached_gamma_rep(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GammaRep>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<GammaRep>(gamma_rep(m));
  return *slot;
}

bool check_gamma_relations(const GammaRep& rep) {
  const Matrix id = Matrix::identity(rep.spinor_dim);
  for (std::size_t a = 0; a < rep.generators.size(); ++a)
    for (std::size_t b = 0; b < rep.generators.size(); ++b) {
      const Matrix& ga = rep.generators[a];
      const Matrix& gb = rep.generators[b];
      const Matrix anti = linalg::multiply(ga, gb) + linalg::multiply(gb, ga);
      const Matrix expected = a == b ? id * GaussianRational(-2) : Matrix(rep.spinor_dim, rep.spinor_dim);
      if (anti != expected) return false;
    }
  return true;
}

std::vector<SpinGenerator> spin_generators(const GammaRep& rep) {
  std::vector<SpinGenerator> out;
  const GaussianRational minus_half(Rational(-1, 2));
  for (int a = 1; a <= rep.m; ++a)
    for (int b = a + 1; b <= rep.m; ++b)
      out.push_back({a, b,
                     linalg::multiply(rep.generators[static_cast<std::size_t>(a - 1)],
                                      rep.generators[static_cast<std::size_t>(b - 1)]) *
                         minus_half});
  return out;
}

bool check_spin_brackets(const std::vector<SpinGenerator>& gens) {
  if (gens.empty()) return true;
  std::map<std::pair<int, int>, const Matrix*> by_index;
  for (const auto& g : gens) by_index[{g.a, g.b}] = &g.matrix;
  const std::size_t dim = gens.front().matrix.rows();
  // G_ab with a > b is -G_ba, and G_aa = 0.
  auto get = [&](int a, int b) -> Matrix {
    if (a == b) return Matrix(dim, dim);
    if (a < b) return *by_index.at({a, b});
    return *by_index.at({b, a}) * GaussianRational(-1);
  };
  auto delta = [](int x, int y) { return x == y ? 1 : 0; };
  for (const auto& g : gens)
    for (const auto& h : gens) {
      const int a = g.a, b = g.b, c = h.a, d = h.b;
      Matrix expected(dim, dim);
      if (delta(b, c)) expected += get(a, d);
      if (delta(a, c)) expected -= get(b, d);
      if (delta(b, d)) expected -= get(a, c);
      if (delta(a, d)) expected += get(b, c);
      if (linalg::commutator(g.matrix, h.matrix) != expected) return false;
    }
  return true;
}

}  // namespace hsfact
