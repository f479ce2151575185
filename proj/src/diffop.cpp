#include "hsfact/diffop.hpp"

#include <map>
#include <stdexcept>

#include "hsfact/polyspace.hpp"

namespace hsfact {

using linalg::Matrix;
using linalg::Scalar;

namespace {

int total_degree(const MultiIndex& a) {
  int d = 0;
  for (auto e : a) d += e;
  return d;
}

// alpha! / (alpha - beta)!, zero unless beta <= alpha.
long falling_factor(const MultiIndex& alpha, const MultiIndex& beta) {
  long f = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (beta[i] > alpha[i]) return 0;
    for (int j = 0; j < beta[i]; ++j) f *= alpha[i] - j;
  }
  return f;
}

std::map<MultiIndex, std::size_t> index_of_monomials(const std::vector<MultiIndex>& monos) {
  std::map<MultiIndex, std::size_t> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

}  // namespace

DiffOp::DiffOp(int m, std::size_t rows, std::size_t cols, int order) : m_(m), rows_(rows), cols_(cols), order_(order) {
  if (m < 1 || order < 0) throw std::invalid_argument("DiffOp: bad dimension or order");
}

DiffOp DiffOp::constant(int m, const Matrix& c) {
  DiffOp op(m, c.rows(), c.cols(), 0);
  op.add_term(MultiIndex(static_cast<std::size_t>(m), 0), c);
  return op;
}

DiffOp DiffOp::identity(int m, std::size_t dim) { return constant(m, Matrix::identity(dim)); }

DiffOp DiffOp::laplace(int m, std::size_t dim) {
  DiffOp op(m, dim, dim, 2);
  for (int i = 0; i < m; ++i) {
    MultiIndex a(static_cast<std::size_t>(m), 0);
    a[static_cast<std::size_t>(i)] = 2;
    op.add_term(a, Matrix::identity(dim));
  }
  return op;
}

DiffOp DiffOp::first_order(int m, const std::vector<Matrix>& coefficients) {
  if (coefficients.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("first_order: need m coefficients");
  DiffOp op(m, coefficients.front().rows(), coefficients.front().cols(), 1);
  for (int i = 0; i < m; ++i) {
    MultiIndex a(static_cast<std::size_t>(m), 0);
    a[static_cast<std::size_t>(i)] = 1;
    op.add_term(a, coefficients[static_cast<std::size_t>(i)]);
  }
  return op;
}

void DiffOp::add_term(const MultiIndex& alpha, const Matrix& c) {
  if (alpha.size() != static_cast<std::size_t>(m_) || total_degree(alpha) != order_)
    throw std::invalid_argument("DiffOp: term of wrong order");
  if (c.rows() != rows_ || c.cols() != cols_) throw std::invalid_argument("DiffOp: coefficient shape mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffOp::require_same_shape(const DiffOp& o) const {
  if (m_ != o.m_ || rows_ != o.rows_ || cols_ != o.cols_ || order_ != o.order_)
    throw std::invalid_argument("DiffOp: shape or order mismatch");
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  require_same_shape(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  require_same_shape(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c * Scalar(-1));
  return *this;
}

DiffOp& DiffOp::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.m_ != b.m_ || a.cols_ != b.rows_) throw std::invalid_argument("DiffOp: cannot compose");
  DiffOp out(a.m_, a.rows_, b.cols_, a.order_ + b.order_);
  for (const auto& [alpha, ca] : a.terms_)
    for (const auto& [beta, cb] : b.terms_) {
      MultiIndex sum(alpha);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = static_cast<std::uint8_t>(sum[i] + beta[i]);
      out.add_term(sum, linalg::multiply(ca, cb));
    }
  return out;
}

DiffOp DiffOp::left_multiply(const Matrix& left) const {
  DiffOp out(m_, left.rows(), cols_, order_);
  for (const auto& [a, c] : terms_) out.add_term(a, linalg::multiply(left, c));
  return out;
}

DiffOp DiffOp::right_multiply(const Matrix& right) const {
  DiffOp out(m_, rows_, right.cols(), order_);
  for (const auto& [a, c] : terms_) out.add_term(a, linalg::multiply(c, right));
  return out;
}

Matrix materialize(const DiffOp& op, int h) {
  const auto domain = monomials_of_degree(op.m(), h);
  const auto codomain = monomials_of_degree(op.m(), h - op.order());
  const auto index = index_of_monomials(codomain);
  const std::size_t rows = op.rows(), cols = op.cols();
  Matrix out(codomain.size() * rows, domain.size() * cols);
  if (codomain.empty()) return out;
  const auto n = static_cast<std::int64_t>(domain.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < n; ++j) {
    const MultiIndex& alpha = domain[static_cast<std::size_t>(j)];
    for (const auto& [beta, c] : op.terms()) {
      const long f = falling_factor(alpha, beta);
      if (f == 0) continue;
      MultiIndex rest(alpha);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = static_cast<std::uint8_t>(rest[i] - beta[i]);
      const std::size_t row0 = index.at(rest) * rows;
      const std::size_t col0 = static_cast<std::size_t>(j) * cols;
      const Scalar factor(f);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t v = 0; v < cols; ++v)
          if (!c(r, v).is_zero()) out(row0 + r, col0 + v) += c(r, v) * factor;
    }
  }
  return out;
}

namespace serial {

Matrix materialize(const DiffOp& op, int h) {
  const auto domain = monomials_of_degree(op.m(), h);
  const auto codomain = monomials_of_degree(op.m(), h - op.order());
  const std::size_t rows = op.rows(), cols = op.cols();
  Matrix out(codomain.size() * rows, domain.size() * cols);
  for (std::size_t i = 0; i < codomain.size(); ++i)
    for (std::size_t j = 0; j < domain.size(); ++j) {
      // d^beta x^alpha has the single monomial x^(alpha - beta); match it against x^gamma.
      for (const auto& [beta, c] : op.terms()) {
        bool hit = true;
        for (std::size_t t = 0; t < beta.size(); ++t)
          if (domain[j][t] != codomain[i][t] + beta[t]) hit = false;
        if (!hit) continue;
        const Scalar factor(falling_factor(domain[j], beta));
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t v = 0; v < cols; ++v) out(i * rows + r, j * cols + v) += c(r, v) * factor;
      }
    }
  return out;
}

}  // namespace serial

}  // namespace hsfact
