#include "hsfact/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace hsfact::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw std::out_of_range("column block");
  Matrix b(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
  return b;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& v : data_)
    if (!v.is_zero()) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix c(a.rows(), b.cols());
  const auto n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(r, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(r, j).add_product(aik, b(k, j));
    }
  }
  return c;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

const Scalar* find_entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// row <- row - factor * pivot
void subtract_multiple(SparseRow& row, const SparseRow& pivot, const Scalar& factor) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      Scalar v = std::move(row[i].second);
      v -= factor * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

}  // namespace

RowEchelon row_reduce(const Matrix& a) {
  const std::size_t nrows = a.rows();
  const std::size_t ncols = a.cols();
  std::vector<SparseRow> rows(nrows);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c)
      if (!a(r, c).is_zero()) rows[r].emplace_back(static_cast<std::uint32_t>(c), a(r, c));

  std::vector<bool> is_pivot_row(nrows, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)

  for (std::size_t c = 0; c < ncols; ++c) {
    // Non-pivot rows are reduced against all earlier pivots, so their leading
    // column is at least c.
    std::size_t best = nrows;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (is_pivot_row[r] || rows[r].empty() || rows[r].front().first != c) continue;
      if (best == nrows || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == nrows) continue;

    SparseRow& prow = rows[best];
    const Scalar inv = Scalar(1) / prow.front().second;
    for (auto& e : prow) e.second *= inv;
    is_pivot_row[best] = true;
    pivots.emplace_back(c, best);

    const auto n = static_cast<std::int64_t>(nrows);
    const auto col = static_cast<std::uint32_t>(c);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto r = static_cast<std::size_t>(i);
      if (r == best || rows[r].empty()) continue;
      const Scalar* entry = is_pivot_row[r] ? find_entry(rows[r], col)
                            : (rows[r].front().first == col ? &rows[r].front().second : nullptr);
      if (entry == nullptr) continue;
      const Scalar factor = *entry;
      subtract_multiple(rows[r], prow, factor);
    }
  }

  RowEchelon out;
  out.reduced = Matrix(nrows, ncols);
  std::size_t out_row = 0;
  for (const auto& [c, r] : pivots) {
    out.pivot_columns.push_back(c);
    for (const auto& [col, v] : rows[r]) out.reduced(out_row, col) = v;
    ++out_row;
  }
  return out;
}

Matrix nullspace(const Matrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) {
      const Scalar& v = e.reduced(r, f);
      if (!v.is_zero()) basis(e.pivot_columns[r], k) = -v;
    }
  }
  return basis;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Matrix blocks[] = {a, b};
  const RowEchelon e = row_reduce(hstack(blocks));
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const std::size_t pc = e.pivot_columns[r];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

Matrix hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix out(blocks.front().rows(), cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks.front().cols()) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, blocks.front().cols());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return multiply(a, b) - multiply(b, a); }

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

RowEchelon row_reduce(const Matrix& a) {
  Matrix m = a;
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Scalar inv = Scalar(1) / m(lead_row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace serial

}  // namespace hsfact::linalg
