#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hsfact/scalar.hpp"

namespace hsfact::linalg {

using Scalar = GaussianRational;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  Matrix column_block(std::size_t first, std::size_t count) const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Product using the sparse-aware OpenMP kernel.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Exact Gauss-Jordan elimination on a sparse row representation; rows are
/// updated in parallel for every pivot.
RowEchelon row_reduce(const Matrix& a);

/// Columns form a basis of {v : a v = 0}. Each basis vector has a 1 in its
/// free column and 0 in every other free column.
Matrix nullspace(const Matrix& a);

std::size_t rank(const Matrix& a);

/// One solution of a x = b (free variables set to zero), or nullopt when the
/// system is inconsistent. b may have several columns.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix hstack(std::span<const Matrix> blocks);
Matrix vstack(std::span<const Matrix> blocks);
Matrix kron(const Matrix& a, const Matrix& b);

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

namespace serial {

/// Textbook triple loop; reference for linalg::multiply.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Dense textbook Gauss-Jordan; reference for linalg::row_reduce.
RowEchelon row_reduce(const Matrix& a);

}  // namespace serial

}  // namespace hsfact::linalg
