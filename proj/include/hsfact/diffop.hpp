#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hsfact/linalg.hpp"

namespace hsfact {

/// Multi-index over the m coordinates of x.
using MultiIndex = std::vector<std::uint8_t>;

/// Homogeneous constant-coefficient differential operator in x with matrix
/// coefficients acting on a finite-dimensional value space:
///   sum_alpha C_alpha d^alpha,   C_alpha : C^cols -> C^rows.
class DiffOp {
 public:
  DiffOp() = default;
  DiffOp(int m, std::size_t rows, std::size_t cols, int order);

  /// C d^0.
  static DiffOp constant(int m, const linalg::Matrix& c);
  static DiffOp identity(int m, std::size_t dim);
  /// sum_i d_i^2 on a value space of the given dimension.
  static DiffOp laplace(int m, std::size_t dim);
  /// sum_i d_i (x) coefficients[i].
  static DiffOp first_order(int m, const std::vector<linalg::Matrix>& coefficients);

  int m() const { return m_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }
  const std::map<MultiIndex, linalg::Matrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& alpha, const linalg::Matrix& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const linalg::Scalar& s);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const linalg::Scalar& s) { return a *= s; }
  /// Composition; b acts first.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// left * this and this * right on the value spaces.
  DiffOp left_multiply(const linalg::Matrix& left) const;
  DiffOp right_multiply(const linalg::Matrix& right) const;

 private:
  void require_same_shape(const DiffOp& o) const;

  int m_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 0;
  std::map<MultiIndex, linalg::Matrix> terms_;
};

/// Matrix of the operator from degree-h polynomials to degree h - order.
/// Basis order: monomials_of_degree, value index fastest. Columns run in
/// parallel.
linalg::Matrix materialize(const DiffOp& op, int h);

namespace serial {

/// Reference implementation of materialize, one entry at a time.
linalg::Matrix materialize(const DiffOp& op, int h);

}  // namespace serial

}  // namespace hsfact
