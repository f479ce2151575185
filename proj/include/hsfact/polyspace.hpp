#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hsfact/clifford.hpp"
#include "hsfact/linalg.hpp"
#include "hsfact/scalar.hpp"

namespace hsfact {

/// Exponents over the (k+1)*m coordinates; block 0 is x, block p is u_p.
using Monomial = std::vector<std::uint8_t>;
using Spinor = std::vector<GaussianRational>;

/// Spinor-valued polynomial f(x; u_1, ..., u_k).
class SpinorPoly {
 public:
  SpinorPoly() = default;
  SpinorPoly(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  std::size_t spinor_dim() const { return spinor_dim_; }
  std::size_t num_vars() const { return static_cast<std::size_t>((k_ + 1) * m_); }

  const std::map<Monomial, Spinor>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * e_s at the given monomial.
  void add(const Monomial& mono, std::size_t spinor_index, const GaussianRational& c);
  void add(const Monomial& mono, const Spinor& s);

  /// Total degree in one block (0 = x); -1 when the polynomial is not homogeneous there.
  int block_degree(int block) const;

  SpinorPoly& operator+=(const SpinorPoly& o);
  SpinorPoly& operator-=(const SpinorPoly& o);
  SpinorPoly& operator*=(const GaussianRational& s);
  friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
  friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
  friend SpinorPoly operator*(SpinorPoly a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const SpinorPoly&, const SpinorPoly&) = default;

  std::string to_string() const;

 private:
  void require_compatible(const SpinorPoly& o) const;

  int m_ = 0;
  int k_ = 0;
  std::size_t spinor_dim_ = 0;
  std::map<Monomial, Spinor> terms_;
};

/// Index of coordinate i (0-based) of variable block var.
inline std::size_t coordinate(int m, int var, int i) { return static_cast<std::size_t>(var * m + i); }

/// Constant-coefficient building blocks and their combinations.
///
/// Variable 0 is x, variable p >= 1 is u_p.
struct OperatorSpec {
  enum class Kind {
    identity,
    dirac,          ///< sum_i gamma_i d/dvar_i
    vector_mult,    ///< sum_i gamma_i var_i
    mixed_euler,    ///< <u_p, d_q> = sum_i u_{p,i} d/du_{q,i}
    euler,          ///< homogeneity degree in var
    laplace,        ///< + sum_i d^2/dvar_i^2
    cross_laplace,  ///< sum_i d/du_{p,i} d/du_{q,i}
    gamma,          ///< Clifford multiplication by gamma_index
    angular,        ///< sum over blocks (v_a d_b - v_b d_a) - (1/2) gamma_a gamma_b
    compose,        ///< children applied right to left
    scalar_mix,     ///< sum of coefficients[j] * children[j]
  };

  Kind kind = Kind::identity;
  int var = 0;
  int p = 0;
  int q = 0;
  int index = 0;  ///< 0-based; for angular, a = index and b = q
  std::vector<OperatorSpec> children;
  std::vector<Rational> coefficients;

  static OperatorSpec identity() { return {}; }
  static OperatorSpec dirac(int var);
  static OperatorSpec vector_mult(int var);
  static OperatorSpec mixed_euler(int p, int q);
  static OperatorSpec euler(int var);
  static OperatorSpec laplace(int var);
  static OperatorSpec cross_laplace(int p, int q);
  static OperatorSpec gamma(int i);
  static OperatorSpec angular(int a, int b);
  static OperatorSpec compose(std::vector<OperatorSpec> chain);
  static OperatorSpec scalar_mix(std::vector<std::pair<Rational, OperatorSpec>> terms);

  std::string to_string() const;
};

SpinorPoly apply(const OperatorSpec& spec, const SpinorPoly& f);

/// Component-wise + sum_i d^2/dvar_i^2.
SpinorPoly laplace(int var, const SpinorPoly& f);

/// Monomials of the given block degrees (x first, length k+1) in a fixed
/// order, tensored with the spinor units (spinor index varies fastest).
std::vector<SpinorPoly> homogeneous_basis(int m, int k, const std::vector<int>& degrees);

/// All monomials in m variables of total degree d, lexicographically decreasing.
std::vector<std::vector<std::uint8_t>> monomials_of_degree(int m, int d);

/// Exact coordinates with respect to a linearly independent family.
class Coordinatizer {
 public:
  explicit Coordinatizer(std::vector<SpinorPoly> basis);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<SpinorPoly>& basis() const { return basis_; }

  /// Throws std::domain_error when f is not in the span.
  std::vector<GaussianRational> coordinates(const SpinorPoly& f) const;
  bool in_span(const SpinorPoly& f) const;

  SpinorPoly combine(const std::vector<GaussianRational>& coords) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Monomial, std::size_t>& k) const;
  };
  using Key = std::pair<Monomial, std::size_t>;

  bool solve_coordinates(const SpinorPoly& f, std::vector<GaussianRational>& out) const;

  std::vector<SpinorPoly> basis_;
  bool monomial_basis_ = false;
  std::unordered_map<Key, std::size_t, KeyHash> monomial_index_;
  // General case: reduced rows R = E * B^T with pivots and the transform E.
  std::unordered_map<Key, std::size_t, KeyHash> key_index_;
  std::vector<Key> keys_;
  linalg::Matrix reduced_;
  std::vector<std::size_t> pivots_;
  linalg::Matrix transform_;
};

/// Exact realization of a spec between two bases.
struct LinOpMatrix {
  std::vector<SpinorPoly> domain;
  std::shared_ptr<const Coordinatizer> codomain;
  linalg::Matrix matrix;
};

/// Columns are parallelized with OpenMP.
LinOpMatrix operator_matrix(const OperatorSpec& spec, const std::vector<SpinorPoly>& domain,
                            std::shared_ptr<const Coordinatizer> codomain);

/// Matrix of a spec, columns in the domain basis, rows in codomain coordinates.
linalg::Matrix operator_matrix(const OperatorSpec& spec, const std::vector<SpinorPoly>& domain,
                               const Coordinatizer& codomain);

/// An operator together with the block degrees of its codomain.
struct KernelConstraint {
  OperatorSpec op;
  std::vector<int> target_degrees;
};

/// Basis of the common kernel of several operators on the homogeneous
/// component with the given block degrees (x first). Constraints whose
/// codomain has a negative degree are vacuous. Throws ResourceLimitError
/// when the component is larger than cap.
std::vector<SpinorPoly> common_kernel(int m, const std::vector<int>& degrees,
                                      const std::vector<KernelConstraint>& constraints, std::size_t cap);

namespace serial {

/// Column-by-column reference for operator_matrix.
linalg::Matrix operator_matrix(const OperatorSpec& spec, const std::vector<SpinorPoly>& domain,
                               const Coordinatizer& codomain);

}  // namespace serial

}  // namespace hsfact
