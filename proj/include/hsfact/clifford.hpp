#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hsfact/linalg.hpp"
#include "hsfact/scalar.hpp"

namespace hsfact {

/// Element of the complex Clifford algebra C_m, e_p e_q + e_q e_p = -2 delta_pq.
/// Blades are keyed by bitmask: bit p-1 set means e_p is a factor.
class CliffordElement {
 public:
  explicit CliffordElement(int m) : m_(m) {}

  static CliffordElement scalar(int m, const GaussianRational& c);
  /// The generator e_p, 1-based.
  static CliffordElement generator(int m, int p);
  static CliffordElement blade(int m, std::uint32_t mask, const GaussianRational& c = 1);

  int dimension() const { return m_; }
  const std::map<std::uint32_t, GaussianRational>& blades() const { return blades_; }
  bool is_zero() const { return blades_.empty(); }
  GaussianRational coefficient(std::uint32_t mask) const;

  void add(std::uint32_t mask, const GaussianRational& c);

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const GaussianRational& s);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const GaussianRational& s) { return a *= s; }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  std::string to_string() const;

 private:
  int m_;
  std::map<std::uint32_t, GaussianRational> blades_;
};

CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);

/// Matrix representation of C_m on S = C^(2^n), m = 2n+1.
struct GammaRep {
  int m = 0;
  int n = 0;
  std::size_t spinor_dim = 0;
  /// generators[p] represents e_{p+1}; each squares to -1 and is anti-Hermitian.
  std::vector<linalg::Matrix> generators;

  /// The image of a Clifford element.
  linalg::Matrix represent(const CliffordElement& x) const;
};

/// Tensor products of Pauli matrices. Throws for even or non-positive m.
GammaRep gamma_rep(int m);

/// Cached per m; safe for concurrent use.
const GammaRep& cached_gamma_rep(int m);

/// gamma_a gamma_b + gamma_b gamma_a == -2 delta_ab on every pair.
bool check_gamma_relations(const GammaRep& rep);

struct SpinGenerator {
  int a = 0;  ///< 1-based, a < b
  int b = 0;
  linalg::Matrix matrix;
};

/// G_ab = -(1/2) gamma_a gamma_b for a < b. With this sign the spinor action
/// has the brackets of u_a d_b - u_b d_a, so the two can be added.
std::vector<SpinGenerator> spin_generators(const GammaRep& rep);

/// Every commutator [G_ab, G_cd] equals the so(m) bracket combination
/// delta_bc G_ad - delta_ac G_bd - delta_bd G_ac + delta_ad G_bc.
bool check_spin_brackets(const std::vector<SpinGenerator>& gens);

}  // namespace hsfact
