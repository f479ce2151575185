#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "hsfact/errors.hpp"
#include "hsfact/linalg.hpp"
#include "hsfact/polyspace.hpp"
#include "hsfact/weights.hpp"

namespace hsfact {

/// Rank of B_n for odd m = 2n+1; throws for even or small m.
int rank_for_dimension(int m);

/// A finite-dimensional space of spinor-valued polynomials in u_1..u_k
/// (x-degree zero) together with the degrees it lives in.
struct RealizedSpace {
  Weight label;
  int m = 0;
  int k = 0;
  std::vector<int> degrees;  ///< x first, then u_1..u_k
  std::vector<SpinorPoly> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Weight padded to rank n with only its nonzero rows used as dummy variables.
std::vector<int> dummy_degrees(const Weight& lambda);

/// Null space of all d_{u_p} and <u_p, d_{u_q}> (p < q) on the lambda-homogeneous
/// component; realizes S_lambda. Throws ResourceLimitError above cap.
RealizedSpace simplicial_monogenic_basis(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

/// Spinor-valued simplicial harmonics: Laplace(u_p), <u_p,d_{u_q}> and
/// <d_{u_p},d_{u_q}> vanish. Realizes V_lambda (x) S.
RealizedSpace simplicial_harmonic_basis(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

/// Weyl dimension formula for B_n; the weight is padded to rank n.
unsigned long weyl_dim(const Weight& w, int m);

/// <kappa, kappa + 2 rho> with rho_i = (m - 2i)/2.
Rational casimir_eigenvalue(const Weight& kappa, int m);

/// V_lambda (x) S with its Clifford and so(m) actions in basis coordinates.
struct Ambient {
  Weight lambda;  ///< padded to rank n
  int m = 0;
  RealizedSpace space;
  std::shared_ptr<const Coordinatizer> coords;
  std::vector<linalg::Matrix> gamma;  ///< gamma_i acting on the spinor factor
  std::vector<SpinGenerator> generators;  ///< L_ab on polynomials and spinors
  linalg::Matrix casimir;                 ///< -sum_{a<b} L_ab^2

  std::size_t dimension() const { return space.dimension(); }
};

Ambient build_ambient(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

/// Cached per (lambda, m); safe for concurrent use.
std::shared_ptr<const Ambient> cached_ambient(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

struct ProjectorEntry {
  Weight kappa;  ///< primed
  Rational eigenvalue;
  linalg::Matrix projector;
};

struct ProjectorSet {
  Weight lambda;
  int m = 0;
  std::vector<ProjectorEntry> entries;  ///< summand_weights order
};

/// Spectral projectors of the Casimir onto the summands of V_lambda (x) S.
/// Throws std::runtime_error on an eigenvalue collision.
ProjectorSet casimir_projectors(const Ambient& ambient);

struct ProjectorCheck {
  bool idempotent = true;
  bool orthogonal = true;
  bool complete = true;
  bool casimir_invariant = true;  ///< Casimir commutes with every L_ab
  bool pass() const { return idempotent && orthogonal && complete && casimir_invariant; }
};

ProjectorCheck check_projectors(const Ambient& ambient, const ProjectorSet& set);

}  // namespace hsfact
