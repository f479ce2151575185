#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsfact/diffop.hpp"
#include "hsfact/errors.hpp"
#include "hsfact/linalg.hpp"
#include "hsfact/polyspace.hpp"
#include "hsfact/repthy.hpp"
#include "hsfact/scalar.hpp"
#include "hsfact/weights.hpp"

namespace hsfact {

enum class HsdKind { explicit_formula, generic };

/// An invariant first-order operator between spaces of polynomials with
/// values in realized summands. HSD operators have source == target.
///
/// op acts on coordinates: a function sum_s f_s(x) v_s, with v_s the source
/// value basis, is the vector (f_s); materialize(op, h) is the operator on
/// degree-h polynomials in the basis x^alpha v_s.
struct HsdOperator {
  Weight source;  ///< primed
  Weight target;  ///< primed
  HsdKind kind = HsdKind::generic;
  std::optional<OperatorSpec> spec;  ///< the explicit formula, when there is one
  DiffOp op;
  /// Value bases as polynomials in the dummy variables (x-degree zero).
  std::shared_ptr<const std::vector<SpinorPoly>> source_basis;
  std::shared_ptr<const std::vector<SpinorPoly>> target_basis;
  Weight ambient;  ///< integral lambda of V_lambda (x) S for generic operators

  bool is_hsd() const { return source == target; }
  std::string name() const;
};

/// R_k = (1 + u d_u / (2k+m-2)) d_x and
/// R_{k,l} = (1 + u_1 d_1 / (2k+m-2)) (1 + u_2 d_2 / (2l+m-4)) d_x
/// on the simplicial monogenics of label lambda'. Throws std::invalid_argument
/// on a vanishing denominator or a shape other than (k) or (k,l), and
/// std::logic_error if the formula leaves the value space.
HsdOperator explicit_hsd(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

/// The scalar rational factors 1/(2k+m-2) (and 1/(2l+m-4)) of the explicit formula.
std::vector<Rational> explicit_hsd_factors(const Weight& lambda, int m);

/// One irreducible summand kappa' of V_lambda (x) S: B has the spanning columns
/// of the projector, L the nonzero rows of its reduced form, so L B = 1 and
/// B L = P.
struct SummandRealization {
  Weight kappa;  ///< primed, padded
  linalg::Matrix basis;     ///< B, dim W x r
  linalg::Matrix left;      ///< L, r x dim W
  std::vector<SpinGenerator> generators;  ///< L L_ab B
  std::shared_ptr<const std::vector<SpinorPoly>> polys;  ///< columns of B as polynomials
  std::size_t dimension() const { return basis.cols(); }
};

/// The blocks p_kappa (id (x) d_x) r_iota of the twisted Dirac operator on V_lambda (x) S.
struct GenericFamily {
  Weight lambda;
  int m = 0;
  std::shared_ptr<const Ambient> ambient;
  ProjectorSet projectors;
  std::vector<SummandRealization> summands;
  /// Every ordered pair at distance <= 1, in summand order.
  std::vector<HsdOperator> operators;
  /// Blocks between summands at distance >= 2 are zero.
  bool far_blocks_vanish = true;
  /// (id (x) d_x)^2 == -Delta on the whole ambient.
  bool dirac_squares_to_laplace = true;

  const SummandRealization& summand(const Weight& kappa) const;
  const HsdOperator& block(const Weight& target, const Weight& source) const;
  bool has_block(const Weight& target, const Weight& source) const;
};

GenericFamily generic_twistor_hsd(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

/// Cached per (lambda, m); safe for concurrent use.
std::shared_ptr<const GenericFamily> cached_family(const Weight& lambda, int m, std::size_t cap = kDefaultEliminationCap);

/// Explicit versus generic realization of R_lambda'.
struct RealizationComparison {
  Weight lambda;
  int m = 0;
  bool proportional = false;
  std::optional<GaussianRational> ratio;  ///< explicit = ratio * generic
  /// Degrees on which the materialized matrices were compared.
  std::vector<int> degrees;
  bool degree_independent = false;
};

RealizationComparison compare_realizations(const Weight& lambda, int m, const std::vector<int>& degrees,
                                           std::size_t cap = kDefaultEliminationCap);

struct IdentityCheck {
  std::string identity;  ///< "laplace-split", "anticommute", "square-cancel", "dirac-square", "far-blocks", "kernel-transfer"
  std::string description;
  int degree = -1;  ///< -1 for the symbol-level check
  bool pass = false;
};

struct IdentityReport {
  Weight lambda;
  int m = 0;
  int max_degree = 0;
  std::vector<Weight> summands;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

/// Quadratic relations among the blocks of the twisted Dirac operator on
/// V_lambda (x) S, as operators and on every x-degree up to max_degree.
IdentityReport verify_identities(const Weight& lambda, int m, int max_degree, std::size_t cap = kDefaultEliminationCap);

/// Null space of op on degree-h polynomials as explicit polynomials.
std::vector<SpinorPoly> kernel_basis(const HsdOperator& op, int h, std::size_t cap = kDefaultEliminationCap);

/// x^alpha * f.
SpinorPoly times_x_monomial(const MultiIndex& alpha, const SpinorPoly& f);

/// The same polynomial with extra (zero-degree) dummy blocks appended.
SpinorPoly with_blocks(const SpinorPoly& f, int k);

/// x-monogenic and u-monogenic polynomials of bidegree (h, k), k >= 0.
std::vector<SpinorPoly> double_monogenic_basis(int m, int h, int k, std::size_t cap = kDefaultEliminationCap);

/// The unique f of bidegree (h, k) solving d_x f = u g and d_u f = 0 that is Fischer
/// orthogonal to M_{h,k}. g has one dummy block. Throws std::invalid_argument
/// when g is not in ker_{h-1} R_{k-1} and std::runtime_error when the system is
/// inconsistent or underdetermined.
SpinorPoly twistor_inversion(const SpinorPoly& g, int h, int k, int m);

/// Minimal p with Delta^p f = 0; zero has order 1. nullopt when the bounded
/// search up to ceil(deg/2) + 1 fails.
std::optional<int> polyharmonic_order(const SpinorPoly& f);

struct InductionReport {
  int k = 0;
  int h = 0;
  int m = 0;
  std::size_t kernel_dim = 0;
  std::size_t monogenic_dim = 0;
  std::size_t lower_kernel_dim = 0;
  std::size_t inversions = 0;
  bool inversions_ok = true;       ///< every inverse lies in ker_h R_k
  bool spans_kernel = true;        ///< M_{h,k} + inverses has full rank
  std::vector<std::string> errors;
  bool dims_match() const { return kernel_dim == monogenic_dim + lower_kernel_dim; }
  bool pass() const { return dims_match() && inversions_ok && spans_kernel && errors.empty(); }
};

InductionReport verify_induction_dims(int k, int h, int m, std::size_t cap = kDefaultEliminationCap);

struct CorollaryReport {
  Weight lambda;
  int m = 0;
  int h = 0;
  std::size_t kernel_dim = 0;
  int bound = 0;        ///< lambda_1 + 1
  int max_order = 0;    ///< largest polyharmonic order seen
  bool bound_holds = true;
  bool sharp = false;   ///< some element needs exactly the bound
  bool pass() const { return bound_holds; }
};

/// Polyharmonic orders over ker_h R_lambda for an explicit shape.
CorollaryReport verify_corollary(const Weight& lambda, int m, int h, std::size_t cap = kDefaultEliminationCap);

/// Solves J G_ab^from = G_ab^to J for the realizations of one summand in two
/// ambients. The solution is unique up to scale; its first nonzero entry is 1.
linalg::Matrix intertwiner(const SummandRealization& from, const SummandRealization& to);

/// Operators in the canonical realization of each summand, namely as the top
/// summand of its own ambient.
class CanonicalOperators {
 public:
  CanonicalOperators(int m, std::size_t cap);

  std::size_t dimension(const Weight& kappa);
  DiffOp hsd(const Weight& kappa);
  DiffOp twistor(const Weight& target, const Weight& source);
  DiffOp laplace(const Weight& kappa, int power);
  /// Twistor chain along a path, applied from its first node.
  DiffOp path(const Path& path);

 private:
  std::shared_ptr<const GenericFamily> family(const Weight& kappa);
  const linalg::Matrix& transfer(const Weight& kappa, const Weight& from_ambient, const Weight& to_ambient);

  int m_;
  std::size_t cap_;
  std::map<std::pair<Weight, std::pair<Weight, Weight>>, linalg::Matrix> transfers_;
};

struct NumericTerm {
  Weight lambda;  ///< primed
  int laplace_power = 0;
  Rational symbolic;
  std::optional<GaussianRational> numeric;
  std::optional<GaussianRational> ratio;  ///< numeric / symbolic
};

struct DegreeCheck {
  int degree = 0;
  bool pass = false;
};

struct FactorizationReport {
  Weight mu;
  int power = 0;
  int m = 0;
  std::vector<NumericTerm> terms;
  bool residual_empty = false;
  bool solved = false;  ///< the normalization scalars were uniquely determined
  int solve_degree = 0;
  std::vector<DegreeCheck> checks;
  bool symbol_equal = false;  ///< sum c X == Delta^p as operators
  std::string failure;
  bool pass() const;
};

/// Delta^p = R_mu (sum_lambda c P Delta^e P) R_mu on S_mu-valued polynomials.
/// The scalars are solved on degrees.front() and checked on every degree.
/// Throws std::invalid_argument if p <= mu_1 or some degree is below 2p.
FactorizationReport verify_factorization_numeric(const Weight& mu, int power, int m, const std::vector<int>& degrees,
                                                 std::size_t cap = kDefaultEliminationCap);

}  // namespace hsfact
