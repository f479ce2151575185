#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hsfact/scalar.hpp"
#include "hsfact/weights.hpp"

namespace hsfact {

/// Formal invariant operators between spinor-valued function spaces.
///
/// twistor: T_{target <- source}, targets at Manhattan distance one.
/// hsd:     R_at, the higher spin Dirac operator.
/// laplace: Delta_at.
/// All labels are stored in primed (spin-shifted) form.
enum class SymbolKind { twistor, hsd, laplace };

struct OperatorSymbol {
  SymbolKind kind = SymbolKind::hsd;
  Weight target;
  Weight source;

  std::string to_string() const;
  friend auto operator<=>(const OperatorSymbol&, const OperatorSymbol&) = default;
};

/// A composable product; symbols[0] is applied last.
struct OperatorWord {
  std::vector<OperatorSymbol> symbols;
  Weight source;
  Weight target;

  static OperatorWord identity(const Weight& at);
  /// Validates the endpoint chain.
  static OperatorWord from_symbols(std::vector<OperatorSymbol> symbols);

  bool is_identity() const { return symbols.empty(); }
  std::string to_string() const;
  friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;
};

/// Exact rational combination of words sharing source and target.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  OperatorExpr(Weight source, Weight target);
  explicit OperatorExpr(const OperatorWord& word, const Rational& coefficient = 1);

  static OperatorExpr identity(const Weight& at) { return OperatorExpr(OperatorWord::identity(at)); }

  const Weight& source() const { return source_; }
  const Weight& target() const { return target_; }
  const std::map<OperatorWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const OperatorWord& word, const Rational& coefficient);

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const Rational& s);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const Rational& s) { return a *= s; }
  friend OperatorExpr operator*(const Rational& s, OperatorExpr a) { return a *= s; }
  /// Composition: (a * b) applies b first.
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  std::string to_string() const;

 private:
  void require_endpoints(const Weight& source, const Weight& target) const;

  Weight source_;
  Weight target_;
  std::map<OperatorWord, Rational> terms_;
};

/// Symbol constructors. A non-dominant label gives the zero expression.
/// Throws if twistor endpoints are not at distance one or ranks differ.
OperatorExpr make_twistor(const Weight& target, const Weight& source);
OperatorExpr make_hsd(const Weight& at);
OperatorExpr make_laplace(const Weight& at, int power = 1);

/// Sign s(mu,p) = (-1)^(mu_{p+1} + ... + mu_n) rescaling T_{mu+e_p <- mu} and
/// T_{mu <- mu+e_p}. p is 0-based.
int normalization_sign(const Weight& mu, std::size_t p);

/// How the twistor symbols in an expression are read.
///
/// raw: generators whose elementary squares cancel, so the two orders anticommute.
/// normalized: generators rescaled by normalization_sign; squares commute.
enum class TwistorConvention { normalized, raw };

/// Composition of twistor symbols along a path (forward or reverse).
OperatorExpr path_operator(const Path& path);

/// Confluent normal form: the twistor chain sorted by coordinate in
/// application order, followed by the HSD and Laplace symbols at the source.
/// Each HSD symbol picks up one sign per twistor it crosses. A chain that can
/// be rearranged through a non-dominant weight is zero.
OperatorExpr normal_form(const OperatorExpr& e, TwistorConvention convention = TwistorConvention::normalized);

/// The Laplace splitting at the top of V_kappa (x) S, solved for Delta:
///   Delta_kappa = -R_kappa^2 - sum_j T_{kappa <- kappa-e_j} T_{kappa-e_j <- kappa}.
OperatorExpr split_laplace(const Weight& kappa);

struct PathIndependenceReport {
  Weight nu;
  Weight mu;
  std::vector<Path> paths;
  std::vector<OperatorExpr> forward_forms;
  std::vector<OperatorExpr> reverse_forms;
  bool truncated = false;
  bool pass = false;
};

PathIndependenceReport verify_path_independence(const Weight& nu, const Weight& mu, std::size_t cap,
                                                TwistorConvention convention = TwistorConvention::normalized);

/// Rewrite trace showing why P_{mu<-lambda} and P_{lambda<-mu} vanish.
struct VanishingTrace {
  Weight mu;
  Weight lambda;
  std::size_t index = 0;  ///< 0-based i with lambda_i < mu_{i+1} > mu_{i+2}
  Weight lower;           ///< lambda_-
  Weight middle;          ///< lambda_0
  Weight upper;           ///< lambda_+
  Weight alternate;       ///< the non-dominant other intermediate of lambda_- -> lambda_+
  Path route;             ///< lambda -> lambda_- -> lambda_0 -> lambda_+ -> mu
  OperatorExpr forward_form;
  OperatorExpr reverse_form;
  std::vector<std::string> steps;
};

/// Throws std::invalid_argument when lambda is in B(mu) or not below mu.
VanishingTrace vanish_outside_box(const Weight& mu, const Weight& lambda);

struct CertificateTerm {
  Weight lambda;
  Rational coefficient;
  int laplace_power = 0;
};

/// Delta_mu^p = R_mu [ sum c(mu,lambda) P_{mu<-lambda} Delta^e P_{lambda<-mu} ] R_mu + residual
struct FactorizationCertificate {
  Weight mu;
  int power = 0;
  std::vector<CertificateTerm> terms;
  OperatorExpr middle;
  OperatorExpr residual;
  /// Coefficient of the pending P Delta^e P term at each visited lambda,
  /// i.e. the relative constants picked up while expanding.
  std::vector<std::pair<Weight, Rational>> level_constants;

  std::map<Weight, Rational> coefficients() const;
  /// R_mu * middle * R_mu + residual, before any normal form.
  OperatorExpr assembled() const;
};

FactorizationCertificate expand_laplace_power(const Weight& mu, int power);

/// Substitutes the Laplace splitting back into every sandwiched term of the
/// certificate. A sound certificate re-expands to Delta_mu^p.
OperatorExpr reexpand(const FactorizationCertificate& certificate);

/// normal_form(reexpand(c)) == normal_form(Delta_mu^p).
bool certificate_reproduces_power(const FactorizationCertificate& certificate);

/// Outcome of a check over every pair nu <= mu of dominant weights.
struct RangeSweep {
  std::size_t pairs = 0;
  std::size_t paths = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// Path independence for all pairs of rank 1..max_rank with entries <= max_entry.
/// Pairs are checked in parallel; failures are listed in pair order.
RangeSweep sweep_path_independence(std::size_t max_rank, int max_entry, std::size_t cap);

/// P_{mu<-lambda} and P_{lambda<-mu} are zero exactly when lambda is outside B(mu),
/// over the same range. Outside the box the vanishing trace must also be zero.
RangeSweep sweep_box_vanishing(std::size_t max_rank, int max_entry);

}  // namespace hsfact
