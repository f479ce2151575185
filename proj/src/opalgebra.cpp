#include "hsfact/opalgebra.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hsfact {

namespace {

Weight label(const Weight& w) { return w.primed(); }

OperatorSymbol twistor_symbol(const Weight& target, const Weight& source) {
  return {SymbolKind::twistor, label(target), label(source)};
}
OperatorSymbol hsd_symbol(const Weight& at) { return {SymbolKind::hsd, label(at), label(at)}; }
OperatorSymbol laplace_symbol(const Weight& at) { return {SymbolKind::laplace, label(at), label(at)}; }

bool symbol_dominant(const OperatorSymbol& s) { return is_dominant(s.target) && is_dominant(s.source); }

struct Step {
  std::size_t coord;
  int dir;  // +1 up, -1 down
};

// Coordinate at which two adjacent weights differ, and the direction from a to b.
Step step_between(const Weight& from, const Weight& to) {
  if (from.rank() != to.rank() || manhattan_distance(from, to) != 1)
    throw std::invalid_argument("twistor endpoints " + to.to_string() + " <- " + from.to_string() +
                                " are not at distance 1");
  for (std::size_t i = 0; i < from.rank(); ++i)
    if (from[i] != to[i]) return {i, to[i] > from[i] ? 1 : -1};
  throw std::logic_error("unreachable");
}

Weight apply_step(const Weight& w, const Step& s) { return s.dir > 0 ? w.plus_unit(s.coord) : w.minus_unit(s.coord); }

// Sign attached to the edge between w and w +- e_c, keyed by its lower endpoint.
int edge_sign(const Weight& from, const Step& s) {
  const Weight lower = s.dir > 0 ? from : apply_step(from, s);
  return normalization_sign(lower, s.coord);
}

// Does some interleaving of the per-coordinate step sequences leave the
// dominant chamber? Every dominance condition couples at most two adjacent
// coordinates, and prefix counts of distinct coordinates are independent.
bool chain_vanishes(const Weight& start, const std::vector<Step>& steps) {
  const std::size_t n = start.rank();
  std::vector<std::vector<int>> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i].push_back(start[i]);
  for (const auto& s : steps) values[s.coord].push_back(values[s.coord].back() + s.dir);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (int a : values[i])
      for (int b : values[i + 1])
        if (a < b) return true;
  for (int v : values[n - 1])
    if (v < 0) return true;
  return false;
}

std::string kind_prefix(SymbolKind k) {
  switch (k) {
    case SymbolKind::twistor: return "T";
    case SymbolKind::hsd: return "R";
    case SymbolKind::laplace: return "Lap";
  }
  return "?";
}

// The word with symbols [begin, end) of w.
OperatorWord slice(const OperatorWord& w, std::size_t begin, std::size_t end) {
  if (begin == end) {
    const Weight at = begin < w.symbols.size() ? w.symbols[begin].target : w.source;
    return OperatorWord::identity(at);
  }
  return OperatorWord::from_symbols({w.symbols.begin() + static_cast<long>(begin), w.symbols.begin() + static_cast<long>(end)});
}

// Factor f with normal_form(e) == f * normal_form(reference); reference is a
// nonzero single word.
Rational relative_factor(const OperatorExpr& e, const OperatorExpr& reference) {
  const OperatorExpr ne = normal_form(e);
  if (ne.is_zero()) return 0;
  const OperatorExpr nr = normal_form(reference);
  if (nr.size() != 1 || ne.size() != 1 || ne.terms().begin()->first != nr.terms().begin()->first)
    throw std::logic_error("normal forms are not proportional: " + ne.to_string() + " vs " + nr.to_string());
  return ne.terms().begin()->second / nr.terms().begin()->second;
}

}  // namespace

std::string OperatorSymbol::to_string() const {
  if (kind == SymbolKind::twistor) return "T[" + target.to_string() + "<-" + source.to_string() + "]";
  return kind_prefix(kind) + "[" + target.to_string() + "]";
}

OperatorWord OperatorWord::identity(const Weight& at) {
  OperatorWord w;
  w.source = label(at);
  w.target = label(at);
  return w;
}

OperatorWord OperatorWord::from_symbols(std::vector<OperatorSymbol> symbols) {
  if (symbols.empty()) throw std::invalid_argument("from_symbols: use identity() for the empty word");
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i)
    if (symbols[i].source != symbols[i + 1].target)
      throw std::invalid_argument("word not composable at " + symbols[i].to_string() + " " + symbols[i + 1].to_string());
  OperatorWord w;
  w.target = symbols.front().target;
  w.source = symbols.back().source;
  w.symbols = std::move(symbols);
  return w;
}

std::string OperatorWord::to_string() const {
  if (symbols.empty()) return "Id[" + source.to_string() + "]";
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) s += (i ? " " : "") + symbols[i].to_string();
  return s;
}

OperatorExpr::OperatorExpr(Weight source, Weight target) : source_(label(source)), target_(label(target)) {}

OperatorExpr::OperatorExpr(const OperatorWord& word, const Rational& coefficient)
    : source_(word.source), target_(word.target) {
  add_term(word, coefficient);
}

void OperatorExpr::require_endpoints(const Weight& source, const Weight& target) const {
  if (source != source_ || target != target_)
    throw std::invalid_argument("endpoint mismatch: " + target.to_string() + "<-" + source.to_string() + " vs " +
                                target_.to_string() + "<-" + source_.to_string());
}

void OperatorExpr::add_term(const OperatorWord& word, const Rational& coefficient) {
  if (source_.rank() == 0 && terms_.empty()) {
    source_ = word.source;
    target_ = word.target;
  }
  require_endpoints(word.source, word.target);
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  if (source_.rank() == 0 && terms_.empty()) {
    source_ = o.source_;
    target_ = o.target_;
  }
  if (o.source_.rank() != 0) require_endpoints(o.source_, o.target_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) { return *this += o * Rational(-1); }

OperatorExpr& OperatorExpr::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.source_ != b.target_)
    throw std::invalid_argument("cannot compose " + a.source_.to_string() + " with " + b.target_.to_string());
  OperatorExpr out(b.source_, a.target_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      std::vector<OperatorSymbol> symbols = wa.symbols;
      symbols.insert(symbols.end(), wb.symbols.begin(), wb.symbols.end());
      const OperatorWord w = symbols.empty() ? OperatorWord::identity(b.source_) : OperatorWord::from_symbols(std::move(symbols));
      out.add_term(w, ca * cb);
    }
  return out;
}

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += hsfact::to_string(c) + " * " + w.to_string();
  }
  return s;
}

OperatorExpr make_twistor(const Weight& target, const Weight& source) {
  if (target.rank() != source.rank()) throw std::invalid_argument("make_twistor: rank mismatch");
  step_between(source, target);
  const OperatorSymbol s = twistor_symbol(target, source);
  if (!symbol_dominant(s)) return OperatorExpr(source, target);
  return OperatorExpr(OperatorWord::from_symbols({s}));
}

OperatorExpr make_hsd(const Weight& at) {
  if (!is_dominant(at)) return OperatorExpr(at, at);
  return OperatorExpr(OperatorWord::from_symbols({hsd_symbol(at)}));
}

OperatorExpr make_laplace(const Weight& at, int power) {
  if (power < 0) throw std::invalid_argument("make_laplace: negative power");
  if (!is_dominant(at)) return OperatorExpr(at, at);
  if (power == 0) return OperatorExpr::identity(at);
  return OperatorExpr(OperatorWord::from_symbols(std::vector<OperatorSymbol>(static_cast<std::size_t>(power), laplace_symbol(at))));
}

int normalization_sign(const Weight& mu, std::size_t p) {
  if (p >= mu.rank()) throw std::invalid_argument("normalization_sign: coordinate out of range");
  if (!is_dominant(mu) || !is_dominant(mu.plus_unit(p)))
    throw std::invalid_argument("normalization_sign: " + mu.to_string() + " + e_" + std::to_string(p + 1) +
                                " is not dominant");
  int sum = 0;
  for (std::size_t j = p + 1; j < mu.rank(); ++j) sum += mu[j];
  return sum % 2 == 0 ? 1 : -1;
}

OperatorExpr path_operator(const Path& path) {
  if (path.nodes.empty()) throw std::invalid_argument("path_operator: empty node list");
  if (path.length() == 0) return OperatorExpr::identity(path.start());
  for (const auto& n : path.nodes)
    if (!is_dominant(n)) return OperatorExpr(path.start(), path.end());
  std::vector<OperatorSymbol> symbols;
  for (std::size_t p = path.length(); p-- > 0;) {
    step_between(path.nodes[p], path.nodes[p + 1]);
    symbols.push_back(twistor_symbol(path.nodes[p + 1], path.nodes[p]));
  }
  return OperatorExpr(OperatorWord::from_symbols(std::move(symbols)));
}

OperatorExpr normal_form(const OperatorExpr& e, TwistorConvention convention) {
  OperatorExpr out(e.source(), e.target());
  for (const auto& [word, coefficient] : e.terms()) {
    if (!std::all_of(word.symbols.begin(), word.symbols.end(), symbol_dominant)) continue;
    Rational c = coefficient;
    std::size_t hsd_count = 0, laplace_count = 0;
    std::vector<Step> steps;  // application order
    for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it) {
      switch (it->kind) {
        case SymbolKind::twistor:
          steps.push_back(step_between(it->source, it->target));
          break;
        case SymbolKind::hsd: ++hsd_count; break;
        case SymbolKind::laplace: ++laplace_count; break;
      }
    }
    // Each HSD symbol moves to the source end, one sign per twistor crossed.
    {
      std::size_t t = 0;
      for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it) {
        if (it->kind == SymbolKind::twistor) ++t;
        if (it->kind == SymbolKind::hsd && t % 2 == 1) c = -c;
      }
    }
    const Weight start = word.source.integral_part();
    if (chain_vanishes(start, steps)) continue;

    // Stable bubble sort by coordinate; each adjacent exchange is one square cancellation.
    for (std::size_t pass = 0; pass < steps.size(); ++pass) {
      Weight node = start;
      for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
        if (steps[j].coord > steps[j + 1].coord) {
          const Step a = steps[j], b = steps[j + 1];
          if (convention == TwistorConvention::raw) {
            c = -c;
          } else {
            const Weight via_a = apply_step(node, a);
            const Weight via_b = apply_step(node, b);
            const int s = edge_sign(node, a) * edge_sign(via_a, b) * edge_sign(node, b) * edge_sign(via_b, a);
            if (s > 0) c = -c;
          }
          std::swap(steps[j], steps[j + 1]);
        }
        node = apply_step(node, steps[j]);
      }
    }

    std::vector<OperatorSymbol> symbols;
    std::vector<Weight> nodes{start};
    for (const auto& s : steps) nodes.push_back(apply_step(nodes.back(), s));
    for (std::size_t p = steps.size(); p-- > 0;) symbols.push_back(twistor_symbol(nodes[p + 1], nodes[p]));
    for (std::size_t r = 0; r < hsd_count; ++r) symbols.push_back(hsd_symbol(start));
    for (std::size_t r = 0; r < laplace_count; ++r) symbols.push_back(laplace_symbol(start));
    out.add_term(symbols.empty() ? OperatorWord::identity(start) : OperatorWord::from_symbols(std::move(symbols)), c);
  }
  return out;
}

OperatorExpr split_laplace(const Weight& kappa) {
  const Weight k = kappa.integral_part();
  OperatorExpr out = make_hsd(k) * make_hsd(k) * Rational(-1);
  for (std::size_t j = 0; j < k.rank(); ++j) {
    const Weight below = k.minus_unit(j);
    if (!is_dominant(below)) continue;
    out -= make_twistor(k, below) * make_twistor(below, k);
  }
  return out;
}

namespace {

// R_kappa^2 via the same identity, solved for the square.
OperatorExpr hsd_square(const Weight& kappa) {
  const Weight k = kappa.integral_part();
  OperatorExpr out = make_laplace(k) * Rational(-1);
  for (std::size_t j = 0; j < k.rank(); ++j) {
    const Weight below = k.minus_unit(j);
    if (!is_dominant(below)) continue;
    out -= make_twistor(k, below) * make_twistor(below, k);
  }
  return out;
}

// Moves the two HSD symbols of a word next to each other (anticommuting past
// twistors, freely past Laplace symbols) and replaces their product by
// the Laplace splitting at the meeting weight.
OperatorExpr collapse_hsd_pair(const OperatorWord& word, const Rational& coefficient) {
  std::vector<std::size_t> hsd_pos;
  for (std::size_t i = 0; i < word.symbols.size(); ++i)
    if (word.symbols[i].kind == SymbolKind::hsd) hsd_pos.push_back(i);
  if (hsd_pos.size() != 2) throw std::logic_error("collapse_hsd_pair: expected two HSD symbols");

  std::vector<OperatorSymbol> rest;
  for (std::size_t i = 0; i < word.symbols.size(); ++i)
    if (i != hsd_pos[0] && i != hsd_pos[1]) rest.push_back(word.symbols[i]);

  // The left R slides right over the raising twistors that follow it (the
  // path up to mu); the right R slides left over everything else between them.
  auto raising = [](const OperatorSymbol& s) {
    return s.kind == SymbolKind::twistor && step_between(s.source, s.target).dir > 0;
  };
  std::size_t split = hsd_pos[0];
  while (split + 1 < hsd_pos[1] && raising(word.symbols[split + 1])) ++split;
  Rational c = coefficient;
  for (std::size_t i = hsd_pos[0] + 1; i < hsd_pos[1]; ++i)
    if (word.symbols[i].kind == SymbolKind::twistor) c = -c;

  const Weight at = split < rest.size() ? rest[split].target : word.source;
  if (rest.empty()) return hsd_square(at) * c;
  const OperatorWord whole = OperatorWord::from_symbols(rest);
  return OperatorExpr(slice(whole, 0, split)) * hsd_square(at) * OperatorExpr(slice(whole, split, rest.size())) * c;
}

}  // namespace

PathIndependenceReport verify_path_independence(const Weight& nu, const Weight& mu, std::size_t cap,
                                                TwistorConvention convention) {
  PathIndependenceReport r;
  r.nu = nu;
  r.mu = mu;
  PathEnumeration en = enumerate_paths(nu, mu, cap);
  r.paths = std::move(en.paths);
  r.truncated = en.truncated;
  r.pass = true;
  for (const auto& p : r.paths) {
    r.forward_forms.push_back(normal_form(path_operator(p), convention));
    r.reverse_forms.push_back(normal_form(path_operator(reversed(p)), convention));
    if (r.forward_forms.back() != r.forward_forms.front()) r.pass = false;
    if (r.reverse_forms.back() != r.reverse_forms.front()) r.pass = false;
  }
  if (r.paths.empty()) r.pass = false;
  return r;
}

VanishingTrace vanish_outside_box(const Weight& mu, const Weight& lambda) {
  if (mu.spin_shift || lambda.spin_shift) throw std::invalid_argument("vanish_outside_box: integral weights expected");
  if (!is_dominant(mu) || !is_dominant(lambda))
    throw std::invalid_argument("vanish_outside_box: dominant weights expected");
  if (!bruhat_leq(lambda, mu))
    throw std::invalid_argument("vanish_outside_box: " + lambda.to_string() + " is not below " + mu.to_string());
  if (in_box(mu, lambda))
    throw std::invalid_argument("vanish_outside_box: " + lambda.to_string() + " lies in the box of " + mu.to_string());

  const std::size_t n = mu.rank();
  auto mu_at = [&](std::size_t j) { return j < n ? mu[j] : 0; };
  std::size_t first = 0;
  while (!(lambda[first] < mu_at(first + 1))) ++first;
  std::size_t i = first;
  while (mu_at(i + 1) == mu_at(i + 2)) ++i;
  const int v = mu_at(i + 1);

  VanishingTrace t;
  t.mu = mu;
  t.lambda = lambda;
  t.index = i;
  t.lower = lambda;
  for (std::size_t j = first; j < i; ++j) t.lower.entries[j] = v;
  t.lower.entries[i] = v - 1;
  t.lower.entries[i + 1] = v - 1;
  t.middle = t.lower.plus_unit(i);
  t.upper = t.middle.plus_unit(i + 1);
  t.alternate = t.lower.plus_unit(i + 1).primed();

  Path route = canonical_path(lambda, t.lower);
  route.nodes.push_back(t.middle);
  route.changes.push_back(i);
  route.nodes.push_back(t.upper);
  route.changes.push_back(i + 1);
  const Path tail = canonical_path(t.upper, mu);
  for (std::size_t p = 0; p < tail.length(); ++p) {
    route.nodes.push_back(tail.nodes[p + 1]);
    route.changes.push_back(tail.changes[p]);
  }
  t.route = route;

  const std::string ip = std::to_string(i + 1), iq = std::to_string(i + 2);
  t.steps.push_back("index i=" + ip + ": lambda_" + ip + "=" + std::to_string(lambda[i]) + " < mu_" + iq + "=" +
                    std::to_string(v));
  t.steps.push_back("route " + lambda.to_string() + " -> " + t.lower.to_string() + " -> " + t.middle.to_string() +
                    " -> " + t.upper.to_string() + " -> " + mu.to_string());
  t.steps.push_back("T[" + t.upper.primed().to_string() + "<-" + t.middle.primed().to_string() + "] T[" +
                    t.middle.primed().to_string() + "<-" + t.lower.primed().to_string() + "] = -/+ T[" +
                    t.upper.primed().to_string() + "<-" + t.alternate.to_string() + "] T[" + t.alternate.to_string() +
                    "<-" + t.lower.primed().to_string() + "]");
  t.steps.push_back(t.alternate.to_string() + " is not dominant, so the right side is zero");
  t.steps.push_back("reverse orientation: T[" + t.lower.primed().to_string() + "<-" + t.middle.primed().to_string() +
                    "] T[" + t.middle.primed().to_string() + "<-" + t.upper.primed().to_string() +
                    "] vanishes through the same intermediate");

  // The engine reaches the same conclusion on the full path operators.
  t.forward_form = normal_form(path_operator(route));
  t.reverse_form = normal_form(path_operator(reversed(route)));
  if (!t.forward_form.is_zero() || !t.reverse_form.is_zero())
    throw std::logic_error("vanish_outside_box: rewriting did not annihilate the path operator");
  return t;
}

std::map<Weight, Rational> FactorizationCertificate::coefficients() const {
  std::map<Weight, Rational> out;
  for (const auto& t : terms) out[t.lambda] = t.coefficient;
  return out;
}

OperatorExpr FactorizationCertificate::assembled() const {
  OperatorExpr out = make_hsd(mu) * middle * make_hsd(mu);
  if (!residual.is_zero()) out += residual;
  return out;
}

FactorizationCertificate expand_laplace_power(const Weight& mu, int power) {
  if (mu.spin_shift || !is_dominant(mu)) throw std::invalid_argument("expand_laplace_power: dominant integral weight expected");
  if (power < 1) throw std::invalid_argument("expand_laplace_power: power must be positive");

  FactorizationCertificate cert;
  cert.mu = mu;
  cert.power = power;
  cert.middle = OperatorExpr(mu, mu);
  cert.residual = OperatorExpr(mu, mu);

  auto up = [&](const Weight& lambda) { return path_operator(canonical_path(lambda, mu)); };
  auto down = [&](const Weight& lambda) { return path_operator(reversed(canonical_path(lambda, mu))); };

  std::map<Weight, Rational, std::greater<>> level;
  level[mu] = 1;
  for (int d = 0; d <= power && !level.empty(); ++d) {
    const int e = power - d;
    std::map<Weight, Rational, std::greater<>> next;
    for (const auto& [lambda, a] : level) {
      if (sgn(a) == 0) continue;
      cert.level_constants.emplace_back(lambda, a);
      if (e == 0) {
        cert.residual += up(lambda) * down(lambda) * a;
        continue;
      }
      // Delta_lambda = -R_lambda^2 - sum_j T T; the R^2 part slides out to R_mu on
      // both sides, one sign per twistor crossed on each side.
      const int crossed = manhattan_distance(mu, lambda);
      const int outward = (crossed % 2 == 0 ? 1 : -1) * (crossed % 2 == 0 ? 1 : -1);
      const Rational c = -a * outward;
      cert.terms.push_back({lambda, c, e - 1});
      cert.middle += up(lambda) * make_laplace(lambda, e - 1) * down(lambda) * c;
      for (std::size_t j = 0; j < lambda.rank(); ++j) {
        const Weight below = lambda.minus_unit(j);
        if (!is_dominant(below)) continue;
        const Rational fu = relative_factor(up(lambda) * make_twistor(lambda, below), up(below));
        if (sgn(fu) == 0) continue;
        const Rational fd = relative_factor(make_twistor(below, lambda) * down(lambda), down(below));
        if (sgn(fd) == 0) continue;
        next[below] -= a * fu * fd;
      }
    }
    level = std::move(next);
  }
  return cert;
}

OperatorExpr reexpand(const FactorizationCertificate& certificate) {
  const Weight& mu = certificate.mu;
  OperatorExpr out(mu, mu);
  out += certificate.residual;
  const OperatorExpr sandwich = make_hsd(mu) * certificate.middle * make_hsd(mu);
  for (const auto& [word, c] : sandwich.terms()) out += collapse_hsd_pair(word, c);
  return out;
}

bool certificate_reproduces_power(const FactorizationCertificate& certificate) {
  const OperatorExpr lhs = normal_form(make_laplace(certificate.mu, certificate.power));
  return normal_form(reexpand(certificate)) == lhs;
}

namespace {

std::vector<std::pair<Weight, Weight>> ordered_pairs(std::size_t max_rank, int max_entry) {
  std::vector<std::pair<Weight, Weight>> out;
  for (std::size_t r = 1; r <= max_rank; ++r) {
    const auto weights = dominant_weights(r, max_entry);
    for (const auto& mu : weights)
      for (const auto& nu : weights)
        if (bruhat_leq(nu, mu)) out.emplace_back(nu, mu);
  }
  return out;
}

}  // namespace

RangeSweep sweep_path_independence(std::size_t max_rank, int max_entry, std::size_t cap) {
  const auto pairs = ordered_pairs(max_rank, max_entry);
  std::vector<std::string> failure(pairs.size());
  std::vector<std::size_t> counts(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& [nu, mu] = pairs[static_cast<std::size_t>(i)];
    try {
      const auto rep = verify_path_independence(nu, mu, cap);
      counts[static_cast<std::size_t>(i)] = rep.paths.size();
      if (!rep.pass || rep.truncated)
        failure[static_cast<std::size_t>(i)] = nu.to_string() + " -> " + mu.to_string() + (rep.truncated ? ": truncated" : ": path dependent");
    } catch (const std::exception& e) {
      failure[static_cast<std::size_t>(i)] = nu.to_string() + " -> " + mu.to_string() + ": " + e.what();
    }
  }
  RangeSweep out;
  out.pairs = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.paths += counts[i];
    if (!failure[i].empty()) out.failures.push_back(failure[i]);
  }
  return out;
}

RangeSweep sweep_box_vanishing(std::size_t max_rank, int max_entry) {
  const auto pairs = ordered_pairs(max_rank, max_entry);
  std::vector<std::string> failure(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& [lambda, mu] = pairs[static_cast<std::size_t>(i)];
    const std::string tag = lambda.to_string() + " in B(" + mu.to_string() + ")";
    try {
      const Path up = canonical_path(lambda, mu);
      const bool up_zero = normal_form(path_operator(up)).is_zero();
      const bool down_zero = normal_form(path_operator(reversed(up))).is_zero();
      if (in_box(mu, lambda)) {
        if (up_zero || down_zero) failure[static_cast<std::size_t>(i)] = tag + ": path operator vanishes";
      } else if (!up_zero || !down_zero) {
        failure[static_cast<std::size_t>(i)] = "not " + tag + ": path operator survives";
      } else {
        vanish_outside_box(mu, lambda);
      }
    } catch (const std::exception& e) {
      failure[static_cast<std::size_t>(i)] = tag + ": " + e.what();
    }
  }
  RangeSweep out;
  out.pairs = pairs.size();
  out.paths = 2 * pairs.size();
  for (const auto& f : failure)
    if (!f.empty()) out.failures.push_back(f);
  return out;
}

}  // namespace hsfact
