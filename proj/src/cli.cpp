#include "hsfact/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hsfact/clifford.hpp"
#include "hsfact/errors.hpp"
#include "hsfact/hsd.hpp"
#include "hsfact/opalgebra.hpp"
#include "hsfact/report.hpp"
#include "hsfact/repthy.hpp"
#include "hsfact/weights.hpp"

namespace hsfact::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string command;
  std::string suite;
  std::optional<int> rank;
  int m = 3;
  std::string mu;
  std::string nu;
  std::optional<int> power;
  std::string degree;
  std::string json_path;
  std::size_t cap = kDefaultEliminationCap;
  int max_entry = 3;
  std::optional<int> k;
};

Weight weight_flag(const Options& o, const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required for " + o.command);
  Weight w;
  try {
    w = parse_weight(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (w.spin_shift) throw UsageError(flag + ": give the integral weight, not the primed one");
  if (o.rank) {
    if (*o.rank < 1 || static_cast<std::size_t>(*o.rank) < w.rank()) throw UsageError("--rank: smaller than the weight");
    w = pad_to_rank(w, static_cast<std::size_t>(*o.rank));
  }
  return w;
}

std::vector<int> degree_list(const std::string& text, std::vector<int> fallback) {
  if (text.empty()) return fallback;
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size() || out.back() < 0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--degree: bad degree '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--degree: empty list");
  return out;
}

int single_degree(const Options& o, int fallback) {
  const auto list = degree_list(o.degree, {fallback});
  if (list.size() != 1) throw UsageError("--degree: " + o.command + " takes one degree");
  return list.front();
}

void require_odd_m(const Options& o) {
  if (o.m < 3 || o.m % 2 == 0) throw UsageError("--m: odd dimension >= 3 required");
}

Json weight_list(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

void cmd_box(const Options& o, Report& r) {
  const Weight mu = weight_flag(o, o.mu, "--mu");
  const auto weights = box(mu);
  r.parameters["mu"] = to_json(mu);
  r.results["weights"] = weight_list(weights);
  r.results["count"] = weights.size();
}

void cmd_paths(const Options& o, Report& r) {
  const Weight mu = weight_flag(o, o.mu, "--mu");
  const Weight nu = o.nu.empty() ? zero_weight(mu.rank()) : weight_flag(o, o.nu, "--nu");
  r.parameters["mu"] = to_json(mu);
  r.parameters["nu"] = to_json(nu);
  r.parameters["cap"] = o.cap;
  const auto rep = verify_path_independence(nu, mu, o.cap);
  Json paths = Json::array();
  for (std::size_t i = 0; i < rep.paths.size(); ++i)
    paths.push_back({{"path", to_json(rep.paths[i])},
                     {"forward", to_json(rep.forward_forms[i])},
                     {"reverse", to_json(rep.reverse_forms[i])}});
  r.results["paths"] = paths;
  r.results["count"] = rep.paths.size();
  r.results["truncated"] = rep.truncated;
  r.results["in_box"] = in_box(mu, nu);
  if (rep.truncated) throw ResourceLimitError("path enumeration exceeded cap " + std::to_string(o.cap));
  r.check("path-independence", rep.pass);
}

void cmd_factorize(const Options& o, Report& r) {
  const Weight mu = weight_flag(o, o.mu, "--mu");
  const int top = mu.rank() == 0 ? 0 : mu[0];
  const int p = o.power.value_or(top + 1);
  r.parameters["mu"] = to_json(mu);
  r.parameters["power"] = p;
  const auto cert = expand_laplace_power(mu, p);
  r.results["certificate"] = to_json(cert);
  bool support = true;
  for (const auto& t : cert.terms) support = support && in_box(mu, t.lambda);
  r.results["support_in_box"] = support;
  r.check("reproduces-power", certificate_reproduces_power(cert));
  if (p > top) {
    r.check("residual-empty", cert.residual.is_zero());
    r.check("support-in-box", support);
  }
}

void cmd_dims(const Options& o, Report& r) {
  require_odd_m(o);
  const Weight lambda = weight_flag(o, o.mu, "--mu");
  r.parameters["mu"] = to_json(lambda);
  r.parameters["m"] = o.m;
  r.parameters["cap"] = o.cap;
  const auto mono = simplicial_monogenic_basis(lambda, o.m, o.cap);
  const auto weyl = weyl_dim(lambda.primed(), o.m);
  r.results["label"] = to_json(mono.label);
  r.results["monogenic_dim"] = mono.dimension();
  r.results["weyl_dim"] = weyl;
  r.check("monogenic-equals-weyl", mono.dimension() == weyl);

  const GammaRep& rep = cached_gamma_rep(o.m);
  r.check("gamma-relations", check_gamma_relations(rep));
  r.check("spin-brackets", check_spin_brackets(spin_generators(rep)));

  const auto ambient = cached_ambient(lambda, o.m, o.cap);
  const auto set = casimir_projectors(*ambient);
  const auto pc = check_projectors(*ambient, set);
  Json summands = Json::array();
  std::size_t total = 0;
  bool ranks = true;
  for (const auto& e : set.entries) {
    const std::size_t rk = linalg::rank(e.projector);
    const auto wd = weyl_dim(e.kappa, o.m);
    total += rk;
    ranks = ranks && rk == wd;
    summands.push_back({{"kappa", to_json(e.kappa)}, {"eigenvalue", to_json(e.eigenvalue)}, {"rank", rk}, {"weyl_dim", wd}});
  }
  r.results["ambient_dim"] = ambient->dimension();
  r.results["summands"] = summands;
  r.check("projectors-idempotent", pc.idempotent);
  r.check("projectors-orthogonal", pc.orthogonal);
  r.check("projectors-complete", pc.complete);
  r.check("casimir-invariant", pc.casimir_invariant);
  r.check("summand-ranks", ranks && total == ambient->dimension());
}

void cmd_kernel(const Options& o, Report& r) {
  require_odd_m(o);
  const Weight lambda = weight_flag(o, o.mu, "--mu");
  const int h = single_degree(o, 2);
  r.parameters["mu"] = to_json(lambda);
  r.parameters["m"] = o.m;
  r.parameters["degree"] = h;
  r.parameters["cap"] = o.cap;
  const auto op = explicit_hsd(lambda, o.m, o.cap);
  const auto kernel = kernel_basis(op, h, o.cap);
  const int bound = (lambda.rank() == 0 ? 0 : lambda[0]) + 1;
  Json orders = Json::array();
  bool ok = true;
  for (const auto& f : kernel) {
    const auto p = polyharmonic_order(f);
    orders.push_back(p ? Json(*p) : Json(nullptr));
    ok = ok && p && *p <= bound;
  }
  r.results["operator"] = op.name();
  r.results["value_dim"] = op.source_basis->size();
  r.results["kernel_dim"] = kernel.size();
  r.results["polyharmonic_orders"] = orders;
  r.results["bound"] = bound;
  r.check("polyharmonic-bound", ok);
}

void verify_range(const Options& o, Report& r, bool paths) {
  const int rank = o.rank.value_or(3);
  if (rank < 1 || o.max_entry < 0) throw UsageError("--rank and --max-entry must be positive");
  r.parameters["rank"] = rank;
  r.parameters["max_entry"] = o.max_entry;
  const RangeSweep s = paths ? sweep_path_independence(static_cast<std::size_t>(rank), o.max_entry, o.cap)
                             : sweep_box_vanishing(static_cast<std::size_t>(rank), o.max_entry);
  r.results["pairs"] = s.pairs;
  r.results["paths"] = s.paths;
  r.results["failures"] = s.failures;
  r.check(paths ? "path-independence" : "box-vanishing", s.pass());
}

void verify_identities_suite(const Options& o, Report& r) {
  require_odd_m(o);
  const Weight lambda = weight_flag(o, o.mu, "--mu");
  const int max_degree = single_degree(o, 3);
  r.parameters["mu"] = to_json(lambda);
  r.parameters["m"] = o.m;
  r.parameters["degree"] = max_degree;
  const auto rep = verify_identities(lambda, o.m, max_degree, o.cap);
  r.results["identities"] = to_json(rep);
  for (const auto& c : rep.checks)
    r.check("identity-" + c.identity + " " + c.description + (c.degree < 0 ? "" : " @" + std::to_string(c.degree)), c.pass);
  bool has_formula = true;
  try {
    explicit_hsd_factors(lambda, o.m);
  } catch (const std::invalid_argument&) {
    has_formula = false;
  }
  if (has_formula) {
    std::vector<int> degrees;
    for (int h = 0; h <= max_degree; ++h) degrees.push_back(h);
    const auto cmp = compare_realizations(lambda, o.m, degrees, o.cap);
    r.results["explicit_vs_generic"] = to_json(cmp);
    r.check("explicit-proportional", cmp.proportional && cmp.degree_independent);
  }
}

void verify_theorem_suite(const Options& o, Report& r) {
  require_odd_m(o);
  const Weight mu = weight_flag(o, o.mu, "--mu");
  const int top = mu.rank() == 0 ? 0 : mu[0];
  const int p = o.power.value_or(top + 1);
  const auto degrees = degree_list(o.degree, {2 * p});
  r.parameters["mu"] = to_json(mu);
  r.parameters["m"] = o.m;
  r.parameters["power"] = p;
  r.parameters["degree"] = degrees;
  const auto rep = verify_factorization_numeric(mu, p, o.m, degrees, o.cap);
  r.results["theorem"] = to_json(rep);
  r.check("residual-empty", rep.residual_empty);
  r.check("scalars-determined", rep.solved);
  r.check("operator-identity", rep.symbol_equal);
  for (const auto& c : rep.checks) r.check("degree-" + std::to_string(c.degree), c.pass);
}

void verify_induction_suite(const Options& o, Report& r) {
  require_odd_m(o);
  const int kmax = o.k.value_or(2);
  const int hmax = single_degree(o, 3);
  if (kmax < 0) throw UsageError("--k must be non-negative");
  r.parameters["k"] = kmax;
  r.parameters["degree"] = hmax;
  r.parameters["m"] = o.m;
  Json cases = Json::array();
  for (int k = 0; k <= kmax; ++k)
    for (int h = 0; h <= hmax; ++h) {
      const auto rep = verify_induction_dims(k, h, o.m, o.cap);
      cases.push_back(to_json(rep));
      r.check("induction k=" + std::to_string(k) + " h=" + std::to_string(h), rep.pass());
    }
  r.results["cases"] = cases;
}

void verify_corollary_suite(const Options& o, Report& r) {
  require_odd_m(o);
  const Weight lambda = o.mu.empty() ? Weight({1}) : weight_flag(o, o.mu, "--mu");
  const int hmax = single_degree(o, 3);
  r.parameters["mu"] = to_json(lambda);
  r.parameters["m"] = o.m;
  r.parameters["degree"] = hmax;
  Json cases = Json::array();
  bool sharp = false;
  for (int h = 0; h <= hmax; ++h) {
    const auto rep = verify_corollary(lambda, o.m, h, o.cap);
    cases.push_back(to_json(rep));
    sharp = sharp || rep.sharp;
    r.check("bound h=" + std::to_string(h), rep.bound_holds);
  }
  r.results["cases"] = cases;
  r.results["sharp"] = sharp;
  r.check("bound-attained", sharp);
}

void dispatch(const Options& o, Report& r) {
  if (o.command == "box") return cmd_box(o, r);
  if (o.command == "paths") return cmd_paths(o, r);
  if (o.command == "factorize") return cmd_factorize(o, r);
  if (o.command == "dims") return cmd_dims(o, r);
  if (o.command == "kernel") return cmd_kernel(o, r);
  if (o.suite == "identities") return verify_identities_suite(o, r);
  if (o.suite == "path") return verify_range(o, r, true);
  if (o.suite == "box") return verify_range(o, r, false);
  if (o.suite == "theorem") return verify_theorem_suite(o, r);
  if (o.suite == "induction") return verify_induction_suite(o, r);
  if (o.suite == "corollary") return verify_corollary_suite(o, r);
  throw UsageError("unknown command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Factorization of Laplace powers through higher spin Dirac operators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rank", o.rank, "Rank n of the weights (pads --mu and --nu)");
  app.add_option("--m", o.m, "Odd dimension m = 2n+1")->capture_default_str();
  app.add_option("--mu", o.mu, "Weight, e.g. 2,1");
  app.add_option("--nu", o.nu, "Lower weight for paths (default 0)");
  app.add_option("--power", o.power, "Power of the Laplace operator");
  app.add_option("--degree", o.degree, "x-degree (a comma list for verify theorem)");
  app.add_option("--json", o.json_path, "Write the JSON report to this file");
  app.add_option("--cap", o.cap, "Size cap for exact eliminations and path enumeration")->capture_default_str();
  app.add_option("--max-entry", o.max_entry, "Largest weight entry for the path and box sweeps")->capture_default_str();
  app.add_option("--k", o.k, "Largest k for verify induction");

  app.add_subcommand("box", "Weights of the box B(mu)");
  app.add_subcommand("paths", "Dominant paths nu -> mu and their normal forms");
  app.add_subcommand("factorize", "Certificate for Delta_mu^p");
  app.add_subcommand("dims", "Dimensions, summands and projector checks for V_mu (x) S");
  app.add_subcommand("kernel", "Kernel of the explicit HSD operator on degree h");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "identities|path|box|theorem|induction|corollary")
      ->required()
      ->check(CLI::IsMember({"identities", "path", "box", "theorem", "induction", "corollary"}));

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  Report report;
  report.command = o.command == "verify" ? "verify " + o.suite : o.command;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(o, report);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.to_json().dump(2) + "\n";
  if (o.json_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.json_path);
    if (!file) {
      err << "--json: cannot open " << o.json_path << "\n";
      return kUsage;
    }
    file << text;
    out << report.to_table();
  }
  return report.pass() ? kOk : kVerificationFailed;
}

}  // namespace hsfact::cli
