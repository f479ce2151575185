#include "hsfact/report.hpp"

#include <algorithm>
#include <sstream>

namespace hsfact {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

Json Report::to_json(bool with_timing) const {
  Json out;
  out["command"] = command;
  out["parameters"] = parameters;
  out["results"] = results;
  Json list = Json::array();
  for (const auto& [name, ok] : checks) list.push_back({{"name", name}, {"pass", ok}});
  out["checks"] = list;
  out["status"] = pass() ? "pass" : "fail";
  if (with_timing) out["timing"] = {{"wall_seconds", wall_seconds}};
  return out;
}

std::string Report::to_table() const {
  const Json j = to_json();
  std::ostringstream os;
  os << j["command"].get<std::string>() << ": " << j["status"].get<std::string>() << "\n";
  std::size_t failed = 0;
  for (const auto& c : j["checks"])
    if (!c["pass"].get<bool>()) {
      ++failed;
      if (failed <= 20) os << "  FAIL " << c["name"].get<std::string>() << "\n";
    }
  os << "  checks: " << j["checks"].size() << ", failed: " << failed << "\n";
  return os.str();
}

Json to_json(const Weight& w) { return {{"entries", w.entries}, {"spin", w.spin_shift}}; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GaussianRational& z) { return to_string(z); }

Json to_json(const Path& p) {
  Json nodes = Json::array();
  for (const auto& n : p.nodes) nodes.push_back(to_json(n));
  return {{"nodes", nodes},
          {"changes", p.changes},
          {"direction", p.direction == PathDirection::forward ? "forward" : "reverse"}};
}

Json to_json(const OperatorExpr& e) {
  Json terms = Json::array();
  for (const auto& [word, c] : e.terms()) terms.push_back({{"word", word.to_string()}, {"coefficient", to_string(c)}});
  return {{"source", to_json(e.source())}, {"target", to_json(e.target())}, {"terms", terms}};
}

Json to_json(const FactorizationCertificate& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms)
    terms.push_back({{"lambda", to_json(t.lambda)}, {"coefficient", to_json(t.coefficient)}, {"laplace_power", t.laplace_power}});
  return {{"mu", to_json(c.mu)},
          {"power", c.power},
          {"coefficients", terms},
          {"middle", to_json(c.middle)},
          {"residual", to_json(c.residual)},
          {"residual_empty", c.residual.is_zero()}};
}

Json to_json(const VanishingTrace& t) {
  return {{"mu", to_json(t.mu)},
          {"lambda", to_json(t.lambda)},
          {"index", t.index},
          {"lower", to_json(t.lower)},
          {"middle", to_json(t.middle)},
          {"upper", to_json(t.upper)},
          {"alternate", to_json(t.alternate)},
          {"route", to_json(t.route)},
          {"steps", t.steps}};
}

Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"identity", c.identity}, {"description", c.description}, {"degree", c.degree}, {"pass", c.pass}});
  Json summands = Json::array();
  for (const auto& s : r.summands) summands.push_back(to_json(s));
  return {{"lambda", to_json(r.lambda)}, {"m", r.m}, {"max_degree", r.max_degree}, {"summands", summands},
          {"checks", checks}, {"pass", r.pass()}};
}

Json to_json(const RealizationComparison& r) {
  return {{"lambda", to_json(r.lambda)},
          {"m", r.m},
          {"degrees", r.degrees},
          {"proportional", r.proportional},
          {"degree_independent", r.degree_independent},
          {"ratio", r.ratio ? to_json(*r.ratio) : Json(nullptr)}};
}

Json to_json(const FactorizationReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"lambda", to_json(t.lambda)},
                     {"laplace_power", t.laplace_power},
                     {"symbolic", to_json(t.symbolic)},
                     {"numeric", t.numeric ? to_json(*t.numeric) : Json(nullptr)},
                     {"ratio", t.ratio ? to_json(*t.ratio) : Json(nullptr)}});
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"degree", c.degree}, {"pass", c.pass}});
  return {{"mu", to_json(r.mu)},       {"power", r.power},         {"m", r.m},
          {"terms", terms},           {"residual_empty", r.residual_empty}, {"solved", r.solved},
          {"solve_degree", r.solve_degree}, {"degree_checks", checks}, {"symbol_equal", r.symbol_equal},
          {"failure", r.failure},     {"pass", r.pass()}};
}

Json to_json(const InductionReport& r) {
  return {{"k", r.k},
          {"h", r.h},
          {"m", r.m},
          {"kernel_dim", r.kernel_dim},
          {"monogenic_dim", r.monogenic_dim},
          {"lower_kernel_dim", r.lower_kernel_dim},
          {"inversions", r.inversions},
          {"inversions_ok", r.inversions_ok},
          {"spans_kernel", r.spans_kernel},
          {"errors", r.errors},
          {"pass", r.pass()}};
}

Json to_json(const CorollaryReport& r) {
  return {{"lambda", to_json(r.lambda)}, {"m", r.m},
          {"h", r.h},                    {"kernel_dim", r.kernel_dim},
          {"bound", r.bound},            {"max_order", r.max_order},
          {"bound_holds", r.bound_holds}, {"sharp", r.sharp}};
}

}  // namespace hsfact
