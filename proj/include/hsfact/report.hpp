#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hsfact/hsd.hpp"
#include "hsfact/opalgebra.hpp"
#include "hsfact/scalar.hpp"
#include "hsfact/weights.hpp"

namespace hsfact {

using Json = nlohmann::json;

/// Output of one command: parameters, results and named pass/fail checks.
/// Everything except the timing object is deterministic.
struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::pair<std::string, bool>> checks;
  double wall_seconds = 0.0;

  void check(const std::string& name, bool pass) { checks.emplace_back(name, pass); }
  bool pass() const;
  Json to_json(bool with_timing = true) const;
  /// Short human-readable summary rendered from the JSON.
  std::string to_table() const;
};

Json to_json(const Weight& w);
Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const Path& p);
Json to_json(const OperatorExpr& e);

Json to_json(const FactorizationCertificate& c);
Json to_json(const VanishingTrace& t);
Json to_json(const IdentityReport& r);
Json to_json(const RealizationComparison& r);
Json to_json(const FactorizationReport& r);
Json to_json(const InductionReport& r);
Json to_json(const CorollaryReport& r);

}  // namespace hsfact
