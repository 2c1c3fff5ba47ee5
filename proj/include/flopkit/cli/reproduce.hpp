#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flopkit/cli/report.hpp"

namespace flopkit {

struct ReproduceOptions {
  std::uint64_t seed = 1;
  int bits = kDefaultPrecisionBits;
  int instances = 20;          // instance seeds seed, ..., seed + instances - 1
  std::vector<int> criteria;   // empty: all twelve
};

struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::vector<Check> checks;
  Json data = Json::object();
  double seconds = 0;
  double slowest_unit = 0;               // per-instance maximum where the budget is per instance
  std::optional<double> budget;          // seconds, for the whole suite or per instance
  bool budget_per_unit = false;

  Check& check(std::string name, bool pass, std::string detail = {});
  bool pass() const;
  bool within_budget() const;
};

inline constexpr int kCriteria = 12;
std::string criterion_name(int criterion);

/// Runs one criterion; exceptions become failed checks.
SuiteResult run_criterion(int criterion, const ReproduceOptions& opts);

/// Runs the selected criteria in order. Criterion 12 reruns 1-11 and compares the serialized
/// results byte for byte.
std::vector<SuiteResult> run_suites(const ReproduceOptions& opts);

/// Timing-free JSON of suite results, the object compared for determinism.
Json suites_json(const std::vector<SuiteResult>& suites);

RunReport reproduce(const ReproduceOptions& opts);

}  // namespace flopkit
