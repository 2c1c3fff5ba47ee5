#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flopkit/poly/serialize.hpp"

namespace flopkit {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Outcome of one command. Everything except the timings is a function of (command, seed, precision).
struct RunReport {
  std::string command;
  std::uint64_t seed = 1;
  int precision = kDefaultPrecisionBits;
  std::vector<Check> checks;
  std::map<std::string, double> timings;
  std::vector<std::string> artifacts;
  std::vector<std::string> text;  // human-readable lines, printed outside --json mode
  Json data = Json::object();

  Check& check(std::string name, bool pass, std::string detail = {});
  bool pass() const;
  int exit_code() const { return pass() ? 0 : 1; }
};

Json to_json(const Check& c);
Json to_json(const RunReport& r, bool with_timings = false);
/// Plain-text rendering: text lines, then one line per check, then the verdict.
std::string render_text(const RunReport& r);

/// Fixed-format scientific rendering used for residuals in reports.
std::string sci(const Real& x, int digits = 3);

}  // namespace flopkit
