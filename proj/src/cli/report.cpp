#include "flopkit/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace flopkit {

Check& RunReport::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
  return checks.back();
}

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json to_json(const Check& c) {
  Json j = {{"name", c.name}, {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const RunReport& r, bool with_timings) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j = {{"command", r.command}, {"seed", r.seed},  {"precision", r.precision},
            {"pass", r.pass()},     {"checks", checks}, {"data", r.data}};
  if (!r.artifacts.empty()) j["artifacts"] = r.artifacts;
  if (with_timings) j["timings"] = r.timings;
  return j;
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  for (const auto& line : r.text) os << line << '\n';
  for (const auto& c : r.checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  for (const auto& a : r.artifacts) os << "wrote " << a << '\n';
  os << r.command << ": " << (r.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string sci(const Real& x, int digits) { return x.str(digits, std::ios_base::scientific); }

}  // namespace flopkit
