// Check reports: named pass/fail records with pretty residuals, rendered as
// line-oriented key=value text or JSON.  Output is deterministic for a fixed
// seed so reports can be diffed.
#ifndef JBV_REPORT_HPP
#define JBV_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace jbv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string residual;   // empty when passing, unless informational
  uint64_t seed = 0;
  int trial = -1;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

} // namespace jbv

#endif
