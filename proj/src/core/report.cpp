#include "core/report.hpp"

#include <sstream>

#include <json.hpp>

namespace jbv {

std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "check=" << c.name << " status=" << (c.pass ? "pass" : "fail");
    if (c.seed != 0) os << " seed=" << c.seed;
    if (c.trial >= 0) os << " trial=" << c.trial;
    if (!c.residual.empty()) os << " residual=" << c.residual;
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json rec;
    rec["name"] = c.name;
    rec["status"] = c.pass ? "pass" : "fail";
    rec["residual_pretty"] = c.residual;
    rec["seed"] = c.seed;
    rec["trial"] = c.trial;
    arr.push_back(rec);
  }
  return arr.dump(2) + "\n";
}

} // namespace jbv
