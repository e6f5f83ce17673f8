#include "counit/report.hpp"

#include <sstream>

#include <json.hpp>

namespace counit {

using json = nlohmann::ordered_json;

int exit_code_for(const Report& r) {
  bool any_budget = false, any_fail = false, any_input = false, any_inconclusive = false;
  for (const auto& res : r.results) {
    if (res.status == "fail" || res.status == "refuted") any_fail = true;
    if (res.status == "inconclusive") any_inconclusive = true;
    if (res.status == "error") {
      bool budget = false, input = false;
      for (const auto& [k, v] : res.details) {
        if (k == "error_code" && v == errc_name(errc::resource_budget_exceeded)) budget = true;
        if (k == "error_code" && v != errc_name(errc::resource_budget_exceeded)) input = true;
      }
      any_budget |= budget;
      any_input |= input;
    }
  }
  if (any_budget) return 4;
  if (any_input) return 3;
  if (any_fail) return 1;
  if (any_inconclusive) return 2;
  return 0;
}

std::string emit_report_json(const Report& r) {
  json j;
  j["version"] = r.tool_version + "+schema." + std::to_string(r.schema_version);
  j["config"] = json::parse(r.config.to_json());
  json results = json::array();
  for (const auto& res : r.results) {
    json e;
    e["name"] = res.name;
    e["status"] = res.status;
    for (const auto& [k, v] : res.details) e[k] = v;
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  json timings;
  for (const auto& [k, v] : r.timings) timings[k] = v;
  j["timings"] = std::move(timings);
  return j.dump(2) + "\n";
}

std::string emit_report_text(const Report& r) {
  std::ostringstream os;
  os << "counit-resolve " << r.tool_version << "\n";
  for (const auto& res : r.results) {
    os << "[" << res.status << "] " << res.name;
    for (const auto& [k, v] : res.details) os << "  " << k << "=" << v;
    os << "\n";
  }
  os << "exit code: " << exit_code_for(r) << "\n";
  return os.str();
}

std::string report_json_without_timings(const std::string& report_json) {
  json j = json::parse(report_json);
  j.erase("timings");
  return j.dump(2);
}

}  // namespace counit
