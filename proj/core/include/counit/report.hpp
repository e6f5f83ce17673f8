#pragma once

#include <string>
#include <vector>

#include "counit/config.hpp"

namespace counit {

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | certified | inconclusive | refuted | info | error
  std::vector<std::pair<std::string, std::string>> details;

  void add(const std::string& key, const std::string& value) { details.emplace_back(key, value); }
};

struct Report {
  std::string tool_version = "0.1.0";
  int schema_version = 1;
  RunConfig config;
  std::vector<CheckResult> results;
  std::vector<std::pair<std::string, double>> timings;
};

// Exit-code contract: 0 all pass/certified, 1 failed check, 2 inconclusive
// only, 3 input error, 4 budget exceeded.
int exit_code_for(const Report& r);

std::string emit_report_json(const Report& r);
std::string emit_report_text(const Report& r);

// JSON with the timings object removed; the determinism contract compares this.
std::string report_json_without_timings(const std::string& report_json);

}  // namespace counit
