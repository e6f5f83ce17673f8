#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "counit/cache.hpp"
#include "counit/commands.hpp"

using namespace counit;

int main(int argc, char** argv) {
  CLI::App app{"counit-resolve: exact homological computations for the Hopf algebra B(E)"};
  app.require_subcommand(1);

  std::string config_path, json_path, cache_dir = default_cache_dir();
  int degree = -1, slack = -1, position = -2, k_max = -1;
  long budget_mb = -1;

  std::vector<std::string> commands = {"gb",        "verify-hopf",
                                       "resolution", "exactness",
                                       "homology",   "ext",
                                       "poincare",   "bialgebra-cohomology",
                                       "cogroupoid", "transport",
                                       "oracle"};
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* s = app.add_subcommand(c);
    s->add_option("--config", config_path, "JSON run configuration")->required();
    s->add_option("--json", json_path, "write the JSON report to this path");
    s->add_option("--cache-dir", cache_dir, "Groebner cache directory");
    s->add_option("--degree", degree, "word/internal degree for checks");
    s->add_option("--slack", slack, "slack window for exactness witnesses");
    s->add_option("--position", position, "exactness position (0..3)");
    s->add_option("--k-max", k_max, "top homological degree for the oracle");
    s->add_option("--budget-mb", budget_mb, "memory budget for oracle/bar computations");
    s->add_flag("--check", "run the verification passes (default behaviour)");
    subs.push_back(s);
  }

  CLI11_PARSE(app, argc, argv);

  std::string cmd;
  for (size_t i = 0; i < commands.size(); ++i)
    if (subs[i]->parsed()) cmd = commands[i];

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  if (degree >= 0) cfg.degree = degree;
  if (slack >= 0) cfg.slack = slack;
  if (position >= -1) cfg.position = position;
  if (k_max >= 0) cfg.k_max = k_max;
  if (budget_mb >= 0) cfg.budget_mb = budget_mb;

  Report rep = run_command(cmd, cfg, cache_dir);
  std::cout << emit_report_text(rep);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 3;
    }
    out << emit_report_json(rep);
  }
  return exit_code_for(rep);
}
