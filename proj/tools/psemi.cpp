// Batch front end: reads a JSON job config, runs one command of the
// library, writes JSONL/DOT/CSV artifacts with deterministic content.
//
// Exit codes: 0 success, 2 configuration error, 3 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psemi/psemi.hpp"

namespace {

// "--set key=value" override; value is parsed as JSON when possible and
// treated as a string otherwise. "output.jsonl=path" addresses one level
// into an object.
void apply_override(nlohmann::json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw psemi::ConfigError("--set expects key=value, got \"" + assignment +
                             "\"");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  nlohmann::json value = nlohmann::json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  const auto dot = key.find('.');
  if (dot == std::string::npos) {
    config[key] = value;
  } else {
    config[key.substr(0, dot)][key.substr(dot + 1)] = value;
  }
}

int resolve_workers(int flag_value) {
  if (const char* env = std::getenv("PSEMI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    std::cerr << "warning: ignoring invalid PSEMI_THREADS value \"" << env
              << "\"\n";
  }
  return flag_value >= 1 ? flag_value : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "C-semigroup toolkit: P-semigroup checks, the associated automaton, "
      "and exhaustive enumeration by genus, Frobenius element or "
      "multiplicity"};
  std::string config_path;
  std::vector<std::string> overrides;
  int workers = 1;
  app.add_option("config", config_path, "job configuration file (JSON)")
      ->required();
  app.add_option("--set", overrides,
                 "override a config key, e.g. --set g=4 or --set "
                 "output.jsonl=tree.jsonl");
  app.add_option("--workers", workers,
                 "worker threads for enumeration; never affects output "
                 "bytes (PSEMI_THREADS overrides)");
  CLI11_PARSE(app, argc, argv);

  nlohmann::json raw;
  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config file " << config_path << "\n";
      return 2;
    }
    raw = nlohmann::json::parse(in);
    for (const std::string& assignment : overrides) {
      apply_override(raw, assignment);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    psemi::JobConfig cfg = psemi::parse_job_config(raw);
    psemi::run_job(cfg, std::cout, std::cerr, resolve_workers(workers));
    return 0;
  } catch (const psemi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
