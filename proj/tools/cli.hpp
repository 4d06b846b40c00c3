#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rhoplane::cli {

enum class ExitCode : int { Ok = 0, PropertyFailure = 1, Usage = 2, Numerical = 3 };

struct RunConfig {
  std::string command;  // check|polygon|ellipse|area|sweep|probe-even|render
  std::vector<std::string> specs;
  std::vector<double> rhos;
  std::optional<std::pair<int, int>> kn;
  double seed_theta = 0.0;
  int samples = 256;
  double tol = 1e-8;
  double orth_tol = 1e-9;
  double close_tol = 1e-8;
  int max_steps = 2000;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string out;     // empty: stdout
  std::string format;  // json|csv|svg; empty: inferred from `out`
  bool show_ellipse = false;
  bool show_polygon = false;
  std::string from_json;
  std::string config_file;

  nlohmann::ordered_json to_json() const;
};

/// Thrown for malformed command lines and invalid configurations.
struct UsageError {
  std::string message;
};

/// Parses argv (without the program name) into a validated RunConfig, merging
/// a JSON config file when --config is given (flags win).
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a configuration. Artifacts go to config.out or `out`; structured
/// errors go to `err`. Nothing is written when the run fails before its
/// artifact is complete.
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage-error handling.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhoplane::cli
