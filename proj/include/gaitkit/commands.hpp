#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace gaitkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnstable = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitBadInput = 4;

// Command-line overrides layered on top of the config file (or defaults).
struct CliOptions {
  std::optional<std::string> config_path;
  std::optional<int> steps;
  std::optional<double> step_length;
  std::optional<double> step_height;
  std::optional<double> sway;
  std::optional<double> rate;
  std::optional<double> threshold;
  std::optional<std::string> out;
};

int run_plan(const CliOptions& opts, std::ostream& out, std::ostream& err);
int run_check(const std::string& trajectory_path, const CliOptions& opts,
              std::ostream& out, std::ostream& err);
int run_render(const std::string& trajectory_path, const CliOptions& opts,
               std::ostream& out, std::ostream& err);
int run_config_dump(const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace gaitkit
