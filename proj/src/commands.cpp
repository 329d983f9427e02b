#include "gaitkit/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "gaitkit/config.hpp"
#include "gaitkit/errors.hpp"
#include "gaitkit/planner.hpp"
#include "gaitkit/stability.hpp"
#include "gaitkit/svg.hpp"
#include "gaitkit/trajectory_io.hpp"

namespace gaitkit {

namespace {

RunConfig resolve_config(const CliOptions& opts) {
  RunConfig config =
      opts.config_path ? load_config(*opts.config_path) : RunConfig{};
  if (opts.steps) config.gait.n_steps = *opts.steps;
  if (opts.step_length) config.gait.step_length = *opts.step_length;
  if (opts.step_height) config.gait.step_height = *opts.step_height;
  if (opts.sway) config.gait.sway_angle = *opts.sway;
  if (opts.rate) config.gait.sample_rate = *opts.rate;
  if (opts.threshold) config.threshold = *opts.threshold;
  config.validate();
  return config;
}

// Loads the CSV/manifest pair behind a check or render and stitches the
// Trajectory back together. Refuses a manifest whose config hash does not
// match the active config: the caller would be checking against geometry the
// trajectory was not planned with.
Trajectory load_checkable(const std::string& trajectory_path,
                          const RunConfig& config) {
  Trajectory traj = read_trajectory_csv(trajectory_path);
  const Manifest manifest = read_manifest(manifest_path_for(trajectory_path));

  if (manifest.config_hash != config_hash(config)) {
    throw ConfigError("config hash " + config_hash(config) +
                      " does not match manifest " + manifest.config_hash +
                      "; pass the config the trajectory was planned with");
  }
  if (manifest.n_samples != traj.samples.size()) {
    throw MalformedInputError(
        "manifest expects " + std::to_string(manifest.n_samples) +
        " samples, trajectory has " + std::to_string(traj.samples.size()));
  }
  if (traj.samples.size() >= 2 &&
      std::abs(manifest.sample_rate - traj.sample_rate) >
          1e-6 * manifest.sample_rate) {
    throw MalformedInputError("manifest sample rate disagrees with the CSV grid");
  }
  traj.phases = manifest.phases;
  traj.geom = config.geometry;
  traj.sample_rate = manifest.sample_rate;
  return traj;
}

int config_failure(std::ostream& err, const std::exception& e) {
  err << "config error: " << e.what() << '\n';
  return kExitConfig;
}

int input_failure(std::ostream& err, const std::exception& e) {
  err << "input error: " << e.what() << '\n';
  return kExitBadInput;
}

}  // namespace

int run_plan(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = resolve_config(opts);
  } catch (const ConfigError& e) {
    return config_failure(err, e);
  } catch (const InvalidParamsError& e) {
    return config_failure(err, e);
  }

  Trajectory traj;
  try {
    traj = plan_walk(config.gait, config.geometry);
  } catch (const PlanError& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  }

  const std::string csv_path = opts.out.value_or(config.output.trajectory);
  try {
    write_trajectory_csv(traj, csv_path);
    Manifest manifest;
    manifest.config_hash = config_hash(config);
    manifest.geometry = config.geometry;
    manifest.gait = config.gait;
    manifest.phases = traj.phases;
    manifest.sample_rate = traj.sample_rate;
    manifest.n_samples = traj.samples.size();
    write_manifest(manifest, manifest_path_for(csv_path));
  } catch (const MalformedInputError& e) {
    return input_failure(err, e);
  }

  out << "planned " << traj.samples.size() << " samples across "
      << traj.phases.size() << " phases (" << format_double(traj.duration())
      << " s) -> " << csv_path << '\n';
  return kExitOk;
}

int run_check(const std::string& trajectory_path, const CliOptions& opts,
              std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = resolve_config(opts);
  } catch (const ConfigError& e) {
    return config_failure(err, e);
  } catch (const InvalidParamsError& e) {
    return config_failure(err, e);
  }

  StabilityReport report;
  try {
    const Trajectory traj = load_checkable(trajectory_path, config);
    report = check_trajectory(traj, config.geometry, config.threshold);
    write_report_csv(report, opts.out.value_or(config.output.report));
  } catch (const ConfigError& e) {
    return config_failure(err, e);
  } catch (const Error& e) {
    return input_failure(err, e);
  }

  out << "min margin " << format_double(report.min_margin) << " m at t="
      << format_double(report.min_margin_t) << " s (threshold "
      << format_double(report.threshold) << "): "
      << (report.pass ? "PASS" : "FAIL") << '\n';
  return report.pass ? kExitOk : kExitUnstable;
}

int run_render(const std::string& trajectory_path, const CliOptions& opts,
               std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = resolve_config(opts);
  } catch (const ConfigError& e) {
    return config_failure(err, e);
  } catch (const InvalidParamsError& e) {
    return config_failure(err, e);
  }

  const std::string svg_path = opts.out.value_or(config.output.svg);
  try {
    const Trajectory traj = load_checkable(trajectory_path, config);
    const std::string svg = render_walk_svg(traj, config.geometry);
    std::ofstream file(svg_path, std::ios::binary);
    if (!file || !(file << svg)) {
      throw MalformedInputError("write failed: " + svg_path);
    }
  } catch (const ConfigError& e) {
    return config_failure(err, e);
  } catch (const Error& e) {
    return input_failure(err, e);
  }

  out << "rendered " << svg_path << '\n';
  return kExitOk;
}

int run_config_dump(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = resolve_config(opts);
    out << config_to_json(config).dump(2) << '\n';
  } catch (const ConfigError& e) {
    return config_failure(err, e);
  } catch (const InvalidParamsError& e) {
    return config_failure(err, e);
  }
  return kExitOk;
}

}  // namespace gaitkit
