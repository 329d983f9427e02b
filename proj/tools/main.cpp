#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gaitkit/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"statically stable gait planner for a 10-DOF biped"};
  app.require_subcommand(1);

  gaitkit::CliOptions opts;
  std::string trajectory_path;

  auto add_config_flag = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
  };
  auto add_gait_flags = [&](CLI::App* cmd) {
    cmd->add_option("--steps", opts.steps, "number of full steps");
    cmd->add_option("--step-length", opts.step_length, "stride length [m]");
    cmd->add_option("--step-height", opts.step_height, "swing clearance [m]");
    cmd->add_option("--sway", opts.sway, "lateral sway angle [rad]");
    cmd->add_option("--rate", opts.rate, "sample rate [Hz]");
  };

  CLI::App* plan = app.add_subcommand("plan", "plan a walk and write CSV + manifest");
  add_config_flag(plan);
  add_gait_flags(plan);
  plan->add_option("--out", opts.out, "trajectory CSV path");

  CLI::App* check = app.add_subcommand("check", "verify stability of a planned walk");
  check->add_option("trajectory", trajectory_path, "trajectory CSV")->required();
  add_config_flag(check);
  add_gait_flags(check);
  check->add_option("--threshold", opts.threshold, "margin threshold [m]");
  check->add_option("--out", opts.out, "margin report CSV path");

  CLI::App* render = app.add_subcommand("render", "draw the walk as SVG");
  render->add_option("trajectory", trajectory_path, "trajectory CSV")->required();
  add_config_flag(render);
  add_gait_flags(render);
  render->add_option("--out", opts.out, "SVG path");

  CLI::App* config_cmd = app.add_subcommand("config", "inspect configuration");
  add_config_flag(config_cmd);
  bool dump = false;
  config_cmd->add_flag("--dump", dump, "print the effective config as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gaitkit::kExitConfig;
  }

  if (plan->parsed()) {
    return gaitkit::run_plan(opts, std::cout, std::cerr);
  }
  if (check->parsed()) {
    return gaitkit::run_check(trajectory_path, opts, std::cout, std::cerr);
  }
  if (render->parsed()) {
    return gaitkit::run_render(trajectory_path, opts, std::cout, std::cerr);
  }
  if (config_cmd->parsed()) {
    if (!dump) {
      std::cerr << "config: nothing to do (use --dump)\n";
      return gaitkit::kExitConfig;
    }
    return gaitkit::run_config_dump(opts, std::cout, std::cerr);
  }
  return gaitkit::kExitConfig;
}
