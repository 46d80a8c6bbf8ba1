#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oco/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Optimistic online learning: games, regret bounds, monotone diagnostics"};
  app.require_subcommand(1);

  oco::CliOptions options;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  app.add_option("--seed", seed, "Run a single seed instead of the config's seed list");
  app.add_option("--tolerance", tolerance, "Margin tolerance for violation checks");
  app.add_option("--out-dir", options.out_dir, "Directory for CSV, JSON and SVG output");
  app.add_flag("--serial", options.serial, "Use the serial reference kernels");

  std::string config_path;
  std::string log_path;
  std::string axis;
  std::vector<double> values;

  auto* run = app.add_subcommand("run", "Play every seed and check the selected bounds");
  run->add_option("config", config_path, "Config file")->required();

  auto* sweep = app.add_subcommand("sweep", "Re-run a config over values of one numeric key");
  sweep->add_option("config", config_path, "Base config file")->required();
  sweep->add_option("--axis", axis, "Config key or alias (sigma, eta, theta, G, D)")->required();
  sweep->add_option("--values", values, "Values for the axis")->expected(0, -1)->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Re-evaluate bounds from a stored game log");
  verify->add_option("log", log_path, "Log CSV written by run")->required();

  auto* monotone = app.add_subcommand("monotone", "Loop integrals, Regret^n and meta checks");
  monotone->add_option("config", config_path, "Config file")->required();

  // Flags are accepted before or after the subcommand.
  for (auto* sub : {run, sweep, verify, monotone}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? oco::kExitPass : oco::kExitConfig;
  }
  if (app.count("--seed")) options.seed = seed;
  if (app.count("--tolerance")) options.tolerance = tolerance;

  if (*run) return oco::cmd_run(config_path, options, std::cout, std::cerr);
  if (*sweep) return oco::cmd_sweep(config_path, axis, values, options, std::cout, std::cerr);
  if (*verify) return oco::cmd_verify(log_path, options, std::cout, std::cerr);
  if (*monotone) return oco::cmd_monotone(config_path, options, std::cout, std::cerr);
  return oco::kExitConfig;
}
